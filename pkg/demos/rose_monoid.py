"""Walk through the graded monoid of the rose with two petals.

[v] = 2t[v] holds (one expansion), while [v] and t[v] are separated by
specializing t to -1, which lands in Z/3.
"""

from lpa import builtin_graph, k0_t1, monoid_distinct, monoid_equal
from lpa.monoid import parse_monoid_element, specialize

g = builtin_graph("l2")
v, two_tv, tv = (parse_monoid_element(s, g) for s in ("[v]", "2 t [v]", "t [v]"))

eq = monoid_equal(v, two_tv, budget=10)
print("[v] vs 2t[v]:", "Equal" if eq.equal else "Unknown", "trace:", eq.trace)

dist = monoid_distinct(v, tv, [-1])
print("[v] vs t[v]: distinct at t =", dist.witness)
print("  specializations:", specialize(v, -1), "|", specialize(tv, -1))

for name in ("l2", "loop1", "arrow"):
    print(f"K0 / (t - 1) for {name}:", k0_t1(builtin_graph(name)))
