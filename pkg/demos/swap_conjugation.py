"""Build the global conjugator for the swap e <-> f on the three-edge graph
and check it against the identity embedding."""

from lpa import parse_element
from lpa.faithfulness import (HomPair, assemble_global_witness, check_cond4,
                              example42_data, example42_demo)

d = example42_data()
hp = HomPair(d["phi"], d["psi"])
x, y = assemble_global_witness(hp, d["edge_wits"], d["sink_wits"])
print("assembled x =", x)
print("assembled y =", y)
print(check_cond4(hp, x, y, plus=True).render())
print()
print(example42_demo().render())

w = parse_element("e f* + f e* + g g* + v", d["algebra"])
print("\nw * w =", w * w)
