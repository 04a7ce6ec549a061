"""
Small local rings and their ideals
==================================

Build a few finite rings from structure constants, list their ideals and
look at the maximal ideal and its minimal generators.
"""

from modforge import build_ring, enumerate_ideals, local_structure, minimal_generators, zmod
from modforge.ring import truncated_poly

# Z/16: a chain of ideals, one per divisor
R = zmod(16)
print("ideals of Z/16:", [I.order for I in enumerate_ideals(R)])

# F_2[x, y] truncated at degree 2; basis 1, x, y
S = truncated_poly(zmod(2), 2, 2)
info = local_structure(S)
print("F2[x,y]/(x,y)^2 local:", info.is_local,
      "residue field order:", info.residue_field_order,
      "nilpotency index:", info.nilpotency_index)
print("minimal generators of the maximal ideal:", minimal_generators(S, info.maximal_ideal))

# the same kind of ring from a raw table: F_4 = F_2[w]/(w^2 + w + 1)
F4 = build_ring({"kind": "table", "orders": [2, 2], "one": [1, 0],
                 "mul": [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]})
print("F4 ideals:", [I.order for I in enumerate_ideals(F4)])
