"""
Splitting off the torsion
=========================

With a principal flattening ideal killed by the maximal ideal the module
splits as (R/(a))^n + R^m.  Otherwise quotient the ring until it does.
"""

from modforge import FPModule, reduce_to_obstruction, split_principal, zmod
from modforge.ring import truncated_poly

R = zmod(4)
E = FPModule.from_matrix(R, [[(2,), (2,)], [(2,), (2,)]])
cert = split_principal(E)
print(f"a = {cert.a}, n = {cert.n}, m = {cert.m}")
for name, ok in cert.check().items():
    print(f"  {name:28s} {ok}")

# the residue field of F_2[x, y]/(x, y)^2 needs a quotient first
S = truncated_poly(zmod(2), 2, 2)
k = FPModule.from_matrix(S, [[(0, 1, 0), (0, 0, 1)]])
trace = reduce_to_obstruction(k)
for description, hom in trace.steps:
    print(description, "->", hom.target.name(), "of order", hom.target.order)
dec = trace.decomposition
print(f"after reduction: n = {dec.n}, m = {dec.m}, flags = {trace.flags}")
