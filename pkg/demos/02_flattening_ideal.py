"""
When is a module free?
======================

The ideal generated by the entries of a minimal presentation decides it.
Quotienting by an ideal J frees the module exactly when J contains it.
"""

from modforge import (FPModule, flattening_ideal, is_free_oracle, minimal_presentation,
                      verify_flattening_universal, zmod)

R = zmod(4)

# two generators, the first killed by 2: Z/2 + Z/4
E = FPModule.from_matrix(R, [[(2,)], [(0,)]])
print("|E| =", E.order, "invariants", E.invariants)
I = flattening_ideal(E)
print("flattening ideal:", I.sorted_elements(), " brute-force free?", is_free_oracle(E).free)

# a presentation with a unit entry collapses to a free module
F = FPModule.from_matrix(R, [[(1,), (2,)], [(2,), (0,)]])
P = minimal_presentation(F)
print("minimal presentation:", P.rows, "x", P.cols, " free:", is_free_oracle(F).free)

# run the check over every ideal of Z/4
report = verify_flattening_universal(E)
for row in report.rows:
    print(f"  J = {row.ideal.sorted_elements()}: E/JE free = {row.free}, contains I = {row.contains}")
print("universal property holds:", report.passed, " unique:", report.uniquely_determined)
