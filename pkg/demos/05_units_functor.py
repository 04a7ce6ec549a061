"""
Units as automorphisms
======================

Over a test ring T, automorphisms of T/2T as a T-module are multiplication
by units of T/2T.  Compare the two counts over the corpus.
"""

from modforge import units_functor_points, units_of, zmod
from modforge.corpus import corpus_rings

for name, _, T in corpus_rings(16):
    G = units_functor_points(2, T)
    print(f"{name:7s} |GL_1(T/2T)| = {G.order:2d}  units: {sorted(G.labels)}")

for k in range(1, 5):
    print(f"|(Z/2^{k})^x| = {len(units_of(zmod(2 ** k)))}")
