"""Finitely presented modules over finite rings.

A module is the cokernel of its presentation matrix phi: R^q -> R^p.
Internally it is also modelled as a finite abelian group: R^p is Z^{kp}
and the cokernel is Z^{kp} modulo the additive orders and the Z-span of
e_s * (column of phi).  Smith form gives coordinates ("codes") in which
addition is coordinatewise and every ring element acts by an integer
matrix.  The code model is only an indexing device; presentations stay
the source of truth.
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import log

import numpy as np

from .config import check_cap
from .errors import RingMismatchError, SpecError
from .ideal import (enumerate_ideals, ideal_closure, quotient_ring, require_local,
                    zero_ideal)
from .snf import FiniteQuotient, as_rows


class Presentation:
    """A p x q matrix over a finite ring; the module is its cokernel."""

    def __init__(self, ring, rows, cols, entries):
        self.ring = ring
        self.rows = int(rows)
        self.cols = int(cols)
        entries = [list(r) for r in entries]
        if self.rows < 0 or self.cols < 0:
            raise SpecError("presentation dimensions must be nonnegative")
        if len(entries) != self.rows and not (self.rows == 0 and not entries):
            raise SpecError(f"presentation declares {self.rows} rows, got {len(entries)}")
        if any(len(r) != self.cols for r in entries):
            raise SpecError(f"presentation declares {self.cols} columns")
        self.entries = tuple(tuple(ring.reduce(x) for x in r) for r in entries)

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def key(self):
        return (self.ring, self.rows, self.cols, self.entries)

    def __eq__(self, other):
        return isinstance(other, Presentation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        rows = "; ".join(" ".join(str(list(x)) for x in r) for r in self.entries)
        return f"<Presentation {self.rows}x{self.cols} over {self.ring.name()}: [{rows}]>"


class FPModule:
    """coker(phi) for a presentation phi."""

    def __init__(self, presentation):
        self.presentation = presentation

    @classmethod
    def from_matrix(cls, ring, matrix, rows=None):
        matrix = [list(r) for r in matrix]
        p = len(matrix) if rows is None else rows
        q = len(matrix[0]) if matrix else 0
        return cls(Presentation(ring, p, q, matrix))

    @property
    def ring(self):
        return self.presentation.ring

    @property
    def rows(self):
        return self.presentation.rows

    def __eq__(self, other):
        return isinstance(other, FPModule) and self.presentation == other.presentation

    def __hash__(self):
        return hash(self.presentation)

    def __repr__(self):
        return f"<FPModule coker {self.presentation!r}>"

    # -- abelian group model ------------------------------------------------------

    def flatten(self, vec):
        return tuple(x for elem in vec for x in elem)

    def unflatten(self, flat):
        k = self.ring.k
        return tuple(self.ring.reduce(flat[i * k:(i + 1) * k]) for i in range(self.rows))

    @cached_property
    def group(self):
        R, p, k = self.ring, self.rows, self.ring.k
        n = k * p
        relations = []
        for i in range(p):
            for t, d in enumerate(R.orders):
                v = [0] * n
                v[i * k + t] = d
                relations.append(v)
        for col in self.presentation.columns():
            for s in range(k):
                relations.append(self.flatten(R.mul(R.gen(s), c) for c in col))
        return FiniteQuotient(n, relations)

    @property
    def invariants(self):
        return self.group.invariants

    @property
    def order(self):
        return self.group.order

    def code(self, vec):
        return self.group.project(self.flatten(vec))

    @cached_property
    def _radix(self):
        strides, s = [], 1
        for c in reversed(self.invariants):
            strides.append(s)
            s *= c
        return np.array(list(reversed(strides)), dtype=np.int64)

    @cached_property
    def _c(self):
        return np.array(self.invariants, dtype=np.int64)

    def code_index(self, codes):
        codes = as_rows(codes, len(self.invariants))
        return codes.dot(self._radix)

    @cached_property
    def all_codes(self):
        """Every element as a code, in mixed-radix order."""
        idx = np.arange(self.order, dtype=np.int64)
        return (idx[:, None] // self._radix[None, :]) % self._c[None, :] if self.invariants \
            else np.zeros((1, 0), dtype=np.int64)

    def lift(self, code):
        """A vector in R^p representing ``code``."""
        return self.unflatten(self.group.lift(code))

    @cached_property
    def _basis_vectors(self):
        return [self.unflatten(v) for v in self.group.basis_lifts()]

    @cached_property
    def _generator_action(self):
        """A[s] is the integer matrix of e_s acting on codes."""
        R = self.ring
        n = len(self.invariants)
        mats = []
        for s in range(R.k):
            cols = [self.code(tuple(R.mul(R.gen(s), x) for x in v)) for v in self._basis_vectors]
            mats.append(np.array(cols, dtype=np.int64).T.reshape(n, n))
        return mats

    def action_matrix(self, r):
        n = len(self.invariants)
        M = np.zeros((n, n), dtype=np.int64)
        for x, A in zip(r, self._generator_action):
            if x:
                M += x * A
        return M

    def act(self, r, codes):
        """r * x for an array of codes x."""
        codes = as_rows(codes, len(self.invariants))
        return codes.dot(self.action_matrix(r).T) % self._c

    def add_codes(self, a, b):
        return (np.asarray(a) + np.asarray(b)) % self._c

    def generator_code(self, i):
        R = self.ring
        return self.code(tuple(R.one if j == i else R.zero for j in range(self.rows)))

    @cached_property
    def orbit_table(self):
        """O[a, x] = code index of a*x, for ring element index a and code index x."""
        R = self.ring
        check_cap(R.order * self.order, "enum", "orbit table")
        return np.stack([self.code_index(self.act(a, self.all_codes)) for a in R.elements])

    # -- canonical representatives -------------------------------------------------

    @cached_property
    def _canonical(self):
        R, p = self.ring, self.rows
        check_cap(R.order ** p, "enum", "coset scan of R^p")
        arr = R.element_array
        if p == 0:
            vecs = np.zeros((1, 0), dtype=np.int64)
        else:
            grids = np.indices((R.order,) * p).reshape(p, -1).T
            vecs = np.concatenate([arr[grids[:, i]] for i in range(p)], axis=1)
        idx = self.code_index(self.group.project_many(vecs))
        _, first = np.unique(idx, return_index=True)
        first.sort()
        reps = [self.unflatten(vecs[i].tolist()) for i in first]
        code_to_rep = {int(idx[i]): rep for i, rep in zip(first, reps)}
        return reps, code_to_rep

    def canonical(self, vec):
        """Lexicographically least member of the coset of ``vec``."""
        return self._canonical[1][int(self.code_index(self.code(vec))[0])]

    def canonical_of_code(self, code):
        return self._canonical[1][int(self.code_index(code)[0])]

    def equal(self, u, v):
        return self.code(u) == self.code(v)


def elements_of(E):
    """Canonical coset representatives of E, lexicographically sorted."""
    return list(E._canonical[0])


def column_span_size(E):
    return E.ring.order ** E.rows // E.order


# -- minimal presentations and the flattening ideal ---------------------------------


@dataclass
class Minimization:
    """Result of unit-pivot elimination.

    ``kept`` lists the original generators that survive; ``express[g]``
    writes original generator g in terms of the surviving ones.
    """
    presentation: Presentation
    kept: list
    express: list


def minimize(E):
    """Eliminate unit entries until none are left, then drop zero columns."""
    R = E.ring
    require_local(R)
    P = E.presentation
    A = [list(r) for r in P.entries]
    rows = list(range(P.rows))
    express = [[R.one if i == j else R.zero for j in range(P.rows)] for i in range(P.rows)]
    while True:
        pivot = next(((i, j) for i in range(len(A)) for j in range(len(A[i]))
                      if R.is_unit(A[i][j])), None)
        if pivot is None:
            break
        i, j = pivot
        uinv = R.inverse(A[i][j])
        # relation column j solves generator i in terms of the others
        coeff = [R.neg(R.mul(uinv, A[k][j])) for k in range(len(A))]
        for g in range(len(express)):
            c = express[g][i]
            if c != R.zero:
                express[g] = [R.add(express[g][k], R.mul(c, coeff[k])) for k in range(len(A))]
        scaled_row = [R.mul(uinv, x) for x in A[i]]
        A = [[R.sub(A[k][l], R.mul(A[k][j], scaled_row[l])) for l in range(len(A[k])) if l != j]
             for k in range(len(A)) if k != i]
        express = [[x for k, x in enumerate(row) if k != i] for row in express]
        del rows[i]
    p = len(rows)
    cols = [j for j in range(len(A[0]) if A else 0) if any(A[i][j] != R.zero for i in range(p))]
    if p == 0:
        cols = []
    entries = [[A[i][j] for j in cols] for i in range(p)]
    return Minimization(Presentation(R, p, len(cols), entries), rows, express)


def minimal_presentation(E):
    return minimize(E).presentation


def entries_ideal(P):
    """Ideal generated by the entries of a presentation matrix."""
    entries = sorted({x for row in P.entries for x in row} - {P.ring.zero})
    return ideal_closure(P.ring, entries) if entries else zero_ideal(P.ring)


def flattening_ideal(E):
    """The ideal I with E/JE free over R/J exactly when I is contained in J."""
    return entries_ideal(minimal_presentation(E))


def base_change(E, hom):
    if hom.source != E.ring:
        raise RingMismatchError("hom source is not the module's ring")
    P = E.presentation
    entries = [[hom(x) for x in row] for row in P.entries]
    return FPModule(Presentation(hom.target, P.rows, P.cols, entries))


def free_module(R, r):
    return FPModule(Presentation(R, r, 0, [[] for _ in range(r)]))


def standard_module(R, a, n, m):
    """(R/(a))^n + R^m, torsion generators first."""
    entries = [[a if i == j else R.zero for j in range(n)] for i in range(n + m)]
    return FPModule(Presentation(R, n + m, n, entries))


def direct_sum(E, F):
    if E.ring != F.ring:
        raise RingMismatchError("direct sum of modules over different rings")
    R = E.ring
    P, Q = E.presentation, F.presentation
    entries = [list(r) + [R.zero] * Q.cols for r in P.entries]
    entries += [[R.zero] * P.cols + list(r) for r in Q.entries]
    return FPModule(Presentation(R, P.rows + Q.rows, P.cols + Q.cols, entries))


# -- homomorphisms -------------------------------------------------------------------


class ModuleHom:
    """An R-linear map given by the codes of the generator images."""

    def __init__(self, source, target, images):
        if source.ring != target.ring:
            raise RingMismatchError("module hom between modules over different rings")
        self.source = source
        self.target = target
        self.images = tuple(tuple(int(x) for x in y) for y in images)

    @classmethod
    def from_vectors(cls, source, target, vectors):
        return cls(source, target, [target.code(v) for v in vectors])

    def image_vectors(self):
        return [self.target.canonical_of_code(y) for y in self.images]

    def respects_relations(self):
        F = self.target
        for col in self.source.presentation.columns():
            total = np.zeros(len(F.invariants), dtype=np.int64)
            for c, y in zip(col, self.images):
                total = F.add_codes(total, F.act(c, [y])[0])
            if total.any():
                return False
        return True

    @cached_property
    def matrix(self):
        """Integer matrix sending source codes to target codes."""
        E, F = self.source, self.target
        cols = [self.apply_vector(v) for v in E._basis_vectors]
        return np.array(cols, dtype=np.int64).T.reshape(len(F.invariants), len(E.invariants))

    def apply_vector(self, vec):
        F = self.target
        total = np.zeros(len(F.invariants), dtype=np.int64)
        for c, y in zip(vec, self.images):
            if c != F.ring.zero:
                total = F.add_codes(total, F.act(c, [y])[0])
        return tuple(int(x) for x in total)

    def __call__(self, vec):
        """Image of a source vector, as a canonical target representative."""
        return self.target.canonical_of_code(self.apply_vector(vec))

    def apply_codes(self, codes):
        codes = as_rows(codes, len(self.source.invariants))
        return codes.dot(self.matrix.T) % self.target._c

    @cached_property
    def permutation(self):
        """Code index of the image of every source element."""
        return self.target.code_index(self.apply_codes(self.source.all_codes))

    def is_injective(self):
        return len(np.unique(self.permutation)) == self.source.order

    def is_bijective(self):
        return self.source.order == self.target.order and self.is_injective()

    def compose(self, first):
        """``self o first``."""
        if first.target is not self.source and first.target != self.source:
            raise RingMismatchError("cannot compose: modules do not match")
        images = [self.apply_vector(first.target.lift(y)) for y in first.images]
        return ModuleHom(first.source, self.target, images)

    @classmethod
    def identity(cls, E):
        return cls(E, E, [E.generator_code(i) for i in range(E.rows)])

    def __eq__(self, other):
        return (isinstance(other, ModuleHom) and self.source == other.source
                and self.target == other.target and self.images == other.images)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"<ModuleHom images={[list(y) for y in self.images]}>"


def _valid_image_tuples(E, F):
    """Boolean mask over all |F|^p image tuples (mixed radix, first generator major)."""
    p = E.rows
    check_cap(F.order ** p, "enum", "hom candidate tuples")
    grids = np.indices((F.order,) * p).reshape(p, -1).T if p else np.zeros((1, 0), dtype=np.int64)
    ok = np.ones(len(grids), dtype=bool)
    codes = F.all_codes
    for col in E.presentation.columns():
        total = np.zeros((len(grids), len(F.invariants)), dtype=np.int64)
        for i, c in enumerate(col):
            if c == F.ring.zero:
                continue
            total += F.act(c, codes)[grids[:, i]]
        ok &= ~(total % F._c).any(axis=1)
    return grids, ok


def hom_enumerate(E, F):
    """All R-linear maps E -> F, ordered by the code indices of the generator images."""
    if E.ring != F.ring:
        raise RingMismatchError("hom set between modules over different rings")
    grids, ok = _valid_image_tuples(E, F)
    codes = F.all_codes
    return [ModuleHom(E, F, [codes[j] for j in row]) for row in grids[ok]]


def _span_indices(F, gens):
    """Code indices of the submodule generated by codes ``gens``."""
    O = F.orbit_table
    span = np.array([0], dtype=np.int64)
    for y in gens:
        span = np.unique(_add_index_sets(F, span, O[:, int(F.code_index(y)[0])]))
    return span


def submodule_indices(F, gens):
    return _span_indices(F, gens)


def _distinct_per_row(idx):
    s = np.sort(idx, axis=1)
    return 1 + (np.diff(s, axis=1) != 0).sum(axis=1)


def find_isomorphism(E, F):
    """Brute-force search for a bijective hom E -> F (None if there is none).

    A hom between modules of equal size is bijective iff its image spans F,
    so each relation-respecting tuple is tested for spanning.  The last
    generator's image is vectorized over all candidates.
    """
    if E.ring != F.ring:
        raise RingMismatchError("modules over different rings")
    if E.order != F.order:
        return None
    if E.rows == 0:
        return ModuleHom(E, F, []) if F.order == 1 else None
    grids, ok = _valid_image_tuples(E, F)
    O = F.orbit_table
    n = F.order
    codes = F.all_codes
    prefixes = {}
    for pos in np.nonzero(ok)[0]:
        prefixes.setdefault(tuple(grids[pos, :-1]), []).append(grids[pos, -1])
    for prefix, lasts in prefixes.items():
        span = np.array([0], dtype=np.int64)
        for y in prefix:
            span = np.unique(_add_index_sets(F, span, O[:, y]))
        lasts = np.array(lasts)
        if len(span) * F.ring.order < n:
            continue
        cand = _add_index_sets_many(F, span, O[:, lasts].T)
        good = np.nonzero(_distinct_per_row(cand) == n)[0]
        if len(good):
            images = [codes[y] for y in prefix] + [codes[lasts[good[0]]]]
            return ModuleHom(E, F, images)
    return None


def _add_index_sets(F, a, b):
    """All sums x + y, x in index array a, y in index array b."""
    ca, cb = F.all_codes[a], F.all_codes[b]
    return F.code_index(as_rows((ca[:, None, :] + cb[None, :, :]) % F._c, len(F.invariants)))


def _add_index_sets_many(F, a, bs, block=1 << 20):
    """Row r: all sums of a with bs[r]; shape (len(bs), len(a)*bs.shape[1])."""
    ca = F.all_codes[a]
    step = max(1, block // max(1, len(a) * bs.shape[1]))
    out = []
    for start in range(0, len(bs), step):
        cb = F.all_codes[bs[start:start + step]]
        s = (ca[None, :, None, :] + cb[:, None, :, :]) % F._c
        out.append(s.reshape(len(cb), len(a) * bs.shape[1], len(F.invariants)).dot(F._radix))
    return np.concatenate(out) if out else np.zeros((0, len(a) * bs.shape[1]), dtype=np.int64)


# -- freeness oracle --------------------------------------------------------------


@dataclass
class FreeVerdict:
    free: bool
    rank: int = None
    basis: list = field(default_factory=list)


def is_free_oracle(E):
    """Decide freeness by exhaustive search for a basis.

    Hom(R^r, E) is E^r; such a map is an isomorphism iff a -> sum a_j x_j is
    injective on R^r.  A tuple whose prefix is already non-injective cannot
    extend to a basis, which prunes the search without losing completeness.
    Independent of the flattening ideal.
    """
    R = E.ring
    if R.order == 1:
        return FreeVerdict(True, 0)
    size = E.order
    r = round(log(size, R.order)) if size > 1 else 0
    if R.order ** r != size:
        return FreeVerdict(False)
    if r == 0:
        return FreeVerdict(True, 0)
    O = E.orbit_table            # O[a, x]

    def extend(span, basis):
        if len(basis) == r:
            return basis
        cand = _add_index_sets_many(E, span, O.T)     # row x: span + R*x
        want = len(span) * R.order
        for x in np.nonzero(_distinct_per_row(cand) == want)[0]:
            found = extend(np.unique(cand[x]), basis + [int(x)])
            if found is not None:
                return found
        return None

    basis = extend(np.array([0], dtype=np.int64), [])
    if basis is None:
        return FreeVerdict(False)
    return FreeVerdict(True, r, [E.lift(E.all_codes[x]) for x in basis])


# -- universal property of the flattening ideal ---------------------------------------


@dataclass
class FlatteningRow:
    ideal: object
    free: bool
    contains: bool

    @property
    def agrees(self):
        return self.free == self.contains


@dataclass
class FlatteningReport:
    flattening_ideal: object
    rows: list
    uniquely_determined: bool

    @property
    def passed(self):
        return all(r.agrees for r in self.rows) and self.uniquely_determined


_quotient_cache = {}


def cached_quotient(R, J):
    key = (R, J.elements)
    if key not in _quotient_cache:
        _quotient_cache[key] = quotient_ring(R, J)
    return _quotient_cache[key]


def verify_flattening_universal(E, ideals=None):
    """Check E/JE free over R/J <=> I in J for every ideal J of R.

    Freeness is decided by ``is_free_oracle``.  Also checks that I is the
    only ideal whose up-set matches the free verdicts.
    """
    R = E.ring
    I = flattening_ideal(E)
    ideals = enumerate_ideals(R) if ideals is None else ideals
    rows = []
    for J in ideals:
        _, pi = cached_quotient(R, J)
        free = is_free_oracle(base_change(E, pi)).free
        rows.append(FlatteningRow(J, free, I.elements <= J.elements))
    free_set = {J.elements for J, row in zip(ideals, rows) if row.free}
    matches = [J0 for J0 in ideals
               if {J.elements for J in ideals if J0.elements <= J.elements} == free_set]
    unique = len(matches) == 1 and matches[0] == I
    return FlatteningReport(I, rows, unique)
