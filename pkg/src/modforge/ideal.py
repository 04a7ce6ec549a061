"""Ideals of finite rings: closure, arithmetic, quotients and local structure."""

from dataclasses import dataclass
from math import log

from .config import check_cap
from .errors import (NotLocalError, NotNilpotentError, RingMismatchError)
from .ring import FiniteRing, RingHom, units_of
from .snf import FiniteQuotient


class Ideal:
    """An ideal stored as its full element set.

    Two ideals are equal iff their element sets are; the generators are
    whatever the ideal was built from and carry no identity.
    """

    def __init__(self, ring, generators, elements):
        self.ring = ring
        self.generators = tuple(generators)
        self.elements = frozenset(elements)

    @property
    def order(self):
        return len(self.elements)

    def sorted_elements(self):
        return sorted(self.elements)

    def is_zero(self):
        return len(self.elements) == 1

    def is_unit_ideal(self):
        return len(self.elements) == self.ring.order

    def __contains__(self, a):
        return a in self.elements

    def __le__(self, other):
        _same_ring(self, other)
        return self.elements <= other.elements

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        gens = ", ".join(str(list(g)) for g in self.generators)
        return f"<Ideal ({gens}) of order {self.order} in {self.ring.name()}>"


def _same_ring(I, J):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


def _additive_span(R, seeds, start=None):
    """Additive subgroup generated by ``seeds`` (plus the set ``start``)."""
    found = set(start) if start else {R.zero}
    frontier = list(found)
    seeds = [s for s in set(seeds) if s != R.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seeds:
                y = R.add(x, s)
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return found


def ideal_closure(R, gens):
    """Smallest ideal containing ``gens``, by fixed-point closure.

    The R-span of g is the additive span of the e_i * g, so closing the
    additive group under those products suffices.
    """
    gens = [R.reduce(g) for g in gens]
    seeds = [R.mul(R.gen(i), g) for g in gens for i in range(R.k)]
    return Ideal(R, gens, _additive_span(R, seeds))


def zero_ideal(R):
    return Ideal(R, [], {R.zero})


def unit_ideal(R):
    return Ideal(R, [R.one], R.elements)


def ideal_sum(I, J):
    _same_ring(I, J)
    R = I.ring
    elems = {R.add(a, b) for a in I.elements for b in J.elements}
    return Ideal(R, I.generators + J.generators, elems)


def ideal_product(I, J):
    _same_ring(I, J)
    R = I.ring
    gens = sorted({R.mul(a, b) for a in I.generators for b in J.generators})
    return ideal_closure(R, gens)


def ideal_power(I, n):
    out = unit_ideal(I.ring)
    for _ in range(n):
        out = ideal_product(out, I)
    return out


def ideal_arith(op, I, J):
    """Dispatch ``product``, ``sum``, ``power`` (J an int) or ``contains`` (J <= I)."""
    if op == "product":
        return ideal_product(I, J)
    if op == "sum":
        return ideal_sum(I, J)
    if op == "power":
        return ideal_power(I, int(J))
    if op == "contains":
        _same_ring(I, J)
        return J.elements <= I.elements
    raise ValueError(f"unknown ideal operation {op!r}")


def ideal_of_elements(R, elements):
    """Wrap an already closed element set, keeping it as its own generator list."""
    elements = frozenset(elements)
    return Ideal(R, sorted(elements - {R.zero}), elements)


def quotient_ring(R, J):
    """``R/J`` with its projection.

    The additive group of R/J is Z^k modulo the additive orders and J's
    elements; its Smith form gives a canonical cyclic decomposition.
    """
    if J.ring != R:
        raise RingMismatchError("ideal is not an ideal of this ring")
    relations = [tuple(d if i == j else 0 for j in range(R.k)) for i, d in enumerate(R.orders)]
    relations += [a for a in J.sorted_elements() if a != R.zero]
    G = FiniteQuotient(R.k, relations) if R.k else None
    if G is None or not G.invariants:
        Q = FiniteRing((), (), (), label=f"{R.name()}/(1)")
        return Q, RingHom(R, Q, [() for _ in range(R.k)], validate=False)
    lifts = [R.reduce(v) for v in G.basis_lifts()]
    kq = len(lifts)
    mul = [[G.project(R.mul(lifts[s], lifts[t])) for t in range(kq)] for s in range(kq)]
    gens = ",".join(str(list(g)) for g in J.generators)
    Q = FiniteRing(G.invariants, G.project(R.one), mul, label=f"{R.name()}/({gens})")
    pi = RingHom(R, Q, [G.project(R.gen(i)) for i in range(R.k)])
    return Q, pi


def enumerate_ideals(R):
    """Every ideal of ``R`` exactly once, ordered by size then element list.

    Each ideal is a sum of principal ideals, so the principal ideals are
    closed under pairwise sums until nothing new appears.
    """
    check_cap(R.order, "ideals", "ring order for ideal enumeration")
    principal = {}
    for a in R.elements:
        I = ideal_closure(R, [a])
        principal.setdefault(I.elements, I)
    found = dict(principal)
    frontier = list(found.values())
    basics = list(principal.values())
    while frontier:
        nxt = []
        for I in frontier:
            for P in basics:
                if P.elements <= I.elements:
                    continue
                S = ideal_sum(I, P)
                if S.elements not in found:
                    found[S.elements] = S
                    nxt.append(S)
        frontier = nxt
    ideals = list(found.values())
    ideals.sort(key=lambda I: (I.order, I.sorted_elements()))
    return ideals


@dataclass(frozen=True)
class LocalStructure:
    is_local: bool
    maximal_ideal: Ideal = None
    residue_field_order: int = None
    nilpotency_index: int = None


def local_structure(R):
    """Locality test: R is local iff its non-units form an ideal."""
    unit_set = {u for u, _ in units_of(R)}
    nonunits = [a for a in R.elements if a not in unit_set]
    if not nonunits:
        return LocalStructure(False)
    nonunit_set = set(nonunits)
    for a in nonunits:
        for b in nonunits:
            if R.add(a, b) not in nonunit_set:
                return LocalStructure(False)
    m = Ideal(R, [a for a in nonunits if a != R.zero], nonunit_set)
    power, n = m, 1
    while not power.is_zero():
        power = ideal_product(power, m)
        n += 1
    return LocalStructure(True, m, R.order // m.order, n)


def require_local(R):
    info = _local_cache.get(R)
    if info is None:
        info = local_structure(R)
        _local_cache[R] = info
    if not info.is_local:
        raise NotLocalError(f"{R.name()} is not a local ring")
    return info


_local_cache = {}


def residue_dimension(R, I):
    """dim of I/mI over the residue field of local R."""
    info = require_local(R)
    mI = ideal_product(info.maximal_ideal, I)
    ratio = I.order // mI.order
    q = info.residue_field_order
    r = round(log(ratio, q)) if ratio > 1 else 0
    if q ** r != ratio:
        raise AssertionError("|I/mI| is not a power of the residue field order")
    return r


def minimal_generators(R, I):
    """Lexicographically first lift of a basis of I/mI.

    By Nakayama the returned elements generate I and no shorter list does.
    """
    info = require_local(R)
    mI = ideal_product(info.maximal_ideal, I)
    span = set(mI.elements)
    chosen = []
    for x in I.sorted_elements():
        if len(span) == I.order:
            break
        if x in span:
            continue
        chosen.append(x)
        px = ideal_closure(R, [x]).elements
        span = {R.add(a, b) for a in span for b in px}
    return chosen


def is_nilpotent(I):
    power = I
    seen = set()
    while not power.is_zero():
        if power.elements in seen:
            return False
        seen.add(power.elements)
        power = ideal_product(power, I)
    return True


@dataclass(frozen=True)
class SubalgebraReport:
    generates: bool
    residues_generate: bool
    extended_ideal: Ideal


def subalgebra_generates(hom, I, elems):
    """Does B = A[elems] for the A-algebra ``hom: A -> B``?

    Also reports whether the residues of ``elems`` generate B/IB over A,
    which for nilpotent I must force the first answer to be yes.
    """
    A, B = hom.source, hom.target
    if I.ring != A:
        raise RingMismatchError("I must be an ideal of the source ring")
    if not is_nilpotent(I):
        raise NotNilpotentError("I is not nilpotent")
    elems = [B.reduce(b) for b in elems]
    algebra = hom.image_set()
    frontier = list(algebra)
    while frontier:
        products = [B.mul(x, b) for x in frontier for b in elems]
        grown = _additive_span(B, products, start=algebra)
        frontier = list(grown - algebra)
        algebra = grown
    IB = ideal_closure(B, sorted({hom(a) for a in I.elements}))
    mod_IB = {B.add(a, b) for a in algebra for b in IB.elements}
    return SubalgebraReport(len(algebra) == B.order, len(mod_IB) == B.order, IB)
