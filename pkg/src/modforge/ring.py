"""Finite commutative rings given by structure constants.

A ring is an additive group Z/d_1 x ... x Z/d_k together with the products
of its additive generators.  Elements are tuples of ints, coordinate i
reduced into [0, d_i).  Element order everywhere is lexicographic on these
tuples, which coincides with the mixed-radix index used by ``index``.
"""

from functools import cached_property
from itertools import product

import numpy as np

from .config import check_cap
from .errors import RingAxiomError, RingMismatchError, SpecError
from .snf import as_rows


class FiniteRing:
    """A finite commutative unital ring.

    ``mul[i][j]`` is the coefficient vector of ``e_i * e_j``.  Construction
    validates the axioms on generators; bilinearity makes that sufficient.
    """

    def __init__(self, orders, one, mul, label=None, validate=True):
        self.orders = tuple(int(d) for d in orders)
        k = len(self.orders)
        self.k = k
        try:
            self.one = self.reduce(one)
            self.mul_table = tuple(
                tuple(self.reduce(mul[i][j]) for j in range(k)) for i in range(k))
        except (TypeError, IndexError) as exc:
            raise SpecError(f"malformed ring table: {exc}") from None
        if len(one) != k or len(mul) != k or any(len(row) != k for row in mul):
            raise SpecError("ring table dimensions do not match the additive orders")
        self.label = label
        if validate:
            self._validate()

    # -- construction helpers -------------------------------------------------

    def reduce(self, vec):
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.k:
            raise SpecError(f"element {list(vec)} has {len(vec)} coordinates, ring has {self.k}")
        return tuple(x % d for x, d in zip(vec, self.orders))

    def _validate(self):
        if any(d < 1 for d in self.orders):
            raise SpecError(f"additive orders must be positive, got {list(self.orders)}")
        check_cap(self.order, "ring", "ring order")
        k, C = self.k, self.mul_table
        for i, j in product(range(k), repeat=2):
            if C[i][j] != C[j][i]:
                raise RingAxiomError(f"not commutative: e{i}*e{j} != e{j}*e{i}", (i, j))
            for d in (self.orders[i], self.orders[j]):
                if any(d * x % m for x, m in zip(C[i][j], self.orders)):
                    raise RingAxiomError(
                        f"e{i}*e{j} is not killed by the additive order {d}", (i, j))
        for i in range(k):
            if self.mul(self.one, self.gen(i)) != self.gen(i):
                raise RingAxiomError(f"one*e{i} != e{i}", (i,))
        for i, j, l in product(range(k), repeat=3):
            left = self.mul(C[i][j], self.gen(l))
            right = self.mul(self.gen(i), C[j][l])
            if left != right:
                raise RingAxiomError(
                    f"not associative on generators (e{i}, e{j}, e{l}): "
                    f"(e{i}e{j})e{l} = {list(left)} but e{i}(e{j}e{l}) = {list(right)}",
                    (i, j, l))

    # -- basic data -------------------------------------------------------------

    @cached_property
    def order(self):
        n = 1
        for d in self.orders:
            n *= d
        return n

    @property
    def zero(self):
        return (0,) * self.k

    def gen(self, i):
        return tuple(int(i == j) for j in range(self.k))

    def is_zero_ring(self):
        return self.order == 1

    def __eq__(self, other):
        return (isinstance(other, FiniteRing) and self.orders == other.orders
                and self.one == other.one and self.mul_table == other.mul_table)

    def __hash__(self):
        return hash((self.orders, self.one, self.mul_table))

    def __repr__(self):
        name = self.label or f"ring{list(self.orders)}"
        return f"<FiniteRing {name} of order {self.order}>"

    def name(self):
        return self.label or f"ring{list(self.orders)}"

    # -- arithmetic -------------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def sub(self, a, b):
        return tuple((x - y) % d for x, y, d in zip(a, b, self.orders))

    def neg(self, a):
        return tuple(-x % d for x, d in zip(a, self.orders))

    def times(self, n, a):
        """The integer multiple n*a."""
        return tuple(n * x % d for x, d in zip(a, self.orders))

    def mul(self, a, b):
        out = [0] * self.k
        C = self.mul_table
        for i, x in enumerate(a):
            if not x:
                continue
            row = C[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                c = x * y
                for l, z in enumerate(row[j]):
                    if z:
                        out[l] += c * z
        return tuple(o % d for o, d in zip(out, self.orders))

    def power(self, a, n):
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def sum(self, items):
        out = self.zero
        for a in items:
            out = self.add(out, a)
        return out

    def from_int(self, n):
        return self.times(n, self.one)

    @cached_property
    def characteristic(self):
        """Additive order of one."""
        n = 1
        while self.from_int(n) != self.zero:
            n += 1
        return n

    @cached_property
    def generator_matrices(self):
        """``L[i]`` is the integer matrix of multiplication by e_i on Z^k."""
        C = np.array(self.mul_table, dtype=np.int64).reshape(self.k, self.k, self.k)
        # column j of L[i] holds the coordinates of e_i * e_j
        return np.transpose(C, (0, 2, 1)).copy()

    def mult_matrix(self, a):
        """Integer matrix M with M @ x = a*x (before reduction)."""
        if self.k == 0:
            return np.zeros((0, 0), dtype=np.int64)
        return np.tensordot(np.array(a, dtype=np.int64), self.generator_matrices, axes=1)

    # -- enumeration ------------------------------------------------------------

    @cached_property
    def _strides(self):
        strides, s = [], 1
        for d in reversed(self.orders):
            strides.append(s)
            s *= d
        return tuple(reversed(strides))

    def index(self, a):
        """Position of ``a`` in the lexicographic element list."""
        return sum(x * s for x, s in zip(a, self._strides))

    def element(self, idx):
        return tuple((idx // s) % d for s, d in zip(self._strides, self.orders))

    @cached_property
    def elements(self):
        """All elements in lexicographic order."""
        return [tuple(v) for v in product(*(range(d) for d in self.orders))]

    @cached_property
    def element_array(self):
        return np.array(self.elements, dtype=np.int64).reshape(self.order, self.k)

    def multiply_all(self, a):
        """Array of a*x for every element x, in element order."""
        if self.k == 0:
            return self.element_array
        M = self.mult_matrix(a)
        return self.element_array.dot(M.T) % np.array(self.orders, dtype=np.int64)

    def indices(self, arr):
        arr = as_rows(arr, self.k)
        return arr.dot(np.array(self._strides, dtype=np.int64)) if self.k else np.zeros(len(arr), dtype=np.int64)

    @cached_property
    def _inverses(self):
        one_idx = self.index(self.one)
        inv = {}
        for a in self.elements:
            hits = np.nonzero(self.indices(self.multiply_all(a)) == one_idx)[0]
            if len(hits):
                inv[a] = self.elements[int(hits[0])]
        return inv

    def is_unit(self, a):
        return a in self._inverses

    def inverse(self, a):
        try:
            return self._inverses[a]
        except KeyError:
            raise ValueError(f"{list(a)} is not a unit") from None


def units_of(R):
    """Units of ``R`` in element order, each paired with its inverse."""
    return [(u, R._inverses[u]) for u in R.elements if u in R._inverses]


def nilradical_elements(R):
    """The nilpotent elements (an ideal in a commutative ring)."""
    out = []
    for a in R.elements:
        x, seen = a, set()
        while x != R.zero and x not in seen:
            seen.add(x)
            x = R.mul(x, a)
        if x == R.zero:
            out.append(a)
    return out


# -- homomorphisms --------------------------------------------------------------


class RingHom:
    """A unital ring homomorphism given by the images of additive generators."""

    def __init__(self, source, target, images, validate=True):
        self.source = source
        self.target = target
        self.images = tuple(target.reduce(v) for v in images)
        if len(self.images) != source.k:
            raise SpecError(f"hom needs {source.k} generator images, got {len(self.images)}")
        if validate:
            self._validate()

    def _validate(self):
        S, T = self.source, self.target
        for i, (d, img) in enumerate(zip(S.orders, self.images)):
            if T.times(d, img) != T.zero:
                raise SpecError(f"image of e{i} is not killed by its additive order {d}")
        if self(S.one) != T.one:
            raise SpecError("hom does not preserve one")
        for i, j in product(range(S.k), repeat=2):
            if self(S.mul_table[i][j]) != T.mul(self.images[i], self.images[j]):
                raise SpecError(f"hom does not preserve e{i}*e{j}")

    def __call__(self, a):
        out = [0] * self.target.k
        for x, img in zip(a, self.images):
            if x:
                for l, y in enumerate(img):
                    out[l] += x * y
        return tuple(o % d for o, d in zip(out, self.target.orders))

    def compose(self, first):
        """``self o first``."""
        if first.target != self.source:
            raise RingMismatchError("cannot compose homs with mismatched rings")
        return RingHom(first.source, self.target, [self(v) for v in first.images])

    def image_set(self):
        return {self(a) for a in self.source.elements}

    def is_bijective(self):
        return self.source.order == self.target.order and len(self.image_set()) == self.target.order

    @classmethod
    def identity(cls, R):
        return cls(R, R, [R.gen(i) for i in range(R.k)], validate=False)

    def __repr__(self):
        return f"<RingHom {self.source.name()} -> {self.target.name()}>"


def ring_homs(S, T):
    """Every unital hom S -> T, by brute force over generator images."""
    check_cap(T.order ** S.k, "enum", "hom search space")
    out = []
    for images in product(T.elements, repeat=S.k):
        try:
            out.append(RingHom(S, T, images))
        except SpecError:
            pass
    return out


# -- standard constructions -----------------------------------------------------


def zmod(n):
    n = int(n)
    if n < 1:
        raise SpecError(f"zmod needs n >= 1, got {n}")
    if n == 1:
        return FiniteRing((), (), (), label="Z/1")
    return FiniteRing((n,), (1,), (((1,),),), label=f"Z/{n}")


def _monomials(nvars, degree):
    exps = [e for e in product(range(degree), repeat=nvars) if sum(e) < degree]
    # graded, and within a degree x_1 before x_2 before ...
    return sorted(exps, key=lambda e: (sum(e), tuple(-x for x in e)))


def truncated_poly(base, nvars, degree):
    """``base[x_1..x_v] / (x_1..x_v)^degree`` with basis monomial (x) base-generator."""
    nvars, degree = int(nvars), int(degree)
    if nvars < 0 or degree < 1:
        raise SpecError("truncated_poly needs vars >= 0 and degree >= 1")
    monos = _monomials(nvars, degree)
    pos = {m: i for i, m in enumerate(monos)}
    kb = base.k
    k = len(monos) * kb
    orders = [d for _ in monos for d in base.orders]
    one = [0] * k
    one[pos[(0,) * nvars] * kb:(pos[(0,) * nvars] + 1) * kb] = base.one
    mul = [[None] * k for _ in range(k)]
    for (mi, m1), (mj, m2) in product(enumerate(monos), repeat=2):
        m = tuple(a + b for a, b in zip(m1, m2))
        for bi, bj in product(range(kb), repeat=2):
            vec = [0] * k
            if m in pos:
                off = pos[m] * kb
                vec[off:off + kb] = base.mul_table[bi][bj]
            mul[mi * kb + bi][mj * kb + bj] = vec
    names = "xyzuvw"
    label = f"{base.name()}[{','.join(names[i] if nvars <= 6 else f'x{i}' for i in range(nvars))}]/deg{degree}"
    return FiniteRing(orders, one, mul, label=label)


def build_ring(spec):
    """Build a ring from a JSON-style specification dict.

    Kinds: ``zmod`` (n), ``truncated_poly`` (base, vars, degree),
    ``table`` (orders, one, mul) and ``quotient`` (of, ideal).
    """
    if not isinstance(spec, dict) or "kind" not in spec:
        raise SpecError("ring spec must be an object with a 'kind' field")
    kind = spec["kind"]
    try:
        if kind == "zmod":
            return zmod(spec["n"])
        if kind == "truncated_poly":
            return truncated_poly(build_ring(spec["base"]), spec["vars"], spec["degree"])
        if kind == "table":
            return FiniteRing(spec["orders"], spec["one"], spec["mul"], label=spec.get("label"))
        if kind == "quotient":
            from .ideal import ideal_closure, quotient_ring
            inner = build_ring(spec["of"])
            gens = [inner.reduce(g) for g in spec["ideal"]]
            Q, _ = quotient_ring(inner, ideal_closure(inner, gens))
            return Q
    except KeyError as exc:
        raise SpecError(f"ring spec of kind {kind!r} is missing field {exc}") from None
    raise SpecError(f"unknown ring kind {kind!r}")


def ring_to_spec(R):
    """Self-contained ``table`` specification of ``R``."""
    spec = {"kind": "table", "orders": list(R.orders), "one": list(R.one),
            "mul": [[list(v) for v in row] for row in R.mul_table]}
    if R.label:
        spec["label"] = R.label
    return spec
