"""Points of GL_E and the obstruction to its representability.

Automorphism groups are enumerated exhaustively over finite test rings.
For the standard module E = (R/I)^n + R^m with I = (a) != 0 and m*I = 0,
the certificate records the two finite facts the non-representability
argument rests on: the kernel of P(R) -> P(R/I) is exactly the block set
{1 + (0 + W)}, while every V in M_n(I) gives a coordinate point
(1 + V, 0, 1) that agrees with the identity on all of I*Poly yet induces
the identity automorphism.  Thus |I|^{n^2} > 1 distinct points collapse
to one functor element.
"""

import random
from dataclasses import dataclass, field
from itertools import permutations, product

import numpy as np

from .config import check_cap
from .errors import (InvariantViolation, NotPrincipalError, AnnihilatorError,
                     PipelineError, PreconditionError, ModforgeError)
from .ideal import (ideal_closure, ideal_product, minimal_generators, quotient_ring,
                    require_local)
from .module import (FPModule, ModuleHom, _span_indices, _valid_image_tuples, base_change,
                     flattening_ideal, is_free_oracle, minimal_presentation, standard_module)
from .decompose import reduce_to_obstruction
from .ring import RingHom, build_ring, nilradical_elements, ring_to_spec, units_of
from .snf import as_rows


# -- automorphism groups ----------------------------------------------------------


def _generator_indices(E):
    return np.array([int(E.code_index(E.generator_code(i))[0]) for i in range(E.rows)],
                    dtype=np.int64)


class AutGroup:
    """A finite group of module automorphisms with its verified tables.

    Members are stored as permutations of the module's code indices and
    keyed by the code indices of the generator images.
    """

    def __init__(self, module, perms, label=""):
        self.module = module
        self.label = label
        self.perms = as_rows(perms, module.order)
        self._gens = _generator_indices(module)
        self._base = module.order
        keys = self._keys(self.perms[:, self._gens]) if len(self.perms) else np.zeros(0, dtype=np.int64)
        order = np.argsort(keys, kind="stable")
        self.perms = self.perms[order]
        self.keys = keys[order]
        if len(np.unique(self.keys)) != len(self.keys):
            raise InvariantViolation("duplicate automorphisms")
        self.identity = self.find(np.arange(module.order))
        if self.identity is None:
            raise InvariantViolation("identity missing from automorphism group")
        self._build_tables()

    def _keys(self, gen_images):
        gen_images = as_rows(gen_images, len(self._gens))
        radix = np.array([self._base ** i for i in reversed(range(len(self._gens)))],
                         dtype=np.int64)
        return gen_images.dot(radix)

    def find(self, perm):
        """Index of the member acting as ``perm`` (None if absent)."""
        key = self._keys(np.asarray(perm)[self._gens])[0]
        pos = int(np.searchsorted(self.keys, key))
        if pos < len(self.keys) and self.keys[pos] == key:
            return pos
        return None

    def _lookup(self, keys):
        pos = np.searchsorted(self.keys, keys)
        pos = np.minimum(pos, len(self.keys) - 1)
        found = self.keys[pos] == keys
        return np.where(found, pos, -1)

    def _build_tables(self):
        n = len(self.perms)
        check_cap(n, "group", "automorphism group")
        table = np.empty((n, n), dtype=np.int64)
        gen_images = self.perms[:, self._gens]          # h -> h(gens)
        for g in range(n):
            composed = self.perms[g][gen_images]        # g(h(gens)) for all h
            table[g] = self._lookup(self._keys(composed))
        if (table < 0).any():
            raise InvariantViolation("automorphisms not closed under composition")
        self.table = table
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(table == self.identity)
        inv[rows] = cols
        if (inv < 0).any():
            raise InvariantViolation("automorphism without inverse in the group")
        self.inverse = inv

    @property
    def order(self):
        return len(self.perms)

    def __len__(self):
        return len(self.perms)

    def member(self, i):
        """Member i as a ModuleHom."""
        E = self.module
        images = [E.all_codes[j] for j in self.perms[i][self._gens]]
        return ModuleHom(E, E, images)

    def generator_images(self, i):
        """Canonical representatives of the images of E's generators under member i."""
        E = self.module
        return [E.canonical_of_code(E.all_codes[j]) for j in self.perms[i][self._gens]]

    def verify(self, seed=0, samples=20000):
        """Group axioms checked on the table itself."""
        T, e, n = self.table, self.identity, self.order
        ar = np.arange(n)
        ok = bool((T[e] == ar).all() and (T[:, e] == ar).all())
        ok &= bool((T[ar, self.inverse] == e).all() and (T[self.inverse, ar] == e).all())
        if n <= 64:
            a, b, c = np.meshgrid(ar, ar, ar, indexing="ij")
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, samples))
        ok &= bool((T[T[a, b], c] == T[a, T[b, c]]).all())
        if not ok:
            raise InvariantViolation(f"group axioms fail for {self.label or 'automorphism group'}")
        return True

    def generators(self):
        """A small generating set, greedily in member order."""
        gens, span = [], {self.identity}
        for g in range(self.order):
            if g in span:
                continue
            gens.append(g)
            frontier = list(span)
            while frontier:
                nxt = []
                for x in frontier:
                    for s in gens:
                        y = int(self.table[x, s])
                        if y not in span:
                            span.add(y)
                            nxt.append(y)
                frontier = nxt
        return gens

    def subgroup_closed(self, members):
        members = np.asarray(sorted(members), dtype=np.int64)
        inside = np.zeros(self.order, dtype=bool)
        inside[members] = True
        return bool(inside[self.table[np.ix_(members, members)]].all()
                    and inside[self.inverse[members]].all() and inside[self.identity])


def _hom_permutations(E, F, tuples, block=1 << 22):
    """Permutation arrays for the homs with generator images ``tuples`` (code indices)."""
    R = E.ring
    p = E.rows
    lifts = [E.lift(x) for x in E.all_codes]
    ring_idx = np.array([[R.index(v[i]) for i in range(p)] for v in lifts],
                        dtype=np.int64).reshape(E.order, p)
    O = F.orbit_table
    out = []
    step = max(1, block // max(1, E.order * max(1, len(F.invariants))))
    for start in range(0, len(tuples), step):
        chunk = tuples[start:start + step]
        acc = np.zeros((len(chunk), E.order, len(F.invariants)), dtype=np.int64)
        for i in range(p):
            idx = O[ring_idx[:, i][None, :], chunk[:, i][:, None]]
            acc += F.all_codes[idx]
        out.append((acc % F._c).dot(F._radix))
    return np.concatenate(out) if out else np.zeros((0, E.order), dtype=np.int64)


def gl_points(E, hom=None):
    """GL_E(T): automorphisms of the base change of E along ``hom`` (identity if None).

    Endomorphisms are enumerated exhaustively; bijectivity is decided by
    injectivity on all elements and cross-checked with Nakayama
    (surjective modulo the nilradical of T implies surjective).
    """
    Et = E if hom is None else base_change(E, hom)
    T = Et.ring
    grids, ok = _valid_image_tuples(Et, Et)
    tuples = grids[ok]
    perms = _hom_permutations(Et, Et, tuples)
    srt = np.sort(perms, axis=1)
    injective = (np.diff(srt, axis=1) != 0).sum(axis=1) + 1 == Et.order if Et.order > 1 \
        else np.ones(len(perms), dtype=bool)
    nil = [x for x in nilradical_elements(T) if x != T.zero]
    NE = _span_indices(Et, [Et.act(x, [Et.generator_code(i)])[0]
                            for x in nil for i in range(Et.rows)])
    # coset of x + NE, labelled by its least member
    cosets = ((Et.all_codes[:, None, :] + Et.all_codes[NE][None, :, :]) % Et._c)
    coset_id = as_rows(cosets, len(Et.invariants)).dot(Et._radix).reshape(Et.order, -1).min(axis=1)
    nak = np.sort(coset_id[perms], axis=1)
    nakayama = (np.diff(nak, axis=1) != 0).sum(axis=1) + 1 == Et.order // len(NE)
    if not np.array_equal(nakayama, injective):
        raise InvariantViolation("injectivity and Nakayama surjectivity disagree")
    label = f"GL_E({T.name()})"
    G = AutGroup(Et, perms[injective], label)
    G.verify()
    return G


# -- parabolic subgroup and restriction ---------------------------------------------


@dataclass
class ParabolicSubgroup:
    parent: AutGroup
    members: list
    submodule_gens: tuple
    quotient_locally_free: bool

    @property
    def order(self):
        return len(self.members)


def parabolic_points(E, submodule_gens, hom=None):
    """Automorphisms of E_T mapping the span of ``submodule_gens`` into itself."""
    G = gl_points(E, hom)
    Et = G.module
    sub = tuple(sorted(set(int(g) for g in submodule_gens)))
    if any(g < 0 or g >= Et.rows for g in sub):
        raise PreconditionError("submodule generators must be generator indices of E")
    span = _span_indices(Et, [Et.generator_code(g) for g in sub])
    inside = np.zeros(Et.order, dtype=bool)
    inside[span] = True
    members = [i for i in range(G.order) if inside[G.perms[i][span]].all()]
    if not G.subgroup_closed(members):
        raise InvariantViolation("parabolic subset is not a subgroup")
    R = Et.ring
    P = Et.presentation
    extra = [[R.one if i == g else R.zero for g in sub] for i in range(P.rows)]
    quotient = FPModule.from_matrix(R, [list(r) + e for r, e in zip(P.entries, extra)],
                                    rows=P.rows)
    return ParabolicSubgroup(G, members, sub, is_free_oracle(quotient).free)


@dataclass
class RestrictionMap:
    source: ParabolicSubgroup
    target: ParabolicSubgroup
    mapping: list           # parent index in target for each source member
    kernel: list            # source parent indices mapping to the identity


def restriction_kernel(E, submodule_gens, J):
    """The map P(R) -> P(R/J) induced by base change, and its kernel."""
    R = E.ring
    src = parabolic_points(E, submodule_gens)
    Q, pi = quotient_ring(R, J)
    tgt = parabolic_points(E, submodule_gens, pi)
    G, H = src.parent, tgt.parent
    Eq = H.module
    mapping = []
    for i in src.members:
        images = [Eq.code(tuple(pi(x) for x in v)) for v in
                  (E.lift(E.all_codes[j]) for j in G.perms[i][G._gens])]
        perm = ModuleHom(Eq, Eq, images).permutation
        j = H.find(perm)
        if j is None or j not in set(tgt.members):
            raise InvariantViolation("restriction of a parabolic automorphism left P(R/J)")
        mapping.append(j)
    where = {g: k for k, g in enumerate(src.members)}
    for a_pos, a in enumerate(src.members):
        for b_pos, b in enumerate(src.members):
            ab = int(G.table[a, b])
            if mapping[where[ab]] != int(H.table[mapping[a_pos], mapping[b_pos]]):
                raise InvariantViolation("restriction is not a group homomorphism")
    kernel = [g for g, j in zip(src.members, mapping) if j == H.identity]
    return RestrictionMap(src, tgt, mapping, kernel)


# -- the block form of the kernel -----------------------------------------------------


def _principal_generator(R, I):
    info = require_local(R)
    gens = minimal_generators(R, I)
    if len(gens) != 1:
        raise NotPrincipalError(f"I needs {len(gens)} generators, expected a nonzero principal ideal")
    if not ideal_product(info.maximal_ideal, I).is_zero():
        raise AnnihilatorError("m * I != 0; quotient by m*I first")
    return gens[0]


def _check_standard(E, I, n, m):
    R = E.ring
    P = E.presentation
    if P.rows != n + m or P.cols != n:
        raise PreconditionError(f"module is not presented as (R/I)^{n} + R^{m}")
    for i in range(P.rows):
        for j in range(P.cols):
            x = P.entries[i][j]
            if i != j and x != R.zero:
                raise PreconditionError("standard presentation must be diagonal")
            if i == j and ideal_closure(R, [x]) != I:
                raise PreconditionError("diagonal entries must generate I")


@dataclass
class KernelBlockReport:
    passed: bool
    kernel: list            # generator-image tables of the kernel members
    kernel_size: int
    block_size: int
    trivial_torsion_block: bool


def block_automorphism_images(R, n, m, W):
    """Generator images of 1 + (0 (+) W) on (R/I)^n + R^m, as vectors."""
    images = []
    for j in range(n + m):
        vec = [R.one if i == j else R.zero for i in range(n + m)]
        if j >= n:
            for alpha in range(m):
                vec[n + alpha] = R.add(vec[n + alpha], W[alpha][j - n])
        images.append(tuple(vec))
    return images


def kernel_block_check(E, I, n, m):
    """Kernel of P(R) -> P(R/I) equals {1 + (0 (+) W) : W in M_m(I)}."""
    R = E.ring
    _principal_generator(R, I)
    _check_standard(E, I, n, m)
    res = restriction_kernel(E, range(n), I)
    G = res.source.parent
    kernel = set(res.kernel)
    block = set()
    for entries in product(I.sorted_elements(), repeat=m * m):
        W = [list(entries[a * m:(a + 1) * m]) for a in range(m)]
        perm = ModuleHom.from_vectors(E, E, block_automorphism_images(R, n, m, W)).permutation
        idx = G.find(perm)
        if idx is None:
            return KernelBlockReport(False, [], len(kernel), -1, False)
        block.add(idx)
    torsion_fixed = all((G.perms[g][G._gens[:n]] == G._gens[:n]).all() for g in kernel)
    tables = [[list(map(list, v)) for v in G.generator_images(g)] for g in sorted(kernel)]
    return KernelBlockReport(kernel == block and torsion_fixed, tables, len(kernel),
                             len(block), torsion_fixed)


# -- phantom points --------------------------------------------------------------------


def determinant(R, M):
    n = len(M)
    total = R.zero
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = R.one
        for i in range(n):
            term = R.mul(term, M[i][perm[i]])
        total = R.add(total, term if sign > 0 else R.neg(term))
    return total


def coordinate_names(n, m):
    names = [f"x{i}{j}" for i in range(n) for j in range(n)]
    names += [f"y{i}{b}" for i in range(n) for b in range(m)]
    names += [f"z{a}{b}" for a in range(m) for b in range(m)]
    return names + ["detx_inv", "detz_inv"]


def evaluation_point(R, n, m, V):
    """Coordinates (1 + V, 0, 1, det(1+V)^-1, 1)."""
    X = [[R.add(R.one if i == j else R.zero, V[i][j]) for j in range(n)] for i in range(n)]
    vals = [X[i][j] for i in range(n) for j in range(n)]
    vals += [R.zero] * (n * m)
    vals += [R.one if a == b else R.zero for a in range(m) for b in range(m)]
    vals += [R.inverse(determinant(R, X)), R.one]
    return vals


def evaluate(R, poly, point):
    """Evaluate ``poly`` = [(coeff, exponents), ...] at ``point``."""
    total = R.zero
    for coeff, exps in poly:
        term = coeff
        for x, e in zip(point, exps):
            if e:
                term = R.mul(term, R.power(x, e))
        total = R.add(total, term)
    return total


def _exponents(nvars, degree):
    return [e for e in product(range(degree + 1), repeat=nvars) if sum(e) <= degree]


def congruence_family(R, I, nvars, seed=0, samples=100, low_degree=2, high_degree=5):
    """u * monomial for u in I and all monomials of degree <= 2, then seeded random ones."""
    family = [[(u, e)] for u in I.sorted_elements() for e in _exponents(nvars, low_degree)]
    rng = random.Random(seed)
    ielems = I.sorted_elements()
    for _ in range(samples):
        u = rng.choice(ielems)
        terms = []
        for _ in range(rng.randint(1, 4)):
            deg = rng.randint(0, high_degree)
            exps = [0] * nvars
            for _ in range(deg):
                exps[rng.randrange(nvars)] += 1
            terms.append((R.mul(u, rng.choice(R.elements)), tuple(exps)))
        family.append(terms)
    return family


@dataclass
class PhantomReport:
    members: list                     # the matrices V in M_n(I)
    size: int
    congruence: dict
    identity_inducing: bool

    @property
    def passed(self):
        return self.congruence["passed"] and self.identity_inducing and self.size >= 2


def phantom_family(R, I, n, m, seed=0, samples=100):
    """All V in M_n(I) as points (1+V, 0, 1), with the two checks they must pass."""
    a = _principal_generator(R, I)
    if I.is_zero():
        raise PreconditionError("I must be nonzero")
    if n < 1:
        raise PreconditionError("need n >= 1")
    members = [[list(v[i * n:(i + 1) * n]) for i in range(n)]
               for v in product(I.sorted_elements(), repeat=n * n)]
    names = coordinate_names(n, m)
    family = congruence_family(R, I, len(names), seed, samples)
    zero_V = [[R.zero] * n for _ in range(n)]
    base = evaluation_point(R, n, m, zero_V)
    base_values = [evaluate(R, f, base) for f in family]
    failures = 0
    for V in members:
        point = evaluation_point(R, n, m, V)
        failures += sum(evaluate(R, f, point) != b for f, b in zip(family, base_values))
    low = len(I.elements) * len(_exponents(len(names), 2))
    congruence = {"coordinates": names, "degree2_polynomials": low,
                  "random_polynomials": samples, "seed": seed,
                  "evaluations": len(family) * len(members), "failures": failures,
                  "passed": failures == 0}
    S = standard_module(R, a, n, m)
    identity = np.arange(S.order)
    inducing = True
    for V in members:
        images = []
        for j in range(n + m):
            vec = [R.one if i == j else R.zero for i in range(n + m)]
            if j < n:
                for i in range(n):
                    vec[i] = R.add(vec[i], V[i][j])
            images.append(tuple(vec))
        hom = ModuleHom.from_vectors(S, S, images)
        if not hom.respects_relations() or not np.array_equal(hom.permutation, identity):
            inducing = False
    return PhantomReport(members, len(members), congruence, inducing)


# -- the certificate --------------------------------------------------------------------


def _elem(x):
    return list(x)


def _matrix(M):
    return [[_elem(x) for x in row] for row in M]


def presentation_to_json(P):
    return {"rows": P.rows, "cols": P.cols, "entries": _matrix(P.entries)}


@dataclass
class FreeResult:
    rank: int
    verdict: str = "representable"

    def to_json(self):
        return {"verdict": self.verdict, "free": True, "rank": self.rank,
                "note": f"E is free of rank {self.rank}; GL_E is represented by GL_{self.rank}"}


@dataclass
class ObstructionCertificate:
    ring: object
    ideal: object
    a: tuple
    n: int
    m: int
    kernel: KernelBlockReport
    phantoms: PhantomReport
    trace: object = None
    source_ring: object = None
    source_module: object = None
    seed: int = 0
    verdict: str = "non-representable"

    @property
    def kernel_size(self):
        return self.kernel.kernel_size

    @property
    def phantom_family_size(self):
        return self.phantoms.size

    def to_json(self):
        R = self.ring
        doc = {
            "verdict": self.verdict,
            "ring": ring_to_spec(R),
            "ideal": {"generator": _elem(self.a), "elements": [_elem(x) for x in self.ideal.sorted_elements()]},
            "n": self.n,
            "m": self.m,
            "kernel": self.kernel.kernel,
            "kernel_size": self.kernel.kernel_size,
            "kernel_expected_size": self.ideal.order ** (self.m * self.m),
            "kernel_block_form": self.kernel.passed,
            "phantoms": [_matrix(V) for V in self.phantoms.members],
            "phantom_family_size": self.phantoms.size,
            "phantoms_induce_identity": self.phantoms.identity_inducing,
            "congruence_report": self.phantoms.congruence,
            "seed": self.seed,
        }
        if self.trace is not None:
            t = self.trace
            dec = t.decomposition
            doc["source"] = {
                "ring": ring_to_spec(self.source_ring),
                "presentation": presentation_to_json(self.source_module.presentation),
                "r_initial": t.r_initial,
                "steps": [{"description": d, "target": ring_to_spec(h.target),
                           "images": [_elem(v) for v in h.images]} for d, h in t.steps],
                "composite_images": [_elem(v) for v in t.composite.images],
                "iso": [[_elem(x) for x in v] for v in dec.iso.image_vectors()],
                "iso_inverse": [[_elem(x) for x in v] for v in dec.inverse.image_vectors()],
            }
        return doc


def certify_nonrepresentable(R, E, seed=0, samples=100):
    """Free verdict, or the full obstruction certificate for GL_E."""
    if E.ring != R:
        raise PreconditionError("module is not over the given ring")
    stage = "locality"
    try:
        require_local(R)
        stage = "flattening_ideal"
        if flattening_ideal(E).is_zero():
            return FreeResult(minimal_presentation(E).rows)
        stage = "reduce_to_obstruction"
        trace = reduce_to_obstruction(E)
        dec = trace.decomposition
        Rf, I, n, m = trace.final_ring, trace.final_I, dec.n, dec.m
        stage = "kernel_block_check"
        kb = kernel_block_check(dec.standard, I, n, m)
        if not kb.passed:
            raise InvariantViolation("kernel of P(R) -> P(R/I) is not of block form")
        stage = "phantom_family"
        ph = phantom_family(Rf, I, n, m, seed, samples)
        if not ph.passed:
            raise InvariantViolation("phantom family check failed")
    except ModforgeError as exc:
        if isinstance(exc, (InvariantViolation, PipelineError)):
            raise
        raise PipelineError(stage, exc) from exc
    return ObstructionCertificate(Rf, I, dec.a, n, m, kb, ph, trace, R, E, seed)


@dataclass
class RecheckReport:
    valid: bool
    checks: dict = field(default_factory=dict)


def recheck(doc):
    """Re-validate a serialized certificate from scratch.

    The listed kernel, phantoms and iso witness are checked directly, then
    the certificate is regenerated from its source and compared as JSON.
    """
    import json
    from .module import Presentation
    checks = {}
    R = build_ring(doc["ring"])
    a = R.reduce(doc["ideal"]["generator"])
    I = ideal_closure(R, [a])
    n, m = int(doc["n"]), int(doc["m"])
    checks["ideal_elements"] = [list(x) for x in I.sorted_elements()] == doc["ideal"]["elements"]
    info = require_local(R)
    checks["ideal_nonzero_principal_killed_by_m"] = (not I.is_zero()) and \
        ideal_product(info.maximal_ideal, I).is_zero()
    checks["n_positive"] = n >= 1
    S = standard_module(R, a, n, m)
    kb = kernel_block_check(S, I, n, m)
    listed = sorted(doc["kernel"])
    checks["kernel_matches"] = kb.passed and sorted(kb.kernel) == listed
    checks["kernel_size"] = doc["kernel_size"] == len(listed) == I.order ** (m * m)
    for table in doc["kernel"]:
        hom = ModuleHom.from_vectors(S, S, [tuple(R.reduce(x) for x in v) for v in table])
        if not (hom.respects_relations() and hom.is_bijective()
                and all(S.equal(hom(S.lift(S.generator_code(i))), S.lift(S.generator_code(i)))
                        for i in range(n))):
            checks["kernel_members_valid"] = False
            break
    else:
        checks["kernel_members_valid"] = True
    seed = int(doc.get("seed", 0))
    samples = int(doc["congruence_report"]["random_polynomials"])
    ph = phantom_family(R, I, n, m, seed, samples)
    checks["phantoms_match"] = [_matrix(V) for V in ph.members] == doc["phantoms"]
    checks["phantom_family_size"] = doc["phantom_family_size"] == ph.size >= 2
    checks["congruence"] = ph.congruence["passed"] and ph.congruence == doc["congruence_report"]
    checks["phantoms_induce_identity"] = ph.identity_inducing
    src = doc.get("source")
    if src is not None:
        R0 = build_ring(src["ring"])
        P0 = src["presentation"]
        E0 = FPModule(Presentation(R0, P0["rows"], P0["cols"], P0["entries"]))
        comp = RingHom(R0, R, src["composite_images"])
        Ef = base_change(E0, comp)
        iso = ModuleHom.from_vectors(Ef, S, [[R.reduce(x) for x in v] for v in src["iso"]])
        inv = ModuleHom.from_vectors(S, Ef, [[R.reduce(x) for x in v] for v in src["iso_inverse"]])
        checks["iso_witness"] = bool(
            iso.respects_relations() and inv.respects_relations()
            and np.array_equal(inv.permutation[iso.permutation], np.arange(Ef.order))
            and np.array_equal(iso.permutation[inv.permutation], np.arange(S.order)))
        regenerated = certify_nonrepresentable(R0, E0, seed, samples)
        checks["bit_exact"] = (json.dumps(regenerated.to_json(), sort_keys=True)
                               == json.dumps(doc, sort_keys=True))
    return RecheckReport(all(checks.values()), checks)


# -- the units functor --------------------------------------------------------------------


def units_functor_points(n, T):
    """(T/nT)^x, computed directly and as GL of the rank-one module T/nT.

    The module is Z/c / (n) over Z/c (c the characteristic of T) pulled
    back along Z/c -> T.  Returns the automorphism group with ``labels``
    giving the unit of T/nT each member multiplies by.
    """
    from .ring import zmod
    c = T.characteristic
    base = zmod(c)
    hom = RingHom(base, T, [T.one] if base.k else [])
    E = FPModule.from_matrix(base, [[base.from_int(n)]])
    G = gl_points(E, hom)
    Tq, pi = quotient_ring(T, ideal_closure(T, [T.from_int(n)]))
    direct = [u for u, _ in units_of(Tq)]
    Et = G.module
    labels = []
    for i in range(G.order):
        code = Et.all_codes[G.perms[i][G._gens[0]]] if Et.rows else ()
        labels.append(pi(Et.lift(code)[0]) if Et.rows else Tq.zero)
    if sorted(labels) != sorted(direct) or len(set(labels)) != len(labels):
        raise InvariantViolation("units functor: direct and GL computations disagree")
    G.labels = labels
    G.quotient_ring = Tq
    return G
