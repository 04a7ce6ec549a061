"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

All comparisons are exact (finite structures, no floating point).  The only
numeric tolerance is the runtime budget of criterion 1.
"""

import json
import os
import subprocess
import sys
import time
from math import comb

import pytest

from modforge import cli
from modforge.corpus import corpus_modules, corpus_rings
from modforge.decompose import freemodule_remark_check, reduce_to_obstruction, split_principal
from modforge.functor import (certify_nonrepresentable, gl_points, kernel_block_check,
                              recheck, restriction_kernel, units_functor_points)
from modforge.ideal import (enumerate_ideals, ideal_closure, ideal_product, is_nilpotent,
                            local_structure, minimal_generators, quotient_ring,
                            subalgebra_generates)
from modforge.module import (FPModule, find_isomorphism, flattening_ideal, hom_enumerate,
                             is_free_oracle, standard_module, verify_flattening_universal)
from modforge.ring import ring_homs, truncated_poly, units_of, zmod
from modforge.serialize import dumps

CORPUS_BOUND = 16          # largest ring order in the corpus
CORPUS_MAX_DIM = 2         # p, q <= 2
RUNTIME_BUDGET_S = 120.0   # criterion 1 wall clock
SEED = 0
RANDOM_SAMPLES = 100
PHANTOM_SIZE = 2
GL_Z4_ORDER, END_Z4_COUNT, KERNEL_Z4 = 8, 32, 2


@pytest.fixture(scope="module")
def corpus():
    return list(corpus_modules(CORPUS_BOUND, CORPUS_MAX_DIM, CORPUS_MAX_DIM))


def _record(acceptance, k, ok, detail):
    acceptance[k] = (bool(ok), detail)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def _is_principal_killed(R, I):
    info = local_structure(R)
    return len(minimal_generators(R, I)) == 1 and ideal_product(info.maximal_ideal, I).is_zero()


def test_criterion_01_flattening_universal(corpus, acceptance):
    start = time.perf_counter()
    failures = [(name, E.presentation.key) for name, E in corpus
                if not verify_flattening_universal(E).passed]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < RUNTIME_BUDGET_S
    _record(acceptance, 1, ok, f"{len(corpus)} modules, {len(failures)} failures, {elapsed:.1f}s "
                                f"(budget {RUNTIME_BUDGET_S:.0f}s)")


def test_criterion_02_oracle_equivalence(corpus, acceptance):
    disagree = [(name, E.presentation.key) for name, E in corpus
                if flattening_ideal(E).is_zero() != is_free_oracle(E).free]
    free = sum(is_free_oracle(E).free for _, E in corpus)
    _record(acceptance, 2, not disagree,
            f"{len(corpus)} modules ({free} free), {len(disagree)} disagreements")


def test_criterion_03_free_implies_zero_ideal(corpus, acceptance):
    failures = []
    for name, E in corpus:
        try:
            if not freemodule_remark_check(E):
                failures.append(name)
        except Exception as exc:  # any raise is a failure of the criterion
            failures.append(f"{name}: {exc}")
    _record(acceptance, 3, not failures, f"{len(corpus)} modules, {len(failures)} false results")


def test_criterion_04_principal_splitting(corpus, acceptance):
    checked, failures = 0, []
    for name, E in corpus:
        R = E.ring
        I = flattening_ideal(E)
        if I.is_zero() or not _is_principal_killed(R, I):
            continue
        checked += 1
        cert = split_principal(E)
        checks = cert.check()
        Q, _ = quotient_ring(R, ideal_closure(R, [cert.a]))
        cardinality = E.order == R.order ** cert.m * Q.order ** cert.n
        oracle = find_isomorphism(E, standard_module(R, cert.a, cert.n, cert.m)) is not None
        if not (all(checks.values()) and cardinality and oracle):
            failures.append((name, E.presentation.key, checks, cardinality, oracle))
    _record(acceptance, 4, checked > 0 and not failures,
            f"{checked} principal cases, {len(failures)} failures (round trip, "
            f"cardinality, brute-force isomorphism)")


def test_criterion_05_reduction_pipeline(corpus, acceptance):
    checked, failures = 0, []
    for name, E in corpus:
        if flattening_ideal(E).is_zero():
            continue
        checked += 1
        t = reduce_to_obstruction(E)
        R, I = t.final_ring, t.final_I
        ok = (not I.is_zero() and _is_principal_killed(R, I)
              and t.decomposition.n >= 1 and len(t.steps) <= t.r_initial + 1
              and flattening_ideal(t.final_module) == I
              and all(t.decomposition.check().values()))
        if not ok:
            failures.append((name, E.presentation.key))
    _record(acceptance, 5, checked > 0 and not failures,
            f"{checked} non-free modules reduced, {len(failures)} failures")


def _kernel_case(R, a, n, m):
    I = ideal_closure(R, [a])
    E = standard_module(R, a, n, m)
    report = kernel_block_check(E, I, n, m)
    return E, I, report


def test_criterion_06_kernel_block_form(acceptance):
    R = zmod(4)
    E, I, report = _kernel_case(R, (2,), 1, 1)
    ends = hom_enumerate(E, E)
    autos = [h for h in ends if h.is_bijective()]
    z4 = (len(ends) == END_Z4_COUNT and len(autos) == GL_Z4_ORDER
          and gl_points(E).order == GL_Z4_ORDER
          and report.kernel_size == KERNEL_Z4 and report.passed)

    Re = truncated_poly(zmod(2), 1, 2)
    Ee, Ie, rep_e = _kernel_case(Re, (0, 1), 1, 1)
    eps = rep_e.passed and rep_e.kernel_size == Ie.order == 2

    torsion = []
    for T, a in ((R, (2,)), (Re, (0, 1))):
        Et, It, rep_t = _kernel_case(T, a, 1, 0)
        torsion.append(rep_t.passed and rep_t.kernel_size == 1
                       and len(restriction_kernel(Et, [0], It).kernel) == 1)
    ok = z4 and eps and all(torsion)
    _record(acceptance, 6, ok,
            f"Z/4: |End|={len(ends)} |GL|={len(autos)} kernel={report.kernel_size}; "
            f"F2[e]: kernel={rep_e.kernel_size}; torsion-only kernels trivial={all(torsion)}")


def _degree2_count(nvars, ideal_order):
    return ideal_order * comb(nvars + 2, 2)


def test_criterion_07_phantom_obstruction(acceptance):
    cases = [("Z/4, Z/2+Z/4", zmod(4), [[(2,)], [(0,)]]),
             ("F2[x,y]/(x,y)^2, residue field", truncated_poly(zmod(2), 2, 2),
              [[(0, 1, 0), (0, 0, 1)]])]
    details, ok = [], True
    for label, R, matrix in cases:
        E = FPModule.from_matrix(R, matrix)
        cert = certify_nonrepresentable(R, E, seed=SEED, samples=RANDOM_SAMPLES)
        doc = json.loads(dumps(cert.to_json()))
        cong = doc["congruence_report"]
        nvars = len(cong["coordinates"])
        rc = recheck(doc)
        good = (doc["verdict"] == "non-representable"
                and doc["phantom_family_size"] == PHANTOM_SIZE > 1
                and cong["passed"] and cong["failures"] == 0
                and cong["random_polynomials"] == RANDOM_SAMPLES
                and cong["degree2_polynomials"] == _degree2_count(nvars, len(doc["ideal"]["elements"]))
                and rc.valid and rc.checks["bit_exact"])
        ok &= good
        details.append(f"{label}: size={doc['phantom_family_size']} "
                       f"evals={cong['evaluations']} recheck={rc.valid}")
    _record(acceptance, 7, ok, "; ".join(details))


def test_criterion_08_generator_lifting(acceptance):
    from itertools import combinations
    rings = [R for _, _, R in corpus_rings(CORPUS_BOUND)]
    triples = hits = bad = 0
    for A in rings:
        nil = [I for I in enumerate_ideals(A) if is_nilpotent(I)]
        for B in rings:
            for hom in ring_homs(A, B):
                for I in nil:
                    for k in range(3):
                        for elems in combinations(B.elements, k):
                            rep = subalgebra_generates(hom, I, elems)
                            triples += 1
                            hits += rep.residues_generate
                            bad += rep.residues_generate and not rep.generates
    _record(acceptance, 8, bad == 0 and hits > 0,
            f"{triples} triples, {hits} with generating residues, {bad} counterexamples")


def test_criterion_09_units_functor(acceptance):
    mismatches = []
    for name, _, T in corpus_rings(CORPUS_BOUND):
        G = units_functor_points(2, T)
        direct = gl_points(FPModule.from_matrix(T, [[T.from_int(2)]]))
        Tq, pi = quotient_ring(T, ideal_closure(T, [T.from_int(2)]))
        Ed = direct.module
        multipliers = sorted(pi(Ed.lift(Ed.all_codes[direct.perms[i][direct._gens[0]]])[0])
                             if Ed.rows else Tq.zero for i in range(direct.order))
        units = sorted(u for u, _ in units_of(Tq))
        if not (sorted(G.labels) == multipliers == units and G.order == direct.order):
            mismatches.append(name)
    ambient = [len(units_of(zmod(2 ** k))) == 2 ** (k - 1)
               and units_functor_points(2 ** k, zmod(16)).order == 2 ** (k - 1)
               for k in range(1, 5)]
    _record(acceptance, 9, not mismatches and all(ambient),
            f"{len(corpus_rings(CORPUS_BOUND))} rings, mismatches={mismatches}, "
            f"|(Z/2^k)^x|=2^(k-1) for k=1..4: {all(ambient)}")


SUITE_DOCS = [
    {"ring": {"kind": "zmod", "n": 4},
     "presentation": {"rows": 2, "cols": 1, "entries": [[[2]], [[0]]]}},
    {"ring": {"kind": "truncated_poly", "base": {"kind": "zmod", "n": 2}, "vars": 2, "degree": 2},
     "presentation": {"rows": 1, "cols": 2, "entries": [[[0, 1, 0], [0, 0, 1]]]}},
    {"ring": {"kind": "zmod", "n": 8},
     "presentation": {"rows": 2, "cols": 2, "entries": [[[2], [0]], [[0], [4]]]}},
    {"ring": {"kind": "zmod", "n": 4},
     "presentation": {"rows": 2, "cols": 0, "entries": [[], []]}},
]

SUITE_SCRIPT = r"""
import json, sys, tempfile, os
from modforge import cli
docs = json.loads(sys.argv[1])
seed = sys.argv[2]
out = []
with tempfile.TemporaryDirectory() as tmp:
    for i, doc in enumerate(docs):
        path = os.path.join(tmp, f"doc{i}.json")
        with open(path, "w") as fh:
            json.dump(doc, fh)
        for command in ("validate", "analyze", "decompose", "gl", "certify"):
            report, code, _ = cli.run([command, "-i", path, "--seed", seed])
            out.append(cli.dumps(report))
            if command == "certify" and code == 3:
                cpath = os.path.join(tmp, f"cert{i}.json")
                with open(cpath, "w") as fh:
                    fh.write(cli.dumps(report))
                report, code, _ = cli.run(["recheck", "-i", cpath, "--seed", seed])
                out.append(cli.dumps(report))
sys.stdout.write("".join(out))
"""


def _suite_run(hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    proc = subprocess.run([sys.executable, "-c", SUITE_SCRIPT, json.dumps(SUITE_DOCS), str(SEED)],
                          capture_output=True, env=env, check=True)
    return proc.stdout


def test_criterion_10_determinism(acceptance):
    first, second = _suite_run(1), _suite_run(2)
    reports = first.count(b'"tool": "modforge"')
    _record(acceptance, 10, first == second and reports >= len(SUITE_DOCS) * 5,
            f"{reports} JSON reports, {len(first)} bytes, byte-identical={first == second} "
            f"(two processes, different hash seeds)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
