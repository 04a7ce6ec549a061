import pytest
import sympy
from hypothesis import given, strategies as st

from modforge.snf import FiniteQuotient, smith_normal_form

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


@given(matrices)
def test_snf_factorization(M):
    D, U, Uinv, V = smith_normal_form(M)
    assert _matmul(_matmul(U, M), V) == D
    k = len(M)
    assert _matmul(U, Uinv) == [[int(i == j) for j in range(k)] for i in range(k)]
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    assert all(x >= 0 for x in diag)
    for x, y in zip(diag, diag[1:]):
        assert (x == 0 and y == 0) or (x != 0 and y % x == 0)
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D[0])) if i != j)


@given(matrices)
def test_snf_matches_sympy(M):
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    D, *_ = smith_normal_form(M)
    expected = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    ours = [abs(D[i][i]) for i in range(min(len(M), len(M[0])))]
    theirs = [abs(int(expected[i, i])) for i in range(min(len(M), len(M[0])))]
    assert sorted(ours) == sorted(theirs)


def test_finite_quotient_z2_z4():
    # Z^2 / <(2, 0), (0, 4)> and a disguised version of the same lattice
    Q = FiniteQuotient(2, [[2, 0], [0, 4]])
    assert Q.invariants == (2, 4) and Q.order == 8
    Q2 = FiniteQuotient(2, [[2, 4], [0, 4], [2, 0]])
    assert Q2.invariants == (2, 4)


def test_finite_quotient_projection():
    Q = FiniteQuotient(2, [[6, 0], [0, 4], [3, 2]])
    seen = {Q.project((a, b)) for a in range(6) for b in range(4)}
    assert len(seen) == Q.order
    for code in seen:
        assert Q.project(Q.lift(code)) == code


def test_infinite_quotient_rejected():
    with pytest.raises(ValueError):
        FiniteQuotient(2, [[2, 0]])
