"""Integer Smith normal form and finite quotients of Z^k.

Matrices are plain lists of lists of Python ints so nothing overflows.
"""

import numpy as np


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return ``(D, U, Uinv, V)`` with ``U @ M @ V == D`` diagonal.

    ``U`` and ``V`` are unimodular, ``Uinv`` is the inverse of ``U``.
    The diagonal is nonnegative and each nonzero entry divides the next.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, Uinv, V = _identity(m), _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for row in Uinv:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        if q == 0:
            return
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
            for row in Uinv:
                row[t] = -row[t]
    return A, U, Uinv, V


def as_rows(arr, width):
    """An int64 array viewed as rows of ``width`` entries; width 0 is allowed."""
    arr = np.asarray(arr, dtype=np.int64)
    if width:
        return arr.reshape(-1, width)
    return arr.reshape(int(np.prod(arr.shape[:-1])) if arr.ndim > 1 else 1, 0)


class FiniteQuotient:
    """The finite abelian group Z^k / L with L spanned by the given columns.

    After Smith reduction the group is the product of Z/c for the invariants
    ``c > 1``; ``project`` sends integer vectors to those coordinates and
    ``lift`` picks a preimage of each new basis vector.
    """

    def __init__(self, k, relations):
        relations = [list(map(int, r)) for r in relations]
        M = [[rel[i] for rel in relations] for i in range(k)]
        if k and not relations:
            raise ValueError("infinite quotient: no relations")
        D, U, Uinv, _ = smith_normal_form(M) if k else ([], [], [], [])
        diag = [D[i][i] if i < len(D[0]) else 0 for i in range(k)] if k else []
        if any(d == 0 for d in diag):
            raise ValueError("relation lattice does not have full rank")
        self.k = k
        self.kept = [i for i, d in enumerate(diag) if d != 1]
        self.invariants = tuple(diag[i] for i in self.kept)
        self._rows = [[x % diag[i] for x in U[i]] for i in self.kept]
        self._lifts = [[Uinv[r][i] for r in range(k)] for i in self.kept]
        self._U64 = np.array(self._rows, dtype=np.int64).reshape(len(self.kept), k)
        self._c64 = np.array(self.invariants, dtype=np.int64)
        self.order = 1
        for c in self.invariants:
            self.order *= c

    def project(self, vec):
        """Coordinates of ``vec`` (length k) in the reduced decomposition."""
        return tuple(sum(a * b for a, b in zip(row, vec)) % c
                     for row, c in zip(self._rows, self.invariants))

    def project_many(self, vecs):
        """Vectorized ``project`` on an integer array of shape (N, k)."""
        vecs = as_rows(vecs, self.k)
        return vecs.dot(self._U64.T) % self._c64

    def lift(self, code):
        """An integer vector in Z^k projecting onto ``code``."""
        out = [0] * self.k
        for x, col in zip(code, self._lifts):
            if x:
                for r in range(self.k):
                    out[r] += x * col[r]
        return tuple(out)

    def basis_lifts(self):
        """Preimages of the reduced basis vectors, one per invariant."""
        return [tuple(col) for col in self._lifts]
