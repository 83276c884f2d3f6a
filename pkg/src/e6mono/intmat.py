"""Exact integer and rational matrix arithmetic.

Matrices are lists of rows holding Python ints or ``Fraction``s, so nothing
here can overflow. Sizes in this package stay below 40x40, where the cubic
pure-Python algorithms are fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy(A: Sequence[Sequence]) -> Matrix:
    return [list(row) for row in A]


def transpose(A: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def bilinear(G: Sequence[Sequence], u: Sequence, v: Sequence):
    """Return ``u^T G v``."""
    return dot(u, matvec(G, v))


def congruence(G: Sequence[Sequence], T: Sequence[Sequence]) -> Matrix:
    """Return ``T^T G T``."""
    return matmul(transpose(T), matmul(G, T))


def block_diag(*blocks: Sequence[Sequence]) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return out


def det(A: Sequence[Sequence]) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss elimination."""
    M = copy(A)
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rational_det(A: Sequence[Sequence]) -> Fraction:
    M = [[Fraction(x) for x in row] for row in A]
    n = len(M)
    out = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            M[k], M[p] = M[p], M[k]
            out = -out
        out *= M[k][k]
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            if f:
                for j in range(k, n):
                    M[i][j] -= f * M[k][j]
    return out


def inverse(A: Sequence[Sequence]) -> Matrix:
    """Exact inverse over the rationals (Gauss-Jordan). Raises ZeroDivisionError if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for k in range(n):
        p = next((i for i in range(k, n) if M[i][k] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        M[k], M[p] = M[p], M[k]
        piv = M[k][k]
        M[k] = [x / piv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k] != 0:
                f = M[i][k]
                M[i] = [a - f * b for a, b in zip(M[i], M[k])]
    return [row[n:] for row in M]


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve ``A x = b`` for square nonsingular ``A``."""
    return matvec(inverse(A), b)


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    M = [[Fraction(x) for x in row] for row in A]
    m, n = len(M), len(M[0])
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, m):
            f = M[i][c] / M[r][c]
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def common_denominator(values) -> int:
    from math import lcm

    d = 1
    for x in values:
        d = lcm(d, Fraction(x).denominator)
    return d


def is_integral(A) -> bool:
    if A and isinstance(A[0], (list, tuple)):
        return all(Fraction(x).denominator == 1 for row in A for x in row)
    return all(Fraction(x).denominator == 1 for x in A)


# --- column operations (act on every row) ---------------------------------

def _swap_cols(M: Matrix, a: int, b: int) -> None:
    for row in M:
        row[a], row[b] = row[b], row[a]


def _addmul_col(M: Matrix, dst: int, src: int, q: int) -> None:
    """col[dst] += q * col[src]"""
    for row in M:
        row[dst] += q * row[src]


def _neg_col(M: Matrix, c: int) -> None:
    for row in M:
        row[c] = -row[c]


def hnf_columns(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, int]:
    """Column-style Hermite normal form.

    Returns ``(H, U, r)`` with ``A @ U == H``, ``U`` unimodular, the first
    ``r`` columns of ``H`` in echelon form with positive pivots and reduced
    entries left of each pivot, and the remaining columns zero. Hence
    ``H[:, :r]`` is a basis of the column span and ``U[:, r:]`` a basis of
    the integer kernel.
    """
    H = copy(A)
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity(n)
    pc = 0
    for r in range(m):
        if pc >= n:
            break
        while True:
            nz = [j for j in range(pc, n) if H[r][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(H[r][j]))
            if jmin != pc:
                _swap_cols(H, pc, jmin)
                _swap_cols(U, pc, jmin)
            piv = H[r][pc]
            for j in range(pc + 1, n):
                if H[r][j]:
                    q = H[r][j] // piv
                    _addmul_col(H, j, pc, -q)
                    _addmul_col(U, j, pc, -q)
            if all(H[r][j] == 0 for j in range(pc + 1, n)):
                break
        if H[r][pc] == 0:
            continue
        if H[r][pc] < 0:
            _neg_col(H, pc)
            _neg_col(U, pc)
        piv = H[r][pc]
        for j in range(pc):
            q = H[r][j] // piv
            if q:
                _addmul_col(H, j, pc, -q)
                _addmul_col(U, j, pc, -q)
        pc += 1
    return H, U, pc


def kernel_basis(A: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of ``{x in Z^n : A x = 0}`` as a list of vectors (saturated by construction)."""
    n = len(A[0])
    _, U, r = hnf_columns(A)
    return [[U[i][j] for i in range(n)] for j in range(r, n)]


def column_span_basis(gens: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis (as vectors) of the Z-span of the given integer vectors."""
    if not gens:
        return []
    H, _, r = hnf_columns(transpose(gens))
    return [[H[i][j] for i in range(len(H))] for j in range(r)]


def smith_form(A: Sequence[Sequence[int]]) -> tuple[list[int], Matrix, Matrix]:
    """Smith normal form with transforms.

    Returns ``(d, P, Q)`` with ``P @ A @ Q`` diagonal, diagonal ``d`` (length
    ``min(m, n)``, nonnegative, each nonzero entry dividing the next), and
    ``P``, ``Q`` unimodular.
    """
    M = copy(A)
    m = len(M)
    n = len(M[0]) if m else 0
    P = identity(m)
    Q = identity(n)

    def swap_rows(a, b):
        M[a], M[b] = M[b], M[a]
        P[a], P[b] = P[b], P[a]

    def addmul_row(dst, src, q):
        M[dst] = [x + q * y for x, y in zip(M[dst], M[src])]
        P[dst] = [x + q * y for x, y in zip(P[dst], P[src])]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if M[i][j] and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            swap_rows(t, best[0])
        if best[1] != t:
            _swap_cols(M, t, best[1])
            _swap_cols(Q, t, best[1])
        while True:
            piv = M[t][t]
            for i in range(t + 1, m):
                if M[i][t]:
                    addmul_row(i, t, -(M[i][t] // piv))
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // piv
                    _addmul_col(M, j, t, -q)
                    _addmul_col(Q, j, t, -q)
            rest = [(abs(M[i][t]), i, t) for i in range(t + 1, m) if M[i][t]]
            rest += [(abs(M[t][j]), t, j) for j in range(t + 1, n) if M[t][j]]
            if rest:
                _, i, j = min(rest)
                if i != t:
                    swap_rows(t, i)
                else:
                    _swap_cols(M, t, j)
                    _swap_cols(Q, t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if M[i][j] % piv), None)
            if bad is None:
                break
            addmul_row(t, bad[0], 1)
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            P[t] = [-x for x in P[t]]
        t += 1
    d = [M[i][i] for i in range(min(m, n))]
    return d, P, Q


def elementary_divisors(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero Smith invariants of ``A``."""
    d, _, _ = smith_form(A)
    return [x for x in d if x != 0]
