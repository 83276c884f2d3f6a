"""Integral lattices given by Gram matrices.

A :class:`Lattice` is an immutable, non-degenerate symmetric integer Gram
matrix. Equality is Gram equality, not isometry. All invariants are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import intmat
from .errors import DegenerateError, NonSymmetricError, UnknownNameError, ZeroScaleError

E6_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3))
E8_EDGES = ((0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3))


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G = self.gram
        n = len(G)
        if n == 0 or any(len(row) != n for row in G):
            raise ValueError("Gram matrix must be square and non-empty")
        for i in range(n):
            for j in range(i + 1, n):
                if G[i][j] != G[j][i]:
                    raise NonSymmetricError(f"Gram[{i}][{j}] != Gram[{j}][{i}]")
        if self.discriminant == 0:
            raise DegenerateError("Gram matrix has determinant 0")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def discriminant(self) -> int:
        return intmat.det(self.gram)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.gram]

    def norm(self, v: Sequence) -> Fraction | int:
        return intmat.bilinear(self.gram, v, v)

    def pair(self, u: Sequence, v: Sequence) -> Fraction | int:
        return intmat.bilinear(self.gram, u, v)

    def __repr__(self) -> str:
        return f"Lattice(rank={self.rank}, disc={self.discriminant})"


def make_lattice(gram: Iterable[Iterable[int]]) -> Lattice:
    rows = [list(r) for r in gram]
    for row in rows:
        for x in row:
            if Fraction(x).denominator != 1:
                raise ValueError(f"non-integral Gram entry {x}")
    return Lattice(tuple(tuple(int(x) for x in r) for r in rows))


def cartan_gram(n: int, edges: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Gram of a simply-laced root basis: 2 on the diagonal, -1 per Dynkin edge."""
    G = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for i, j in edges:
        G[i][j] = G[j][i] = -1
    return G


U_GRAM = [[0, 1], [1, 0]]
LAMBDA4_GRAM = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]


def _named_grams():
    e6 = cartan_gram(6, E6_EDGES)
    e8 = cartan_gram(8, E8_EDGES)
    neg = lambda G: [[-x for x in r] for r in G]  # noqa: E731
    K = intmat.block_diag(*([U_GRAM] * 12), LAMBDA4_GRAM)
    L = intmat.block_diag(*([U_GRAM] * 13), neg(e8))
    return {
        "U": U_GRAM,
        "Lambda4": LAMBDA4_GRAM,
        "E6": e6,
        "E8": e8,
        "E6_neg": neg(e6),
        "E8_neg": neg(e8),
        "K": K,
        "L": L,
    }


NAMES = tuple(_named_grams())


def named(name: str) -> Lattice:
    """One of U, Lambda4, E6, E8, E6_neg, E8_neg, K = U^12+Lambda4, L = U^13+E8(-1)."""
    grams = _named_grams()
    if name not in grams:
        raise UnknownNameError(f"unknown lattice {name!r}; expected one of {', '.join(NAMES)}")
    return make_lattice(grams[name])


def discriminant(L: Lattice) -> int:
    return L.discriminant


def signature(L: Lattice) -> tuple[int, int]:
    """(positive, negative) inertia via exact symmetric congruence diagonalization."""
    return _inertia(L.gram)


def _inertia(gram) -> tuple[int, int]:
    A = [[Fraction(x) for x in row] for row in gram]
    n = len(A)
    pos = neg = 0
    for k in range(n):
        if A[k][k] == 0:
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                # symmetric swap of basis vectors k and j
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    continue  # zero row: radical (excluded by non-degeneracy)
                # e_k <- e_k + e_j makes the pivot 2*A[k][j] (hyperbolic pair trick)
                A[k] = [a + b for a, b in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        piv = A[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        # Schur complement of the pivot; stays symmetric
        for i in range(k + 1, n):
            f = A[i][k] / piv
            if f:
                for j in range(k + 1, n):
                    A[i][j] -= f * A[k][j]
        for i in range(k + 1, n):
            A[i][k] = A[k][i] = Fraction(0)
    return pos, neg


def is_even(L: Lattice) -> bool:
    return all(L.gram[i][i] % 2 == 0 for i in range(L.rank))


def rescale(L: Lattice, n: int) -> Lattice:
    """The lattice L(n): same group, form multiplied by n."""
    if n == 0:
        raise ZeroScaleError("scale factor must be nonzero")
    return make_lattice([[n * x for x in row] for row in L.gram])


def direct_sum(*lattices: Lattice) -> Lattice:
    return make_lattice(intmat.block_diag(*(L.gram for L in lattices)))


def power(L: Lattice, k: int) -> Lattice:
    return direct_sum(*([L] * k))


def dual_gram(L: Lattice) -> list[list[Fraction]]:
    """Inverse Gram matrix, i.e. the Gram matrix of the dual basis."""
    return intmat.inverse(L.gram)


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite group L*/L.

    ``generators`` are dual-lattice vectors in L-coordinates, one per cyclic
    factor; ``classify`` maps any dual vector to its coordinates in
    ``prod Z/d_i``.
    """

    elementary_divisors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...] = field(default=(), repr=False)
    class_rows: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        out = 1
        for d in self.elementary_divisors:
            out *= d
        return out

    def classify(self, y: Sequence) -> tuple[int, ...]:
        vals = []
        for row, d in zip(self.class_rows, self.elementary_divisors):
            c = Fraction(intmat.dot(row, y))
            if c.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            vals.append(int(c) % d)
        return tuple(vals)

    def vector(self, coeffs: Sequence[int]) -> list[Fraction]:
        n = len(self.generators[0]) if self.generators else 0
        out = [Fraction(0)] * n
        for c, g in zip(coeffs, self.generators):
            out = [a + c * b for a, b in zip(out, g)]
        return out


def discriminant_group(L: Lattice) -> DiscriminantGroup:
    """L*/L from the Smith form ``P G Q = D``: generators ``Q e_i / d_i``, class map ``(P G y)_i mod d_i``."""
    d, P, Q = intmat.smith_form(L.gram)
    PG = intmat.matmul(P, L.gram)
    divs, gens, rows = [], [], []
    for i, di in enumerate(d):
        if di > 1:
            divs.append(di)
            gens.append(tuple(Fraction(Q[r][i], di) for r in range(L.rank)))
            rows.append(tuple(PG[i]))
    return DiscriminantGroup(tuple(divs), tuple(gens), tuple(rows))


def is_unimodular(L: Lattice) -> bool:
    return abs(L.discriminant) == 1


def is_definite(L: Lattice) -> bool:
    p, q = signature(L)
    return p == 0 or q == 0


# --- plain-text format ----------------------------------------------------

def parse_lattice(text: str) -> Lattice:
    """Parse ``n`` followed by ``n`` rows of ``n`` integers."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 1:
        raise ValueError("first line must hold the rank")
    n = int(lines[0][0])
    rows = lines[1:]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected {n} rows of {n} integers")
    return make_lattice([[int(x) for x in r] for r in rows])


def format_lattice(L: Lattice | Sequence[Sequence[int]]) -> str:
    G = L.gram if isinstance(L, Lattice) else L
    lines = [str(len(G))] + [" ".join(str(x) for x in row) for row in G]
    return "\n".join(lines) + "\n"
