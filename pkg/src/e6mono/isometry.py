"""Short vectors, definite isometry testing, orthocomplements and gluing."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from . import intmat
from .errors import (
    DependentBasisError,
    NonIntegralPairingError,
    NotDefiniteError,
    RankMismatchError,
)
from .lattice import (
    Lattice,
    direct_sum,
    discriminant_group,
    is_even,
    make_lattice,
    named,
    signature,
)


@dataclass(frozen=True)
class ShortVectorSet:
    norm_bound: Fraction
    vectors: tuple[tuple[int, ...], ...]
    norms: tuple[Fraction, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def of_norm(self, norm) -> list[tuple[int, ...]]:
        norm = Fraction(norm)
        return [v for v, n in zip(self.vectors, self.norms) if n == norm]

    def histogram(self) -> dict[Fraction, int]:
        return dict(sorted(Counter(self.norms).items()))


def _definite_sign(L: Lattice) -> int:
    p, q = signature(L)
    if q == 0:
        return 1
    if p == 0:
        return -1
    raise NotDefiniteError(f"signature ({p},{q}) is indefinite")


def _pohst_form(G) -> list[list[Fraction]]:
    """Coefficients q with x^T G x = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = len(G)
    q = [[Fraction(x) for x in row] for row in G]
    for i in range(n):
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _floor_sqrt(r: Fraction) -> int:
    """floor(sqrt(r)) for rational r >= 0."""
    return isqrt(r.numerator * r.denominator) // r.denominator


def _enumerate(G, bound: Fraction):
    """All nonzero integer x with x^T G x <= bound, G positive definite."""
    n = len(G)
    q = _pohst_form(G)
    x = [0] * n
    out = []

    def rec(i: int, remaining: Fraction):
        c = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        r = remaining / q[i][i]
        s = _floor_sqrt(r)
        lo = int(-c - s) - 2
        hi = int(-c + s) + 2
        for v in range(lo, hi + 1):
            t = (v + c) * (v + c)
            if t > r:
                continue
            x[i] = v
            left = remaining - q[i][i] * t
            if i == 0:
                out.append(tuple(x))
            else:
                rec(i - 1, left)
        x[i] = 0

    rec(n - 1, Fraction(bound))
    zero = (0,) * n
    return [v for v in out if v != zero]


def short_vectors(L: Lattice, bound, scale=1) -> ShortVectorSet:
    """All nonzero ``v`` with ``|b(v, v)| <= |bound|`` for the form ``gram / scale``.

    ``scale`` lets a rational lattice (e.g. a dual) be passed as an integral
    Gram matrix. Negative-definite input is enumerated on the negated form;
    norms keep their original sign. Output is sorted by absolute norm, then
    coordinates.
    """
    sign = _definite_sign(L)
    bound = abs(Fraction(bound)) * scale
    G = [[sign * x for x in row] for row in L.gram]
    vecs = _enumerate(G, bound)
    scale = Fraction(scale)
    normed = sorted(((Fraction(intmat.bilinear(G, v, v)) / scale, v) for v in vecs))
    return ShortVectorSet(
        norm_bound=Fraction(bound) / scale * sign,
        vectors=tuple(v for _, v in normed),
        norms=tuple(sign * nm for nm, _ in normed),
    )


def scaled_dual(L: Lattice) -> tuple[Lattice, int]:
    """The dual lattice as an integral Gram matrix: returns ``(M, s)`` with ``M.gram = s * inverse(L.gram)``."""
    inv = intmat.inverse(L.gram)
    s = intmat.common_denominator(x for row in inv for x in row)
    return make_lattice([[int(x * s) for x in row] for row in inv]), s


# --- isometry -------------------------------------------------------------

def _histogram(L: Lattice, bound) -> dict:
    return short_vectors(L, bound).histogram()


def is_isometric(A: Lattice, B: Lattice, check_invariants: bool = True):
    """Find an integer matrix ``T`` with ``T^T B T == A`` or return ``None``.

    Invariant rejection first (rank, discriminant, signature, parity, short
    vector histograms), then backtracking over short vectors of ``B`` for the
    images of the basis of ``A``. Meant for definite ranks up to 8.
    """
    if A.rank != B.rank:
        raise RankMismatchError(f"rank {A.rank} vs {B.rank}")
    sa, sb = _definite_sign(A), _definite_sign(B)
    if check_invariants:
        if (A.discriminant != B.discriminant or sa != sb or is_even(A) != is_even(B)):
            return None
    if max(abs(A.gram[i][i]) for i in range(A.rank)) > max(abs(B.gram[i][i]) for i in range(B.rank)):
        T = is_isometric(B, A, check_invariants)
        if T is None:
            return None
        Tinv = intmat.inverse(T)
        T = [[int(x) for x in row] for row in Tinv]
        _assert_witness(A, B, T)
        return T
    top = max(abs(A.gram[i][i]) for i in range(A.rank))
    if check_invariants and _histogram(A, top) != _histogram(B, top):
        return None
    T = _backtrack(A, B, top)
    if T is not None:
        _assert_witness(A, B, T)
    return T


def _assert_witness(A: Lattice, B: Lattice, T) -> None:
    if intmat.congruence(B.gram, T) != [list(r) for r in A.gram]:
        raise AssertionError("isometry witness failed T^T B T == A")


def _backtrack(A: Lattice, B: Lattice, top: int):
    n = A.rank
    cands = short_vectors(B, top).vectors
    by_norm: dict[int, list[int]] = {}
    for idx, v in enumerate(cands):
        by_norm.setdefault(int(B.norm(v)), []).append(idx)
    BG = B.gram
    Bc = [intmat.matvec(BG, v) for v in cands]
    chosen: list[int] = []

    def rec(j: int) -> bool:
        if j == n:
            return True
        for idx in by_norm.get(A.gram[j][j], ()):
            ok = True
            for k, prev in enumerate(chosen):
                if intmat.dot(cands[prev], Bc[idx]) != A.gram[j][k]:
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(idx)
            if rec(j + 1):
                return True
            chosen.pop()
        return False

    if not rec(0):
        return None
    return intmat.transpose([list(cands[i]) for i in chosen])


# --- sublattices ----------------------------------------------------------

def _check_independent(sub_basis: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    S = [list(v) for v in sub_basis]
    if any(len(v) != n for v in S):
        raise ValueError("sub-basis vectors must match the ambient rank")
    if intmat.rank(S) != len(S):
        raise DependentBasisError("sub-basis is linearly dependent")
    return S


def orthocomplement_basis(ambient: Lattice, sub_basis) -> list[list[int]]:
    """Integral basis of ``{v : b(v, s) = 0 for all s}`` via the Hermite-form kernel."""
    S = _check_independent(sub_basis, ambient.rank)
    if not S:
        return [list(r) for r in intmat.identity(ambient.rank)]
    A = intmat.matmul(S, ambient.gram)
    return intmat.kernel_basis(A)


def orthocomplement(ambient: Lattice, sub_basis) -> Lattice:
    basis = orthocomplement_basis(ambient, sub_basis)
    return make_lattice(intmat.congruence(ambient.gram, intmat.transpose(basis)))


def is_primitive_sublattice(ambient: Lattice, sub_basis) -> bool:
    S = _check_independent(sub_basis, ambient.rank)
    return all(d == 1 for d in intmat.elementary_divisors(S))


def induced_gram(L: Lattice, basis) -> list[list]:
    return intmat.congruence(L.gram, intmat.transpose([list(v) for v in basis]))


# --- gluing ---------------------------------------------------------------

@dataclass(frozen=True)
class GlueData:
    base: Lattice
    glue_vectors: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        _check_glue(self.base, self.glue_vectors)


def _check_glue(M: Lattice, glue) -> None:
    for g in glue:
        if len(g) != M.rank:
            raise ValueError("glue vector length must match the rank")
        if not intmat.is_integral(intmat.matvec(M.gram, g)):
            raise NonIntegralPairingError(f"glue vector {g} pairs fractionally with the base")
    for g, h in itertools.combinations_with_replacement(glue, 2):
        if Fraction(intmat.bilinear(M.gram, g, h)).denominator != 1:
            raise NonIntegralPairingError("glue vectors pair fractionally with each other")


def overlattice_basis(M: Lattice, glue) -> list[list[Fraction]]:
    """Basis (in M-coordinates, rational) of the group generated by M and the glue vectors."""
    glue = [[Fraction(x) for x in g] for g in glue]
    _check_glue(M, glue)
    n = M.rank
    gens = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)] + glue
    D = intmat.common_denominator(x for g in gens for x in g)
    ints = [[int(x * D) for x in g] for g in gens]
    basis = intmat.column_span_basis(ints)
    return [[Fraction(x, D) for x in v] for v in basis]


def glue_overlattice(M: Lattice, glue) -> Lattice:
    basis = overlattice_basis(M, glue)
    G = intmat.congruence(M.gram, intmat.transpose(basis))
    if not intmat.is_integral(G):
        raise NonIntegralPairingError("overlattice Gram is not integral")
    return make_lattice([[int(x) for x in row] for row in G])


def _norm_mod2_zero(M: Lattice, v) -> bool:
    nv = Fraction(M.norm(v))
    return nv.denominator == 1 and nv.numerator % 2 == 0


@dataclass(frozen=True)
class GluePipeline:
    """K + E6(-1) glued to an even unimodular lattice and the recovered orthocomplement."""

    M: Lattice
    glue_class: tuple[int, int]
    glue_vector: tuple[Fraction, ...]
    k_part_norm: Fraction
    e_part_norm: Fraction
    glued: Lattice
    k_coordinates: tuple[tuple[int, ...], ...]
    complement_basis: tuple[tuple[int, ...], ...]
    complement: Lattice
    witness: tuple[tuple[int, ...], ...] | None


def select_glue(K: Lattice, E: Lattice) -> tuple[tuple[int, int], list[Fraction], Fraction, Fraction]:
    """First class (a, b) of the discriminant groups, in lexicographic order, whose glue vector has even norm."""
    DK, DE = discriminant_group(K), discriminant_group(E)
    if len(DK.elementary_divisors) != 1 or len(DE.elementary_divisors) != 1:
        raise ValueError("expected cyclic discriminant groups")
    M = direct_sum(K, E)
    for a in range(DK.elementary_divisors[0]):
        for b in range(DE.elementary_divisors[0]):
            if (a, b) == (0, 0):
                continue
            k = DK.vector([a])
            e = DE.vector([b])
            v = k + e
            if _norm_mod2_zero(M, v):
                return (a, b), v, Fraction(K.norm(k)), Fraction(E.norm(e))
    raise ValueError("no isotropic glue class")


def glue_pipeline(check_isometry: bool = True) -> GluePipeline:
    """Construct L from K + E6(-1) by gluing, then recover E6(-1) as the orthocomplement of K."""
    K, E = named("K"), named("E6_neg")
    M = direct_sum(K, E)
    cls, v, kn, en = select_glue(K, E)
    basis = overlattice_basis(M, [v])
    glued = make_lattice([[int(x) for x in row]
                          for row in intmat.congruence(M.gram, intmat.transpose(basis))])
    Binv = intmat.inverse(intmat.transpose(basis))
    kcoords = []
    for i in range(K.rank):
        e_i = [int(i == j) for j in range(M.rank)]
        c = intmat.matvec(Binv, e_i)
        assert intmat.is_integral(c)
        kcoords.append(tuple(int(x) for x in c))
    comp_basis = orthocomplement_basis(glued, kcoords)
    comp = make_lattice(intmat.congruence(glued.gram, intmat.transpose(comp_basis)))
    T = is_isometric(comp, E) if check_isometry else None
    return GluePipeline(
        M=M,
        glue_class=cls,
        glue_vector=tuple(v),
        k_part_norm=kn,
        e_part_norm=en,
        glued=glued,
        k_coordinates=tuple(kcoords),
        complement_basis=tuple(tuple(b) for b in comp_basis),
        complement=comp,
        witness=None if T is None else tuple(tuple(r) for r in T),
    )
