"""Exterior algebra on x_1..x_g, y_1..y_g with exact rational coefficients.

Used as a model of the cohomology ring of a principally polarized abelian
variety of dimension g: the theta class is ``sum x_i ^ y_i`` and the top
degree is normalized by ``omega = x_1 ^ y_1 ^ ... ^ x_g ^ y_g``.

Monomials are bit sets: bit ``i`` is ``x_{i+1}`` and bit ``g + i`` is
``y_{i+1}``; a monomial denotes the wedge of its generators in increasing
bit order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import intmat
from .errors import GeneratorMismatchError, NotTopDegreeError


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _merge_sign(a: int, b: int) -> int:
    """Sign of reordering ``e_a ^ e_b`` into increasing bit order."""
    inversions = 0
    while b:
        low = b & -b
        inversions += _popcount(a & ~(2 * low - 1))  # bits of a above this bit of b
        b ^= low
    return -1 if inversions & 1 else 1


@dataclass(frozen=True)
class Multivector:
    g: int
    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_dict(cls, g: int, terms: Mapping[int, object]) -> "Multivector":
        clean = tuple(sorted((m, Fraction(c)) for m, c in terms.items() if c != 0))
        return cls(g, clean)

    @classmethod
    def zero(cls, g: int) -> "Multivector":
        return cls(g, ())

    @classmethod
    def one(cls, g: int) -> "Multivector":
        return cls(g, ((0, Fraction(1)),))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def coefficient(self, mono: int) -> Fraction:
        return self.as_dict().get(mono, Fraction(0))

    def degrees(self) -> set[int]:
        return {_popcount(m) for m, _ in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Multivector") -> None:
        if self.g != other.g:
            raise GeneratorMismatchError(f"g={self.g} vs g={other.g}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._check(other)
        out = self.as_dict()
        for m, c in other.terms:
            out[m] = out.get(m, 0) + c
        return Multivector.from_dict(self.g, out)

    def __neg__(self) -> "Multivector":
        return Multivector(self.g, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c) -> "Multivector":
        return Multivector.from_dict(self.g, {m: Fraction(c) * v for m, v in self.terms})

    def __mul__(self, c) -> "Multivector":
        return self.scale(c)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Multivector":
        return self.scale(Fraction(1) / Fraction(c))

    def __xor__(self, other: "Multivector") -> "Multivector":
        return wedge(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            parts.append(f"{c}*{monomial_name(m, self.g)}")
        return " + ".join(parts)


def monomial_name(mono: int, g: int) -> str:
    if mono == 0:
        return "1"
    names = [("x%d" % (i + 1)) if i < g else ("y%d" % (i - g + 1))
             for i in range(2 * g) if mono >> i & 1]
    return "^".join(names)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    a._check(b)
    out: dict[int, Fraction] = {}
    for ma, ca in a.terms:
        for mb, cb in b.terms:
            if ma & mb:
                continue
            m = ma | mb
            out[m] = out.get(m, 0) + _merge_sign(ma, mb) * ca * cb
    return Multivector.from_dict(a.g, out)


def power(a: Multivector, k: int) -> Multivector:
    out = Multivector.one(a.g)
    for _ in range(k):
        out = wedge(out, a)
    return out


def x(i: int, g: int) -> Multivector:
    """Generator x_i, 1-based."""
    return Multivector(g, ((1 << (i - 1), Fraction(1)),))


def y(i: int, g: int) -> Multivector:
    return Multivector(g, ((1 << (g + i - 1), Fraction(1)),))


def theta_class(g: int) -> Multivector:
    if g < 1:
        raise ValueError("g must be positive")
    out = Multivector.zero(g)
    for i in range(1, g + 1):
        out = out + wedge(x(i, g), y(i, g))
    return out


def omega(g: int) -> Multivector:
    out = Multivector.one(g)
    for i in range(1, g + 1):
        out = wedge(wedge(out, x(i, g)), y(i, g))
    return out


def deg_top(m: Multivector, g: int | None = None) -> Fraction:
    """Coefficient of omega in a top-degree element."""
    g = m.g if g is None else g
    if g != m.g:
        raise GeneratorMismatchError(f"g={g} vs multivector g={m.g}")
    top = (1 << 2 * g) - 1
    if any(mono != top for mono, _ in m.terms):
        raise NotTopDegreeError(f"degrees {sorted(m.degrees())} != {2 * g}")
    return m.coefficient(top) / omega(g).coefficient(top)


# --- the 28x28 lattice H^2(X, Z) for g = 4 --------------------------------

def lx_basis(g: int = 4) -> list[tuple[str, Multivector]]:
    """Labelled basis of the second exterior power: u_ik = x_i^y_k (row-major), then v_ik = x_i^x_k, w_ik = y_i^y_k (i<k)."""
    out = []
    for i in range(1, g + 1):
        for k in range(1, g + 1):
            out.append((f"u{i}{k}", wedge(x(i, g), y(k, g))))
    pairs = [(i, k) for i in range(1, g + 1) for k in range(i + 1, g + 1)]
    for i, k in pairs:
        out.append((f"v{i}{k}", wedge(x(i, g), x(k, g))))
    for i, k in pairs:
        out.append((f"w{i}{k}", wedge(y(i, g), y(k, g))))
    return out


def gram_LX(g: int = 4) -> tuple[list[str], list[list[int]]]:
    """Gram of b(a, b) = deg(a ^ b ^ theta^(g-2)) on :func:`lx_basis`."""
    basis = lx_basis(g)
    th = power(theta_class(g), g - 2)
    G = []
    for _, a in basis:
        at = wedge(a, th)
        row = []
        for _, b in basis:
            prod = wedge(at, b)
            val = Fraction(0) if prod.is_zero() else deg_top(prod)
            assert val.denominator == 1
            row.append(int(val))
        G.append(row)
    return [name for name, _ in basis], G


@dataclass(frozen=True)
class K2Decomposition:
    ok: bool
    labels: tuple[str, ...]
    order: tuple[int, ...]  # basis index placed at each position of the target
    signs: tuple[int, ...]
    blocks: tuple[tuple[tuple[str, ...], bool], ...]
    cross_terms_zero: bool

    def witness(self) -> list[list[int]]:
        """Signed permutation T with T^T gram_LX T = gram of K(2)."""
        n = len(self.order)
        T = [[0] * n for _ in range(n)]
        for pos, (idx, s) in enumerate(zip(self.order, self.signs)):
            T[idx][pos] = s
        return T


def verify_K2_decomposition(g: int = 4) -> K2Decomposition:
    """Check gram_LX splits as U(2)^12 + Lambda(2), ordered like K(2) = (U^12 + Lambda)(2).

    The hyperbolic blocks <u_ik, u_ki> and <v_ik, w_ik> have Gram
    [[0, -2], [-2, 0]]; negating the second vector turns that into U(2), so
    the witness is a signed permutation.
    """
    from .lattice import LAMBDA4_GRAM, U_GRAM, named, rescale

    labels, G = gram_LX(g)
    idx = {name: i for i, name in enumerate(labels)}
    U2 = [[2 * a for a in r] for r in U_GRAM]
    Lam2 = [[2 * a for a in r] for r in LAMBDA4_GRAM]
    order: list[int] = []
    signs: list[int] = []
    blocks = []
    pairs = [(i, k) for i in range(1, g + 1) for k in range(i + 1, g + 1)]
    for i, k in pairs:
        for a, b in ((f"u{i}{k}", f"u{k}{i}"), (f"v{i}{k}", f"w{i}{k}")):
            sub = [idx[a], idx[b]]
            sg = [1, -1]
            blk = [[sg[r] * sg[c] * G[sub[r]][sub[c]] for c in range(2)] for r in range(2)]
            blocks.append(((a, b), blk == U2))
            order += sub
            signs += sg
    diag = [idx[f"u{i}{i}"] for i in range(1, g + 1)]
    blk = [[G[r][c] for c in diag] for r in diag]
    blocks.append((tuple(f"u{i}{i}" for i in range(1, g + 1)), blk == Lam2))
    order += diag
    signs += [1] * len(diag)
    dec = K2Decomposition(False, tuple(labels), tuple(order), tuple(signs), tuple(blocks), False)
    T = dec.witness()
    target = rescale(named("K"), 2).rows() if g == 4 else None
    transformed = intmat.congruence(G, T)
    # cross terms: every entry outside the diagonal blocks vanishes
    sizes = [2] * (len(blocks) - 1) + [len(diag)]
    block_of = [j for j, s in enumerate(sizes) for _ in range(s)]
    cross_zero = all(transformed[r][c] == 0
                     for r in range(len(order)) for c in range(len(order))
                     if block_of[r] != block_of[c])
    ok = cross_zero and all(b for _, b in blocks) and (target is None or transformed == target)
    return K2Decomposition(ok, tuple(labels), tuple(order), tuple(signs), tuple(blocks), cross_zero)


# --- Prym curve class arithmetic (g = 4) ----------------------------------

PRYM_CURVE_GENUS = 9  # genus of the double cover in the Prym presentation of a general ppav of dimension 4
CANONICAL_MULTIPLE = 2  # K_Y = 2 theta


@dataclass(frozen=True)
class ClassReport:
    deg_alpha_sq: Fraction
    deg_lambda_KY: Fraction
    deg_lambda_sq: Fraction
    deg_beta_sq: Fraction
    half_norm_e: Fraction


def prym_class_report(g: int = 4) -> ClassReport:
    """Degrees for the class of a Prym-embedded curve on Y, with alpha = theta / 3."""
    if g != 4:
        raise ValueError("only g = 4 is meaningful here")
    th = theta_class(g)
    th2 = power(th, 2)
    alpha = th / 3
    deg_alpha_sq = deg_top(wedge(wedge(alpha, alpha), th2))
    # K_Y restricted to the curve: (2 theta) . lambda on Y, lambda . theta = alpha . theta
    deg_lambda_KY = deg_top(wedge(alpha, power(th, 3)) * CANONICAL_MULTIPLE)
    deg_lambda_sq = 2 * PRYM_CURVE_GENUS - 2 - deg_lambda_KY
    deg_beta_sq = deg_lambda_sq - deg_alpha_sq
    return ClassReport(deg_alpha_sq, deg_lambda_KY, Fraction(deg_lambda_sq),
                       deg_beta_sq, deg_beta_sq / 2)
