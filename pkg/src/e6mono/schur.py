"""Partitions, Schur polynomials and Littlewood-Richardson products.

Partitions are tuples of positive integers in weakly decreasing order.
Polynomials in ``nvars`` variables are dicts mapping exponent tuples to
integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import CapViolationError, OddCoefficientParityError, TooManyRowsError

Partition = tuple


def partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not weakly decreasing")
    return tuple(x for x in p if x)


def conjugate(p: Sequence[int]) -> Partition:
    p = partition(p)
    return tuple(sum(1 for x in p if x > j) for j in range(p[0])) if p else ()


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    max_parts = n if max_parts is None else max_parts
    if n == 0:
        return [()]
    if max_parts == 0:
        return []
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, max_parts - 1, first):
            out.append((first,) + rest)
    return out


def _check_rows(p: Partition, nvars: int) -> None:
    if len(p) > nvars:
        raise TooManyRowsError(f"{p} has {len(p)} rows > {nvars}")


@lru_cache(maxsize=None)
def _horizontal_strips(lam: Partition, k: int) -> tuple[Partition, ...]:
    """All nu inside lam with lam/nu a horizontal strip of size k."""
    out = []
    n = len(lam)

    def rec(i, left, acc):
        if i == n:
            if left == 0:
                out.append(partition(acc))
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for nu_i in range(lam[i], lo - 1, -1):
            take = lam[i] - nu_i
            if take > left:
                break
            rec(i + 1, left - take, acc + [nu_i])

    rec(0, k, [])
    return tuple(out)


# --- monomial expansions --------------------------------------------------

@lru_cache(maxsize=None)
def _expand(p: Partition, nvars: int) -> tuple:
    # peel the entries equal to nvars: they form a horizontal strip
    if nvars == 0:
        return (((), 1),) if not p else ()
    out: dict[tuple, int] = {}
    for k in range(sum(p) + 1):
        for nu in _horizontal_strips(p, k):
            if len(nu) > nvars - 1:
                continue
            for mono, c in _expand(nu, nvars - 1):
                key = mono + (k,)
                out[key] = out.get(key, 0) + c
    return tuple(sorted(out.items()))


def schur_expand(p: Sequence[int], nvars: int) -> dict[tuple, int]:
    """Monomial expansion of s_p(x_1..x_nvars); coefficients count semistandard tableaux."""
    p = partition(p)
    _check_rows(p, nvars)
    return dict(_expand(p, nvars))


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape lam and content mu."""
    if not mu:
        return int(not lam)
    if sum(lam) != sum(mu):
        return 0
    return sum(kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1])
               if len(nu) <= len(mu) - 1)


def poly_mul(a: Mapping[tuple, int], b: Mapping[tuple, int]) -> dict[tuple, int]:
    out: dict[tuple, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _is_partition_exponent(e: tuple) -> bool:
    return all(a >= b for a, b in zip(e, e[1:]))


def schur_decompose(poly: Mapping[tuple, int], nvars: int) -> "SchurVector":
    """Schur coefficients of a symmetric polynomial, by peeling the leading monomial.

    Only the partition-shaped exponents are read; the lexicographically
    largest one is the leading term of the next Schur constituent.
    """
    rest = {partition(e): c for e, c in poly.items() if c and _is_partition_exponent(e)}
    out: dict[Partition, int] = {}
    while rest:
        lead = max(rest, key=lambda q: q + (0,) * (nvars - len(q)))
        c = rest[lead]
        out[lead] = c
        n = sum(lead)
        for mu in partitions_of(n, nvars):
            k = kostka(lead, mu)
            if k:
                v = rest.get(mu, 0) - c * k
                if v:
                    rest[mu] = v
                else:
                    rest.pop(mu, None)
    return SchurVector.from_dict(out, nvars)


# --- Schur vectors --------------------------------------------------------

@dataclass(frozen=True)
class SchurVector:
    coeffs: tuple[tuple[Partition, int], ...]
    nvars: int

    @classmethod
    def from_dict(cls, d: Mapping[Sequence[int], int], nvars: int) -> "SchurVector":
        acc: dict[Partition, int] = {}
        for p, c in d.items():
            p = partition(p)
            if c and len(p) <= nvars:
                acc[p] = acc.get(p, 0) + c
        return cls(tuple(sorted(((p, c) for p, c in acc.items() if c), reverse=True)), nvars)

    @classmethod
    def single(cls, p: Sequence[int], nvars: int) -> "SchurVector":
        p = partition(p)
        _check_rows(p, nvars)
        return cls(((p, 1),), nvars)

    def as_dict(self) -> dict[Partition, int]:
        return dict(self.coeffs)

    def __add__(self, other: "SchurVector") -> "SchurVector":
        d = self.as_dict()
        for p, c in other.coeffs:
            d[p] = d.get(p, 0) + c
        return SchurVector.from_dict(d, min(self.nvars, other.nvars))

    def partitions(self) -> list[Partition]:
        return [p for p, _ in self.coeffs]

    def dimension(self, N: int | None = None) -> int:
        N = self.nvars if N is None else N
        return sum(c * dim_irrep(p, N) for p, c in self.coeffs)

    def to_poly(self) -> dict[tuple, int]:
        out: dict[tuple, int] = {}
        for p, c in self.coeffs:
            for e, k in schur_expand(p, self.nvars).items():
                out[e] = out.get(e, 0) + c * k
        return {e: c for e, c in out.items() if c}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join((f"{c}*" if c != 1 else "") + "s(" + ",".join(map(str, p)) + ")"
                          for p, c in self.coeffs)


# --- Littlewood-Richardson ------------------------------------------------

def _is_lattice_word(rows: list[list[int]], k: int) -> bool:
    # rows[r][i] = number of boxes labelled i+1 in row r; read right to left, top to bottom
    seen = [0] * (k + 1)
    for counts in rows:
        for i in range(k - 1, -1, -1):
            for _ in range(counts[i]):
                seen[i] += 1
                if i and seen[i] > seen[i - 1]:
                    return False
    return True


def lr_coefficients(p: Sequence[int], q: Sequence[int]) -> dict[Partition, int]:
    """c^nu_{p,q} for all nu, by counting LR tableaux of shape nu/p and content q."""
    p, q = partition(p), partition(q)
    k = len(q)
    out: dict[Partition, int] = {}

    def add_strip(shape: list[int], label: int, fill: list[list[int]]):
        if label == k:
            if _is_lattice_word(fill, k):
                nu = partition(shape)
                out[nu] = out.get(nu, 0) + 1
            return
        size = q[label]
        n = len(shape)
        ext = shape + [0]
        # add ``size`` boxes, at most one per column: row r may grow up to the old row r-1
        def rec(r, left, new):
            if r == n + 1:
                if left == 0:
                    sh = [x for x in new if x]
                    fl = [row[:] for row in fill] + [[0] * k for _ in range(len(sh) - len(fill))]
                    for i, (a, b) in enumerate(zip(new, ext)):
                        if a > b:
                            fl[i][label] += a - b
                    # prune: row r can only hold labels <= r
                    if all(fl[i][j] == 0 for i in range(len(fl)) for j in range(i + 1, k)):
                        add_strip(sh, label + 1, fl)
                return
            cap = ext[r - 1] - ext[r] if r else left
            for t in range(min(cap, left), -1, -1):
                rec(r + 1, left - t, new + [ext[r] + t])

        rec(0, size, [])

    add_strip(list(p), 0, [[0] * k for _ in p])
    return out


def lr_product(p: Sequence[int], q: Sequence[int], row_cap: int | None = None) -> SchurVector:
    p, q = partition(p), partition(q)
    cap = len(p) + len(q) if row_cap is None else row_cap
    return SchurVector.from_dict(lr_coefficients(p, q), cap)


def schur_multiply(f: SchurVector, g: SchurVector) -> SchurVector:
    acc: dict[Partition, int] = {}
    for p, a in f.coeffs:
        for q, b in g.coeffs:
            for nu, c in lr_coefficients(p, q).items():
                acc[nu] = acc.get(nu, 0) + a * b * c
    return SchurVector.from_dict(acc, min(f.nvars, g.nvars))


@lru_cache(maxsize=None)
def _pair_splits(s: int, t: int, mu: Partition, nvars: int) -> tuple:
    """Multiset of (sorted a, sorted mu - a) over compositions a <= mu with |a| = s."""
    mu_full = mu + (0,) * (nvars - len(mu))
    acc: dict[tuple, int] = {}

    def rec(i, left, a):
        if i == nvars:
            if left == 0:
                b = tuple(m - x for m, x in zip(mu_full, a))
                key = (partition(sorted(a, reverse=True)), partition(sorted(b, reverse=True)))
                acc[key] = acc.get(key, 0) + 1
            return
        for x in range(min(mu_full[i], left) + 1):
            rec(i + 1, left - x, a + (x,))

    rec(0, s, ())
    return tuple(acc.items())


def brute_force_product(p: Sequence[int], q: Sequence[int], nvars: int) -> SchurVector:
    """s_p * s_q in nvars variables by monomial multiplication and greedy Schur peeling.

    The product's coefficient at x^mu is the sum over a + b = mu of
    K_{p,a} K_{q,b}; Kostka numbers are symmetric in the content so only
    sorted contents are looked up.
    """
    p, q = partition(p), partition(q)
    if len(p) > nvars or len(q) > nvars:
        return SchurVector((), nvars)
    s, t = sum(p), sum(q)
    poly = {}
    for mu in partitions_of(s + t, nvars):
        c = sum(m * kostka(p, a) * kostka(q, b) for (a, b), m in _pair_splits(s, t, mu, nvars))
        if c:
            poly[mu + (0,) * (nvars - len(mu))] = c
    return schur_decompose(poly, nvars)


def dim_irrep(p: Sequence[int], N: int) -> int:
    """Dimension of the gl_N irreducible with highest weight p (hook-content formula)."""
    p = partition(p)
    _check_rows(p, N)
    pt = conjugate(p)
    num = den = 1
    for i, row in enumerate(p):
        for j in range(row):
            num *= N + j - i
            den *= (row - j - 1) + (pt[j] - i - 1) + 1
    assert num % den == 0
    return num // den


# --- second exterior and symmetric squares --------------------------------

def _adams2(poly: Mapping[tuple, int]) -> dict[tuple, int]:
    return {tuple(2 * x for x in e): c for e, c in poly.items()}


def wedge_or_sym_square(f: SchurVector, kind: str) -> SchurVector:
    """Lambda^2 or S^2 of the representation with character f: (f^2 -/+ f(x^2)) / 2."""
    if kind not in ("wedge", "sym"):
        raise ValueError(f"kind must be 'wedge' or 'sym', not {kind!r}")
    poly = f.to_poly()
    sq = poly_mul(poly, poly)
    sign = -1 if kind == "wedge" else 1
    for e, c in _adams2(poly).items():
        sq[e] = sq.get(e, 0) + sign * c
    return schur_decompose(halve(sq), f.nvars)


def halve(poly: Mapping[tuple, int]) -> dict[tuple, int]:
    """Exact division by 2; for integral f the square terms c^2 -/+ c are always even."""
    half = {}
    for e, c in poly.items():
        if c % 2:
            raise OddCoefficientParityError(f"odd coefficient {c} at {e}")
        if c:
            half[e] = c // 2
    return half


def fundamental_product(m: int, n: int) -> list[Partition]:
    """Constituents of s_(1^m) s_(1^n), n <= m: conjugates of (m+i, n-i), i = 0..n."""
    if not 0 <= n <= m:
        raise ValueError("need 0 <= n <= m")
    return [conjugate((m + i, n - i)) for i in range(n + 1)]


# --- convolution labels ---------------------------------------------------

@dataclass(frozen=True)
class ConvolutionLabels:
    labels: tuple[Partition, ...]
    dropped: tuple[Partition, ...]
    negligible: bool
    sl_labels: tuple[Partition, ...]


def strip_full_columns(p: Sequence[int], nvars: int) -> Partition:
    """Remove columns of height nvars (a power of the determinant, trivial for sl)."""
    p = partition(p)
    _check_rows(p, nvars)
    if len(p) < nvars:
        return p
    k = p[-1]
    return partition(x - k for x in p)


def convolution_labels(m: int, n: int, g: int) -> ConvolutionLabels:
    """Labels (m+i, n-i), i = 0..n, of the convolution of the degree m and n pieces."""
    cap = 2 * g - 2
    if not (0 <= n <= m <= cap):
        raise CapViolationError(f"need 0 <= n <= m <= {cap}, got m={m}, n={n}")
    keep, drop = [], []
    for i in range(n + 1):
        lab = partition((m + i, n - i))
        (drop if lab[0] > cap else keep).append(lab)
    sl = tuple(strip_full_columns(conjugate(p), cap) for p in keep)
    return ConvolutionLabels(tuple(keep), tuple(drop), True, sl)
