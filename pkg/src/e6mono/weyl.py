"""Finite integral matrix groups acting on lattices, with W(E6) as the main case.

Group elements act on coordinate column vectors, ``v -> g @ v``, and
preserve the lattice form: ``g.T @ gram @ g == gram``.
"""

from __future__ import annotations

import hashlib
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy as np

from . import intmat
from ._accel import matrix_closure
from .errors import CapExceededError, NotIsometryError, NotRootError
from .isometry import scaled_dual, short_vectors
from .lattice import Lattice, discriminant_group, named

logger = logging.getLogger(__name__)

DEFAULT_CAP = 1_000_000
W_E6_ORDER = 51840


@dataclass(eq=False)
class MatrixGroup:
    elements: np.ndarray  # (N, d, d) int64, sorted lexicographically
    generators: np.ndarray
    gram: np.ndarray | None = None
    _index: dict | None = field(default=None, repr=False)

    @property
    def degree(self) -> int:
        return self.elements.shape[1]

    @property
    def order(self) -> int:
        return self.elements.shape[0]

    def __len__(self) -> int:
        return self.order

    def index(self, g) -> int:
        if self._index is None:
            self._index = {e.tobytes(): i for i, e in enumerate(self.elements)}
        return self._index[np.asarray(g, dtype=np.int64).tobytes()]

    def __contains__(self, g) -> bool:
        try:
            self.index(g)
        except KeyError:
            return False
        return True

    def determinants(self) -> np.ndarray:
        return batch_det(self.elements)

    def traces(self) -> np.ndarray:
        return np.einsum("nii->n", self.elements)

    def __repr__(self) -> str:
        return f"MatrixGroup(degree={self.degree}, order={self.order})"


def batch_det(A: np.ndarray) -> np.ndarray:
    """Exact determinants of a stack of small integer matrices (vectorized Bareiss)."""
    A = np.array(A, dtype=np.int64, copy=True)
    N, n, _ = A.shape
    if n == 0:
        return np.ones(N, dtype=np.int64)
    rows = np.arange(N)
    sign = np.ones(N, dtype=np.int64)
    prev = np.ones(N, dtype=np.int64)
    singular = np.zeros(N, dtype=bool)
    for k in range(n - 1):
        nz = A[:, k:, k] != 0
        has = nz.any(axis=1)
        singular |= ~has
        piv = k + nz.argmax(axis=1)
        swap = (piv != k) & has
        if swap.any():
            r = rows[swap]
            top = A[r, k].copy()
            A[r, k] = A[r, piv[swap]]
            A[r, piv[swap]] = top
            sign[swap] = -sign[swap]
        pk = np.where(has, A[:, k, k], 1)
        sub = A[:, k + 1:, k + 1:] * pk[:, None, None] - A[:, k + 1:, k:k + 1] * A[:, k:k + 1, k + 1:]
        A[:, k + 1:, k + 1:] = sub // prev[:, None, None]
        prev = pk
    out = sign * A[:, n - 1, n - 1]
    out[singular] = 0
    return out


def roots(L: Lattice) -> list[tuple[int, ...]]:
    """All vectors of norm +-2 in a definite lattice."""
    sv = short_vectors(L, 2)
    return [v for v, nm in zip(sv.vectors, sv.norms) if abs(nm) == 2]


def reflection(L: Lattice, r: Sequence[int]) -> list[list[int]]:
    """Matrix of ``v -> v - 2 b(v, r) / b(r, r) * r`` in the lattice basis."""
    rr = L.norm(r)
    if abs(rr) != 2:
        raise NotRootError(f"b(r, r) = {rr}, expected +-2")
    Gr = intmat.matvec(L.gram, r)
    n = L.rank
    R = [[Fraction(int(i == j)) - Fraction(2 * r[i] * Gr[j], rr) for j in range(n)] for i in range(n)]
    if not intmat.is_integral(R):
        raise NotRootError("reflection is not integral")
    return [[int(x) for x in row] for row in R]


def _preserves(gram: np.ndarray, mats: np.ndarray) -> np.ndarray:
    return np.all(np.einsum("nki,kl,nlj->nij", mats, gram, mats) == gram, axis=(1, 2))


def _cache_key(gens: np.ndarray, gram: np.ndarray | None) -> str:
    h = hashlib.sha256(np.ascontiguousarray(gens, dtype=np.int64).tobytes())
    h.update(str(gens.shape).encode())
    if gram is not None:
        h.update(np.ascontiguousarray(gram, dtype=np.int64).tobytes())
    return h.hexdigest()[:32]


def generate(gens, cap: int = DEFAULT_CAP, gram=None, cache_dir: str | Path | None = None) -> MatrixGroup:
    """Closure of ``gens`` under multiplication.

    With ``gram`` given, every generator and every element is checked to
    preserve it. ``cache_dir`` stores the sorted element array keyed by a
    hash of the generators.
    """
    gens = np.asarray(gens, dtype=np.int64)
    if gens.ndim == 2:
        gens = gens[None]
    gram_arr = None if gram is None else np.asarray(gram.gram if isinstance(gram, Lattice) else gram,
                                                    dtype=np.int64)
    if gram_arr is not None and len(gens) and not _preserves(gram_arr, gens).all():
        raise NotIsometryError("a generator does not preserve the Gram matrix")
    if len(gens) == 0:
        raise ValueError("need at least one generator (use the identity for the trivial group)")
    cache_file = None
    if cache_dir is not None:
        cache_file = Path(cache_dir) / f"matgroup-{_cache_key(gens, gram_arr)}.npy"
        if cache_file.exists():
            elements = np.load(cache_file)
            if len(elements) <= cap:
                logger.info("loaded %d elements from %s", len(elements), cache_file)
                return MatrixGroup(elements, gens, gram_arr)
    elements, status = matrix_closure(gens, cap)
    if status == -1:
        raise CapExceededError(f"group order exceeds cap {cap}")
    if status == -2:
        raise CapExceededError("matrix entries grew without bound (group is infinite)")
    if gram_arr is not None:
        ok = _preserves(gram_arr, elements)
        if not ok.all():
            raise NotIsometryError("closure produced a non-isometry")
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        np.save(cache_file, elements)
    return MatrixGroup(elements, gens, gram_arr)


def subgroup(G: MatrixGroup, mask: np.ndarray) -> MatrixGroup:
    return MatrixGroup(G.elements[mask], G.elements[mask][:0], G.gram)


def sign_kernel(G: MatrixGroup) -> MatrixGroup:
    """Elements of determinant +1."""
    return subgroup(G, G.determinants() == 1)


def simple_reflections(L: Lattice) -> list[list[list[int]]]:
    """Reflections in the basis vectors (the simple roots for a Cartan Gram)."""
    n = L.rank
    return [reflection(L, [int(i == j) for j in range(n)]) for i in range(n)]


def weyl_group(name: str = "E6", cap: int = DEFAULT_CAP, cache_dir=None) -> MatrixGroup:
    L = named(name)
    return generate(simple_reflections(L), cap=cap, gram=L, cache_dir=cache_dir)


def automorphism_group_e6(cap: int = DEFAULT_CAP, cache_dir=None) -> MatrixGroup:
    """W(E6) x {+-1}."""
    L = named("E6")
    gens = simple_reflections(L) + [(-np.eye(6, dtype=np.int64)).tolist()]
    return generate(gens, cap=cap, gram=L, cache_dir=cache_dir)


# --- discriminant action --------------------------------------------------

@dataclass(frozen=True)
class DiscriminantAction:
    """Action on L*/L: ``images[i, :, j]`` is the class of ``g_i`` applied to generator ``j``."""

    divisors: tuple[int, ...]
    images: np.ndarray  # (N, k, k)
    is_trivial: bool

    def __getitem__(self, i: int) -> np.ndarray:
        return self.images[i]

    def compose(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Class matrix of the composite action ``a o b``."""
        mods = np.array(self.divisors, dtype=np.int64)
        return (a @ b) % mods[:, None]


def discriminant_action(G: MatrixGroup | np.ndarray, L: Lattice) -> DiscriminantAction:
    D = discriminant_group(L)
    elements = G.elements if isinstance(G, MatrixGroup) else np.asarray(G, dtype=np.int64)
    k = len(D.elementary_divisors)
    N = elements.shape[0]
    if k == 0:
        return DiscriminantAction((), np.zeros((N, 0, 0), dtype=np.int64), True)
    divs = np.array(D.elementary_divisors, dtype=np.int64)
    # scaled generators d_j * x_j are integer vectors
    X = np.array([[int(c * d) for c in g] for g, d in zip(D.generators, D.elementary_divisors)],
                 dtype=np.int64).T  # (n, k)
    rows = np.array(D.class_rows, dtype=np.int64)  # (k, n)
    imgs = np.einsum("an,Nnm,mj->Naj", rows, elements, X)  # class rows of g (d_j x_j)
    dj = divs[None, None, :]
    if np.any(imgs % dj):
        raise ArithmeticError("group does not preserve the dual lattice")
    imgs = (imgs // dj) % divs[None, :, None]
    ident = np.eye(k, dtype=np.int64)
    trivial = bool(np.all(imgs == ident[None]))
    return DiscriminantAction(tuple(int(d) for d in divs), imgs, trivial)


# --- orbits ---------------------------------------------------------------

def _canonical_line(v: tuple[int, ...]) -> tuple[int, ...]:
    for x in v:
        if x:
            return v if x > 0 else tuple(-a for a in v)
    return v


@dataclass(frozen=True)
class LineOrbits:
    orbit_sizes: tuple[int, ...]
    stabilizer_orders: tuple[int, ...]
    representatives: tuple[tuple[int, ...], ...]


def line_orbits(G: MatrixGroup, vectors) -> LineOrbits:
    """Orbits of G on lines {+-v}; stabilizers counted element by element."""
    vecs = [tuple(int(a) for a in v) for v in vectors]
    vset = set(vecs)
    if any(tuple(-a for a in v) not in vset for v in vecs):
        raise ValueError("vector set must be closed under negation")
    lines = sorted({_canonical_line(v) for v in vecs})
    lidx = {l: i for i, l in enumerate(lines)}
    arr = np.array(lines, dtype=np.int64).T  # (d, m)
    gens = G.generators if len(G.generators) else G.elements
    parent = list(range(len(lines)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        imgs = (g @ arr).T
        for i, w in enumerate(imgs):
            j = lidx.get(_canonical_line(tuple(int(a) for a in w)))
            if j is None:
                raise ValueError("vector set is not G-stable")
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    orbits: dict[int, list[int]] = {}
    for i in range(len(lines)):
        orbits.setdefault(find(i), []).append(i)
    sizes, stabs, reps = [], [], []
    for root in sorted(orbits):
        rep = np.array(lines[root], dtype=np.int64)
        imgs = G.elements @ rep
        fixed = np.all(imgs == rep, axis=1) | np.all(imgs == -rep, axis=1)
        sizes.append(len(orbits[root]))
        stabs.append(int(fixed.sum()))
        reps.append(lines[root])
    return LineOrbits(tuple(sizes), tuple(stabs), tuple(reps))


def vector_orbit(G: MatrixGroup, v) -> set[tuple[int, ...]]:
    imgs = G.elements @ np.asarray(v, dtype=np.int64)
    return {tuple(int(a) for a in w) for w in imgs}


def dual_minimal_vectors(L: Lattice | None = None):
    """Minimal vectors of E6* in E6-coordinates (rational), with their norm."""
    L = named("E6") if L is None else L
    D, s = scaled_dual(L)
    sv = short_vectors(D, Fraction(4, 3), scale=s)
    inv = intmat.inverse(L.gram)
    # D's basis is the dual basis: coordinates c in the dual basis map to inv @ c in L-coordinates
    out = [tuple(intmat.matvec(inv, v)) for v in sv.vectors]
    return sv, out


def _to_dual_basis(mats: np.ndarray, L: Lattice) -> np.ndarray:
    gram = np.asarray(L.gram, dtype=np.int64)
    inv = intmat.inverse(L.gram)
    s = intmat.common_denominator(x for row in inv for x in row)
    inv_s = np.array([[int(x * s) for x in row] for row in inv], dtype=np.int64)
    num = np.einsum("ij,njk,kl->nil", gram, mats, inv_s)
    if np.any(num % s):
        raise ArithmeticError("dual-basis action is not integral")
    return num // s


def dual_basis_group(G: MatrixGroup, L: Lattice) -> MatrixGroup:
    """The same group written in the dual basis, ``gram @ g @ gram^-1``.

    Coordinates in the dual basis are the integral coordinates used by
    :func:`scaled_dual`, so this group acts on the dual short vectors.
    """
    elements = _to_dual_basis(G.elements, L)
    order = np.lexsort(elements.reshape(len(elements), -1).T[::-1])
    gens = _to_dual_basis(G.generators, L) if len(G.generators) else G.generators
    return MatrixGroup(elements[order], gens, None)


# --- characters and subgroup filters --------------------------------------

def character_norm(G: MatrixGroup) -> int:
    tr = G.traces()
    return int(np.sum(tr * tr))


def character_irreducibility(G: MatrixGroup) -> bool:
    """True iff sum of trace(g)^2 equals |G| (rational character of norm 1)."""
    return character_norm(G) == G.order


def a6_order_filter(order: int) -> bool:
    """Lagrange test: can a group of this order contain A6 (order 360)?"""
    if order < 1:
        raise ValueError("order must be positive")
    return order % 360 == 0


MAXIMAL_SUBGROUP_ORDERS = (
    ("W+(E6), index 2", 25920),
    ("stabilizer of a root line", 1440),
    ("stabilizer of a line through a minimal dual vector", 1920),
    ("order 2^4*3^4 (first)", 2**4 * 3**4),
    ("order 2^4*3^4 (second)", 2**4 * 3**4),
    ("order 2^7*3^9 as printed", 2**7 * 3**9),
)


def maximal_subgroup_filter(group_order: int = W_E6_ORDER) -> list[dict]:
    """Apply the A6 Lagrange filter to the listed maximal subgroup orders.

    An order that does not divide ``group_order`` cannot be a subgroup order;
    such entries are flagged as a suspected misprint rather than corrected.
    """
    out = []
    for label, order in MAXIMAL_SUBGROUP_ORDERS:
        divides = group_order % order == 0
        out.append({
            "label": label,
            "order": order,
            "divides_group_order": divides,
            "may_contain_A6": a6_order_filter(order) if divides else None,
            "note": "" if divides else "exceeds |W(E6)|; suspected misprint, not used",
        })
    return out


def divisors_without_a6(n: int = W_E6_ORDER) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0 and not a6_order_filter(d)]
