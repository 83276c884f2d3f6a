"""Finite permutation groups by full enumeration.

Points are 0..N-1; a permutation is its tuple of images. Products follow
(p * q)(x) = p(q(x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .errors import CapExceededError, NotTransitiveError

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a bijection")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def parse_cycles(text: str, n: int) -> Permutation:
    cycles = []
    for chunk in text.replace(")", "").split("("):
        if chunk.strip():
            cycles.append(tuple(int(t) for t in chunk.replace(",", " ").split()))
    return Permutation.from_cycles(cycles, n)


class PermGroup:
    """A permutation group together with its full sorted element table."""

    def __init__(self, degree: int, generators: Sequence[Permutation], cap: int = DEFAULT_CAP):
        self.degree = degree
        self.generators = tuple(generators) or (Permutation.identity(degree),)
        if any(g.degree != degree for g in self.generators):
            raise ValueError("generator degree mismatch")
        gens = np.array([g.images for g in self.generators], dtype=np.int64)
        elements, status = _accel.perm_closure(gens, cap)
        if status == -1:
            raise CapExceededError(f"group order exceeds cap {cap}")
        self.elements = elements
        self.cap = cap

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _keys(self) -> frozenset:
        return frozenset(_accel._row_keys(self.elements))

    @cached_property
    def key(self) -> bytes:
        return self.elements.tobytes()

    def __contains__(self, p: Permutation) -> bool:
        return _accel._row_keys(np.array([p.images], dtype=np.int64))[0] in self._keys

    def issubset(self, other: "PermGroup") -> bool:
        return self._keys <= other._keys

    def __iter__(self):
        for row in self.elements:
            yield Permutation(tuple(int(x) for x in row))

    def orbits(self) -> list[list[int]]:
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g.images):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return list(groups.values())

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def adjoin(self, g: Permutation) -> "PermGroup":
        return PermGroup(self.degree, self.generators + (g,), self.cap)


def symmetric_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    if n == 1:
        return PermGroup(1, [], cap)
    gens = [Permutation.from_cycles([(0, 1)], n), Permutation.from_cycles([tuple(range(n))], n)]
    return PermGroup(n, gens, cap)


def alternating_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    gens = [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)]
    return PermGroup(n, gens, cap)


def cyclic_group(n: int, cap: int = DEFAULT_CAP) -> PermGroup:
    return PermGroup(n, [Permutation.from_cycles([tuple(range(n))], n)], cap)


def group_order(G: PermGroup) -> int:
    return G.order


def three_cycles(n: int) -> list[Permutation]:
    out = []
    for a, b, c in combinations(range(n), 3):
        out.append(Permutation.from_cycles([(a, b, c)], n))
        out.append(Permutation.from_cycles([(a, c, b)], n))
    return out


def contains_alternating(G: PermGroup) -> bool:
    if G.degree < 3:
        return True
    if 2 * G.order < factorial(G.degree):
        return False
    return all(t in G for t in three_cycles(G.degree))


def pair_orbits(G: PermGroup) -> dict[int, list[tuple[int, int]]]:
    n = G.degree
    gens = np.array([g.images for g in G.generators], dtype=np.int64)
    labels = _accel.pair_orbit_labels(gens, n)
    out: dict[int, list[tuple[int, int]]] = {}
    for x, lab in enumerate(labels.tolist()):
        out.setdefault(lab, []).append(divmod(x, n))
    return out


def rank_orbitals(G: PermGroup) -> int:
    """Number of orbits on ordered pairs; 2 means 2-transitive."""
    if not G.is_transitive():
        raise NotTransitiveError(f"{len(G.orbits())} orbits")
    orbs = pair_orbits(G)
    assert sum(len(v) for v in orbs.values()) == G.degree ** 2
    return len(orbs)


# --- the action of S_2n on n-subsets --------------------------------------

@dataclass(frozen=True)
class SubsetAction:
    n: int
    subsets: tuple[tuple[int, ...], ...]
    group: PermGroup
    transpositions: tuple[tuple[tuple[int, int], Permutation], ...]
    injective: bool

    @property
    def degree(self) -> int:
        return len(self.subsets)


def _induced(p: Sequence[int], subsets, index) -> Permutation:
    return Permutation(tuple(index[tuple(sorted(p[i] for i in s))] for s in subsets))


def subset_action(n: int, cap: int = DEFAULT_CAP) -> SubsetAction:
    """Image of S_2n acting on its n-subsets, subsets in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    N = comb(2 * n, n)
    if N > cap or factorial(2 * n) > cap:
        raise CapExceededError(f"S_{2 * n} on {N} points exceeds cap {cap}")
    subsets = tuple(combinations(range(2 * n), n))
    index = {s: i for i, s in enumerate(subsets)}
    trans = []
    for a, b in combinations(range(2 * n), 2):
        t = Permutation.from_cycles([(a, b)], 2 * n)
        trans.append(((a, b), _induced(t.images, subsets, index)))
    adjacent = [img for (a, b), img in trans if b == a + 1]
    image = PermGroup(N, adjacent, cap)
    # kernel check over the whole of S_2n
    full = symmetric_group(2 * n, cap)
    ident = tuple(range(N))
    kernel = sum(1 for row in full.elements
                 if tuple(_induced(row.tolist(), subsets, index).images) == ident)
    injective = kernel == 1 and image.order == full.order
    return SubsetAction(n, subsets, image, tuple(trans), injective)


# --- overgroups in S_6 -----------------------------------------------------

@dataclass(frozen=True)
class Overgroup:
    order: int
    rank: int
    contains_alternating: bool
    generators: tuple[str, ...]

    @property
    def two_transitive(self) -> bool:
        return self.rank == 2


@dataclass(frozen=True)
class OvergroupScan:
    base_order: int
    adjoined: int
    one_step: tuple[Overgroup, ...]
    all_overgroups: tuple[Overgroup, ...]
    certified: bool

    def two_transitive(self) -> tuple[Overgroup, ...]:
        return tuple(o for o in self.all_overgroups if o.two_transitive)

    def orders(self) -> list[int]:
        return [o.order for o in self.all_overgroups]


def _describe(K: PermGroup, H: PermGroup) -> Overgroup:
    if not H.issubset(K):
        raise AssertionError("overgroup does not contain H")
    return Overgroup(K.order, rank_orbitals(K), contains_alternating(K),
                     tuple(str(g) for g in K.generators))


def _sort_key(o: Overgroup):
    return (o.order, o.rank, o.generators)


def overgroup_scan(H: PermGroup, cap: int = DEFAULT_CAP) -> OvergroupScan:
    """Every subgroup of S_N containing the transitive group H.

    ``one_step`` lists the distinct groups <H, g> for all g in S_N; the
    worklist then adjoins one element at a time until no new group appears,
    so ``all_overgroups`` is the full interval above H. ``certified`` says
    that each 2-transitive member contains the alternating group.
    """
    if not H.is_transitive():
        raise NotTransitiveError("H must be transitive")
    S = symmetric_group(H.degree, cap)
    everything = list(S)

    def step(K: PermGroup) -> dict[bytes, PermGroup]:
        found: dict[bytes, PermGroup] = {}
        done: set = set()
        for g in everything:
            if g in K:
                continue
            # <K, g> only depends on the coset K g
            coset = min(tuple((k * g).images) for k in K)
            if coset in done:
                continue
            done.add(coset)
            M = K.adjoin(g)
            found.setdefault(M.key, M)
        return found

    first = step(H)
    one_step = sorted((_describe(M, H) for M in first.values()), key=_sort_key)
    seen = {H.key: H}
    seen.update(first)
    work = list(first.values())
    while work:
        K = work.pop()
        for key, M in step(K).items():
            if key not in seen:
                seen[key] = M
                work.append(M)
    allg = sorted((_describe(M, H) for M in seen.values()), key=_sort_key)
    certified = all(o.contains_alternating for o in allg if o.two_transitive)
    return OvergroupScan(H.order, len(everything), tuple(one_step), tuple(allg), certified)
