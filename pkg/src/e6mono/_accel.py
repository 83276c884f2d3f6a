"""Hot enumeration kernels: numba-compiled with a pure-numpy fallback.

Set ``E6MONO_DISABLE_NUMBA=1`` in the environment (before import) to force
the numpy path. Both paths return identical arrays: every closure result is
sorted lexicographically, so element order does not depend on the backend.
All arithmetic is int64 on small integer entries; an entry bound guards
against silent overflow.
"""

from __future__ import annotations

import os

import numpy as np

ENTRY_BOUND = 1 << 20

_disabled = os.environ.get("E6MONO_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _disabled:
        raise ImportError
    import numba

    njit = numba.njit(cache=True, nogil=True)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag
    numba = None
    HAVE_NUMBA = False

    def njit(fn):
        return fn


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def _sort_rows(flat: np.ndarray) -> np.ndarray:
    order = np.lexsort(flat.T[::-1])
    return flat[order]


# --- numba kernels --------------------------------------------------------

if HAVE_NUMBA:

    @njit
    def _row_hash(row):
        h = np.uint64(1469598103934665603)
        for x in row:
            h ^= np.uint64(x & 0xFFFFFFFF)
            h *= np.uint64(1099511628211)
            h ^= h >> np.uint64(29)
        return h

    @njit
    def _probe(store, table, mask, row):
        """Slot holding ``row``, or the empty slot where it belongs."""
        slot = np.int64(_row_hash(row) & np.uint64(mask))
        n = row.shape[0]
        while True:
            idx = table[slot]
            if idx < 0:
                return slot
            same = True
            for k in range(n):
                if store[idx, k] != row[k]:
                    same = False
                    break
            if same:
                return slot
            slot = (slot + 1) & mask

    @njit
    def _rebuild(store, count, size):
        table = -np.ones(size, dtype=np.int64)
        mask = size - 1
        for i in range(count):
            table[_probe(store, table, mask, store[i])] = i
        return table

    @njit
    def _closure_nb(gens, start, d, cap, bound, is_perm):
        """Breadth-first closure in a growable store with an open-addressing hash table.

        Matrices are flattened row-major (width d*d); permutations are image rows.
        """
        width = start.shape[0]
        store = np.zeros((64, width), dtype=np.int64)
        table = -np.ones(256, dtype=np.int64)
        store[0, :] = start
        table[_probe(store, table, 255, start)] = 0
        count = 1
        prod = np.zeros(width, dtype=np.int64)
        head = 0
        while head < count:
            for g in range(gens.shape[0]):
                if is_perm:
                    # (p * g)(x) = p(g(x))
                    for x in range(width):
                        prod[x] = store[head, gens[g, x]]
                else:
                    for i in range(d):
                        for j in range(d):
                            acc = 0
                            for k in range(d):
                                acc += store[head, i * d + k] * gens[g, k * d + j]
                            if acc > bound or acc < -bound:
                                return store[:count], -2
                            prod[i * d + j] = acc
                slot = _probe(store, table, table.shape[0] - 1, prod)
                if table[slot] >= 0:
                    continue
                if count >= cap:
                    return store[:count], -1
                if count == store.shape[0]:
                    bigger = np.zeros((2 * count, width), dtype=np.int64)
                    bigger[:count] = store[:count]
                    store = bigger
                store[count, :] = prod
                table[slot] = count
                count += 1
                if 2 * count > table.shape[0]:
                    table = _rebuild(store, count, 4 * table.shape[0])
            head += 1
        return store[:count], count

    @njit
    def _find(parent, x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        return root

    @njit
    def _pair_orbits_nb(gens):
        n = gens.shape[1]
        parent = np.arange(n * n).astype(np.int64)
        for g in range(gens.shape[0]):
            for a in range(n):
                for b in range(n):
                    ra = _find(parent, a * n + b)
                    rb = _find(parent, gens[g, a] * n + gens[g, b])
                    if ra != rb:
                        if ra < rb:
                            parent[rb] = ra
                        else:
                            parent[ra] = rb
        labels = np.empty(n * n, dtype=np.int64)
        for x in range(n * n):
            labels[x] = _find(parent, x)
        return labels


# --- numpy fallbacks ------------------------------------------------------

def _row_keys(flat: np.ndarray) -> list[bytes]:
    flat = np.ascontiguousarray(flat)
    return flat.view(np.dtype((np.void, flat.dtype.itemsize * flat.shape[1]))).ravel().tolist()


def _layered_closure(start: np.ndarray, expand, cap: int):
    """Breadth-first closure; ``expand(frontier)`` returns all products of a layer."""
    known = [start]
    seen = set(_row_keys(start))
    frontier = start
    total = len(start)
    while len(frontier):
        prods = expand(frontier)
        if prods is None:
            return np.concatenate(known), -2
        keep = []
        for i, key in enumerate(_row_keys(prods)):
            if key not in seen:
                seen.add(key)
                keep.append(i)
        frontier = prods[keep]
        known.append(frontier)
        total += len(frontier)
        if total > cap:
            return np.concatenate(known), -1
    return np.concatenate(known), total


def _matrix_closure_np(gens, identity, cap, bound):
    d = identity.shape[0]

    def expand(frontier):
        prods = np.einsum("nik,gkj->ngij", frontier.reshape(-1, d, d), gens).reshape(-1, d * d)
        if prods.size and np.abs(prods).max() > bound:
            return None
        return prods

    return _layered_closure(identity.reshape(1, d * d).copy(), expand, cap)


def _perm_closure_np(gens, cap):
    n = gens.shape[1]

    def expand(frontier):
        # p * g = p[g]
        return frontier[:, gens].transpose(1, 0, 2).reshape(-1, n)

    return _layered_closure(np.arange(n, dtype=np.int64).reshape(1, n), expand, cap)


def _pair_orbits_np(gens):
    n = gens.shape[1]
    a, b = np.divmod(np.arange(n * n), n)
    images = [g[a] * n + g[b] for g in gens]
    labels = np.arange(n * n)
    while True:
        old = labels
        for img in images:
            labels = np.minimum(labels, labels[img])
            np.minimum.at(labels, img, labels.copy())
            labels = labels[labels]
        if np.array_equal(labels, old):
            return labels


# --- public entry points --------------------------------------------------

def matrix_closure(gens: np.ndarray, cap: int) -> tuple[np.ndarray, int]:
    """Close square integer matrices under right multiplication.

    Returns ``(elements, status)``: ``elements`` has shape (N, d, d) sorted
    lexicographically; ``status`` is N on success, -1 if the cap was
    exceeded, -2 if an entry left the int64-safe range.
    """
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    d = gens.shape[1]
    ident = np.eye(d, dtype=np.int64)
    if HAVE_NUMBA:
        flat, status = _closure_nb(gens.reshape(len(gens), d * d), ident.reshape(d * d), d,
                                   int(cap), ENTRY_BOUND, False)
    else:
        flat, status = _matrix_closure_np(gens, ident, int(cap), ENTRY_BOUND)
    if status < 0:
        return flat.reshape(-1, d, d), int(status)
    return _sort_rows(np.asarray(flat)).reshape(-1, d, d), int(status)


def perm_closure(gens: np.ndarray, cap: int) -> tuple[np.ndarray, int]:
    """Close permutations (rows of images) under composition; sorted rows."""
    gens = np.ascontiguousarray(gens, dtype=np.int64)
    if HAVE_NUMBA:
        flat, status = _closure_nb(gens, np.arange(gens.shape[1], dtype=np.int64), 0,
                                   int(cap), ENTRY_BOUND, True)
    else:
        flat, status = _perm_closure_np(gens, int(cap))
    if status < 0:
        return np.asarray(flat), int(status)
    return _sort_rows(np.asarray(flat)), int(status)


def pair_orbit_labels(gens: np.ndarray, degree: int) -> np.ndarray:
    """Orbit label (minimal member) of each ordered pair ``a*n + b``."""
    gens = np.ascontiguousarray(gens, dtype=np.int64).reshape(-1, degree)
    if HAVE_NUMBA:
        labels = _pair_orbits_nb(gens)
    else:
        labels = _pair_orbits_np(gens)
    return np.asarray(labels)
