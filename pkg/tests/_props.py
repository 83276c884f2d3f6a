"""Property checks shared by the hypothesis tests and the acceptance script.

Each ``check_*`` raises AssertionError on a counterexample. The ``random_*``
helpers draw inputs from a ``random.Random`` for the seeded acceptance run.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from e6mono import exterior as ext, intmat, isometry, lattice as lat, schur, weyl
from e6mono.errors import DegenerateError
from e6mono.perm import PermGroup, Permutation

DEFINITE_BASES = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "Z2+": [[1, 0], [0, 3]],
    "B3": [[2, 1, 0], [1, 4, 1], [0, 1, 6]],
}


# --- lattices -------------------------------------------------------------

def random_gram(rng: random.Random, max_rank: int = 4, bound: int = 4) -> list[list[int]]:
    while True:
        n = rng.randint(1, max_rank)
        G = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                G[i][j] = G[j][i] = rng.randint(-bound, bound)
        if intmat.det(G) != 0:
            return G


def check_lattice_laws(GA, GB, n: int) -> None:
    A, B = lat.make_lattice(GA), lat.make_lattice(GB)
    S = lat.direct_sum(A, B)
    assert lat.discriminant(S) == lat.discriminant(A) * lat.discriminant(B)
    pa, qa = lat.signature(A)
    pb, qb = lat.signature(B)
    assert lat.signature(S) == (pa + pb, qa + qb)
    assert pa + qa == A.rank
    # sign of the discriminant is (-1)^q
    assert (lat.discriminant(A) > 0) == (qa % 2 == 0)
    assert lat.is_even(S) == (lat.is_even(A) and lat.is_even(B))
    R = lat.rescale(A, n)
    assert lat.discriminant(R) == n ** A.rank * lat.discriminant(A)
    assert lat.signature(R) == ((pa, qa) if n > 0 else (qa, pa))
    assert lat.discriminant_group(A).order == abs(lat.discriminant(A))


# --- isometries -----------------------------------------------------------

def random_unimodular(rng: random.Random, n: int, steps: int = 6) -> list[list[int]]:
    T = intmat.identity(n)
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-1, 1])
        for row in T:
            row[j] += c * row[i]
    if rng.random() < 0.5:
        k = rng.randrange(n)
        for row in T:
            row[k] = -row[k]
    perm = list(range(n))
    rng.shuffle(perm)
    return [[row[p] for p in perm] for row in T]


def check_isometry_witness(base: str, T) -> None:
    A = lat.make_lattice(DEFINITE_BASES[base])
    B = lat.make_lattice(intmat.congruence(A.gram, T))
    W = isometry.is_isometric(B, A)
    assert W is not None
    assert intmat.congruence(A.gram, W) == B.rows()
    assert abs(intmat.det(W)) == 1


# --- exterior algebra -----------------------------------------------------

def random_homogeneous(rng: random.Random, g: int, degree: int) -> ext.Multivector:
    monos = [m for m in range(1 << 2 * g) if bin(m).count("1") == degree]
    terms = {m: Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for m in rng.sample(monos, min(3, len(monos)))}
    return ext.Multivector.from_dict(g, terms)


def check_graded_commutativity(a: ext.Multivector, b: ext.Multivector, c: ext.Multivector) -> None:
    (p,), (q,) = a.degrees() or {0}, b.degrees() or {0}
    assert ext.wedge(a, b) == ext.wedge(b, a).scale((-1) ** (p * q))
    assert ext.wedge(ext.wedge(a, b), c) == ext.wedge(a, ext.wedge(b, c))
    assert ext.wedge(a, b + c) == ext.wedge(a, b) + ext.wedge(a, c)


# --- Littlewood-Richardson ------------------------------------------------

def random_partition(rng: random.Random, max_size: int = 5, max_rows: int = 6) -> tuple:
    n = rng.randint(0, max_size)
    options = schur.partitions_of(n, max_rows)
    return rng.choice(options)


def check_lr(p, q, N: int = 6) -> None:
    pq = schur.lr_product(p, q, N)
    assert pq == schur.lr_product(q, p, N)
    lhs = sum(c * schur.dim_irrep(nu, N) for nu, c in pq.coeffs)
    assert lhs == schur.dim_irrep(p, N) * schur.dim_irrep(q, N)


# --- orbit-stabilizer -----------------------------------------------------

_W = {}


def weyl_e6():
    if "W" not in _W:
        _W["W"] = weyl.weyl_group("E6")
    return _W["W"]


def check_orbit_stabilizer_vector(v) -> None:
    W = weyl_e6()
    v = np.asarray(v, dtype=np.int64)
    imgs = np.ascontiguousarray(W.elements @ v)
    assert np.abs(imgs).max() < 512
    keys = (imgs + 512) @ (1024 ** np.arange(6, dtype=np.int64))
    orbit = np.unique(keys)
    stab = int(np.all(imgs == v, axis=1).sum())
    assert len(orbit) * stab == W.order


def check_orbit_stabilizer_perm(gens, point: int) -> None:
    G = PermGroup(6, [Permutation(tuple(g)) for g in gens])
    imgs = G.elements[:, point]
    orbit = set(imgs.tolist())
    stab = int((imgs == point).sum())
    assert len(orbit) * stab == G.order


def random_perm(rng: random.Random, n: int = 6) -> tuple:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def seeded_cases(seed: int, count: int = 1000) -> dict[str, int]:
    """Run every property ``count`` times from one seed; returns the failure count per property."""
    rng = random.Random(seed)
    fails = {"lattice_laws": 0, "isometry_witness": 0, "graded_commutativity": 0,
             "lr_symmetry_dimension": 0, "orbit_stabilizer": 0}

    def run(name, fn, *args):
        try:
            fn(*args)
        except (AssertionError, DegenerateError):
            fails[name] += 1

    for _ in range(count):
        run("lattice_laws", check_lattice_laws, random_gram(rng), random_gram(rng),
            rng.choice([-3, -2, -1, 1, 2, 3]))
        base = rng.choice(sorted(DEFINITE_BASES))
        run("isometry_witness", check_isometry_witness, base,
            random_unimodular(rng, len(DEFINITE_BASES[base])))
        g = rng.randint(1, 3)
        run("graded_commutativity", check_graded_commutativity,
            *(random_homogeneous(rng, g, rng.randint(0, 2 * g)) for _ in range(3)))
        run("lr_symmetry_dimension", check_lr, random_partition(rng), random_partition(rng))
        if rng.random() < 0.5:
            run("orbit_stabilizer", check_orbit_stabilizer_vector, [rng.randint(-3, 3) for _ in range(6)])
        else:
            run("orbit_stabilizer", check_orbit_stabilizer_perm,
                [random_perm(rng) for _ in range(rng.randint(1, 3))], rng.randrange(6))
    return fails
