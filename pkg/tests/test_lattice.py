from fractions import Fraction

import pytest

from e6mono import lattice as lat
from e6mono.errors import DegenerateError, NonSymmetricError, UnknownNameError


@pytest.mark.parametrize("name, disc, sig, divisors", [
    ("U", -1, (1, 1), []),
    ("Lambda4", -3, (1, 3), [3]),
    ("E6", 3, (6, 0), [3]),
    ("E8", 1, (8, 0), []),
    ("E6_neg", 3, (0, 6), [3]),
    ("E8_neg", 1, (0, 8), []),
    ("K", -3, (13, 15), [3]),
    ("L", -1, (13, 21), []),
])
def test_named_invariants(name, disc, sig, divisors):
    L = lat.named(name)
    assert lat.discriminant(L) == disc
    assert lat.signature(L) == sig
    assert list(lat.discriminant_group(L).elementary_divisors) == divisors
    assert lat.is_even(L)


def test_ranks():
    assert lat.named("K").rank == 28
    assert lat.named("L").rank == 34


def test_unknown_name():
    with pytest.raises(UnknownNameError):
        lat.named("E7")


def test_rejects_bad_grams():
    with pytest.raises(NonSymmetricError):
        lat.make_lattice([[0, 1], [2, 0]])
    with pytest.raises(DegenerateError):
        lat.make_lattice([[1, 1], [1, 1]])


def test_parse_format_roundtrip():
    L = lat.named("E6")
    assert lat.parse_lattice(lat.format_lattice(L)) == L
    with pytest.raises(NonSymmetricError):
        lat.parse_lattice("2\n0 1\n2 0\n")
    with pytest.raises(ValueError):
        lat.parse_lattice("3\n1 0 0\n0 1 0\n")


def test_discriminant_group_classify():
    E6 = lat.named("E6")
    D = lat.discriminant_group(E6)
    g = D.generators[0]
    assert D.classify(g) == (1,)
    assert D.classify([2 * x for x in g]) == (2,)
    assert D.classify([0] * 6) == (0,)
    # generator pairs integrally with E6
    for i in range(6):
        e = [int(i == j) for j in range(6)]
        assert Fraction(E6.pair(g, e)).denominator == 1


def test_rescale_and_sum():
    U = lat.named("U")
    U2 = lat.rescale(U, 2)
    assert lat.discriminant(U2) == -4
    assert lat.signature(lat.rescale(lat.named("E6"), -1)) == (0, 6)
    assert lat.power(U, 3).rank == 6
    assert lat.is_unimodular(lat.direct_sum(U, lat.named("E8")))
    assert not lat.is_definite(U)
    assert lat.is_definite(lat.named("E6_neg"))


def test_odd_lattice():
    assert not lat.is_even(lat.make_lattice([[1]]))
