import pytest

from e6mono import perm as pm
from e6mono.errors import CapExceededError, NotTransitiveError


def test_permutation_basics():
    p = pm.Permutation.from_cycles([(0, 1, 2)], 4)
    assert str(p) == "(0 1 2)"
    assert (p * p * p).is_identity()
    assert (p * p.inverse()).is_identity()
    assert pm.parse_cycles("(0 1 2)", 4) == p
    assert str(pm.Permutation.identity(3)) == "()"
    with pytest.raises(ValueError):
        pm.Permutation((0, 0, 1))


def test_composition_convention():
    a = pm.Permutation.from_cycles([(0, 1)], 3)
    b = pm.Permutation.from_cycles([(1, 2)], 3)
    assert (a * b)(1) == a(b(1))
    G = pm.PermGroup(3, [a, b])
    assert a * b in G and G.order == 6


def test_orders():
    assert pm.symmetric_group(6).order == 720
    assert pm.alternating_group(6).order == 360
    assert pm.cyclic_group(6).order == 6
    with pytest.raises(CapExceededError):
        pm.symmetric_group(7, cap=1000)


def test_subset_action():
    a = pm.subset_action(2)
    assert a.degree == 6 and a.group.order == 24 and a.injective
    assert a.subsets[0] == (0, 1)
    t = dict(a.transpositions)[(0, 1)]
    idx = {s: i for i, s in enumerate(a.subsets)}
    assert t(idx[(0, 1)]) == idx[(0, 1)] and t(idx[(2, 3)]) == idx[(2, 3)]
    assert t(idx[(0, 2)]) == idx[(1, 2)] and t(idx[(0, 3)]) == idx[(1, 3)]
    one = pm.subset_action(1)
    assert one.degree == 2 and one.group.order == 2
    three = pm.subset_action(3)
    assert three.degree == 20 and three.group.order == 720 and three.injective
    assert pm.rank_orbitals(three.group) == 4


def test_ranks():
    assert pm.rank_orbitals(pm.symmetric_group(6)) == 2
    assert pm.rank_orbitals(pm.subset_action(2).group) == 3
    assert pm.rank_orbitals(pm.cyclic_group(6)) == 6
    split = pm.PermGroup(4, [pm.Permutation.from_cycles([(0, 1)], 4)])
    with pytest.raises(NotTransitiveError):
        pm.rank_orbitals(split)


def test_pair_orbits_partition_all_pairs():
    G = pm.subset_action(2).group
    orbs = pm.pair_orbits(G)
    assert sorted(len(v) for v in orbs.values()) == [6, 6, 24]


def test_contains_alternating():
    assert pm.contains_alternating(pm.symmetric_group(6))
    assert pm.contains_alternating(pm.alternating_group(6))
    assert not pm.contains_alternating(pm.subset_action(2).group)


def test_overgroup_scan_subset_image():
    scan = pm.overgroup_scan(pm.subset_action(2).group)
    assert scan.adjoined == 720
    assert scan.certified
    assert [o.order for o in scan.two_transitive()] == [360, 720]
    assert all(o.contains_alternating for o in scan.two_transitive())
    # every one-step group appears in the full list
    assert {o.order for o in scan.one_step} <= set(scan.orders())


def test_overgroup_scan_cyclic():
    scan = pm.overgroup_scan(pm.cyclic_group(6))
    tt = scan.two_transitive()
    assert 120 in [o.order for o in tt]  # PGL(2,5) acting on the projective line over F_5
    assert not scan.certified


def test_overgroup_scan_full():
    scan = pm.overgroup_scan(pm.symmetric_group(6))
    assert scan.orders() == [720] and scan.certified
