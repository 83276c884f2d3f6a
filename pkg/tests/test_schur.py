import pytest
from hypothesis import given, settings, strategies as st

from e6mono import schur as s
from e6mono.errors import CapViolationError, OddCoefficientParityError, TooManyRowsError


def test_conjugate():
    assert s.conjugate((4, 2)) == (2, 2, 1, 1)
    assert s.conjugate((6,)) == (1,) * 6
    assert s.conjugate(()) == ()


def test_schur_expand():
    assert s.schur_expand((1,), 2) == {(1, 0): 1, (0, 1): 1}
    assert s.schur_expand((1, 1), 2) == {(1, 1): 1}
    e = s.schur_expand((2, 1), 3)
    assert len(e) == 7 and sum(e.values()) == 8  # x1x2x3 appears twice
    with pytest.raises(TooManyRowsError):
        s.schur_expand((1, 1, 1), 2)


def test_lr_examples():
    assert s.lr_product((1,), (1,)).partitions() == [(2,), (1, 1)]
    assert s.lr_product((1, 1, 1), (1, 1, 1), 6).partitions() == s.fundamental_product(3, 3)
    assert s.lr_product((1, 1), (1, 1, 1, 1), 6).partitions() == s.fundamental_product(4, 2)
    assert s.lr_product((2, 1), (1,)).partitions() == [(3, 1), (2, 2), (2, 1, 1)]
    # a coefficient larger than one
    assert s.lr_product((2, 1), (2, 1)).as_dict()[(3, 2, 1)] == 2


def test_fundamental_product_shape():
    assert s.fundamental_product(3, 3) == [(2, 2, 2), (2, 2, 1, 1), (2, 1, 1, 1, 1), (1,) * 6]


def test_dim_irrep():
    assert s.dim_irrep((1, 1, 1), 6) == 20
    assert s.dim_irrep((2, 2, 1, 1), 6) == 189
    assert s.dim_irrep((1,) * 6, 6) == 1
    with pytest.raises(TooManyRowsError):
        s.dim_irrep((1,) * 7, 6)


def test_dim_matches_tableau_count():
    for p in s.partitions_of(4, 3):
        assert s.dim_irrep(p, 3) == sum(s.schur_expand(p, 3).values())


def test_squares():
    e1 = s.SchurVector.single((1,), 6)
    assert s.wedge_or_sym_square(e1, "wedge").partitions() == [(1, 1)]
    assert s.wedge_or_sym_square(e1, "sym").partitions() == [(2,)]
    e3 = s.SchurVector.single((1, 1, 1), 6)
    w = s.wedge_or_sym_square(e3, "wedge")
    assert w.partitions() == [(2, 2, 1, 1), (1,) * 6]
    assert [s.dim_irrep(p, 6) for p in w.partitions()] == [189, 1]
    assert w.dimension() == 190
    sym = s.wedge_or_sym_square(e3, "sym")
    assert w + sym == s.schur_multiply(e3, e3)
    with pytest.raises(ValueError):
        s.wedge_or_sym_square(e3, "tensor")


def test_odd_parity_detected():
    with pytest.raises(OddCoefficientParityError):
        s.halve({(1, 0): 1, (0, 1): 2})
    assert s.halve({(2, 0): 4, (1, 1): 0}) == {(2, 0): 2}
    # a multiple of a character still squares to even coefficients
    f = s.SchurVector(((((1,)), 3),), 2)
    w = s.wedge_or_sym_square(f, "wedge")
    assert w.dimension() == 6 * 5 // 2


def test_convolution_labels():
    assert s.convolution_labels(3, 3, 4).labels == ((3, 3), (4, 2), (5, 1), (6,))
    assert s.convolution_labels(4, 2, 4).labels == ((4, 2), (5, 1), (6,))
    assert s.convolution_labels(1, 0, 4).labels == ((1,),)
    r = s.convolution_labels(5, 3, 4)
    assert r.dropped == ((7, 1), (8,))
    assert s.convolution_labels(3, 3, 4).sl_labels[-1] == ()
    with pytest.raises(CapViolationError):
        s.convolution_labels(7, 0, 4)


def test_oracle_all_pairs():
    ps = [p for k in range(7) for p in s.partitions_of(k, 6)]
    assert len(ps) == 30
    for p in ps:
        for q in ps:
            assert s.lr_product(p, q, 6) == s.brute_force_product(p, q, 6), (p, q)


def test_oracle_decomposes_square_of_e3():
    poly = s.poly_mul(s.schur_expand((1, 1, 1), 6), s.schur_expand((1, 1, 1), 6))
    assert s.schur_decompose(poly, 6) == s.lr_product((1, 1, 1), (1, 1, 1), 6)


partitions = st.integers(0, 5).flatmap(lambda n: st.sampled_from(s.partitions_of(n, 6)))


@settings(max_examples=300)
@given(partitions, partitions)
def test_lr_against_oracle_small_rows(p, q):
    assert s.lr_product(p, q, 3) == s.brute_force_product(p, q, 3)
