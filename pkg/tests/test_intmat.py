from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from e6mono import intmat


def leibniz_det(A):
    n = len(A)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = (-1) ** inv
        for i in range(n):
            term *= A[i][p[i]]
        total += term
    return total


def square(n_max=4, lo=-6, hi=6):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n))


def matrices(r_max=4, c_max=5):
    return st.tuples(st.integers(1, r_max), st.integers(1, c_max)).flatmap(
        lambda rc: st.lists(st.lists(st.integers(-5, 5), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


@given(square())
def test_det_matches_leibniz(A):
    assert intmat.det(A) == leibniz_det(A)


@given(square())
def test_inverse_roundtrip(A):
    if intmat.det(A) == 0:
        with pytest.raises(Exception):
            intmat.inverse(A)
        return
    inv = intmat.inverse(A)
    assert intmat.matmul(A, inv) == intmat.identity(len(A))


@given(matrices())
def test_hnf_transform_and_kernel(A):
    H, U, r = intmat.hnf_columns(A)
    assert intmat.matmul(A, U) == H
    assert abs(intmat.det(U)) == 1
    assert r == intmat.rank(A)
    for v in intmat.kernel_basis(A):
        assert all(x == 0 for x in intmat.matvec(A, v))
    assert len(intmat.kernel_basis(A)) == len(A[0]) - r


@given(matrices())
def test_smith_form(A):
    d, P, Q = intmat.smith_form(A)
    D = intmat.matmul(intmat.matmul(P, A), Q)
    assert abs(intmat.det(P)) == 1 and abs(intmat.det(Q)) == 1
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert len(nonzero) == intmat.rank(A)


@given(square())
def test_elementary_divisors_product(A):
    if intmat.det(A) == 0:
        return
    prod = 1
    for x in intmat.elementary_divisors(A):
        prod *= x
    assert prod == abs(intmat.det(A))


def test_rational_det_and_solve():
    A = [[Fraction(1, 2), 1], [3, 4]]
    assert intmat.rational_det(A) == Fraction(-1)
    assert intmat.solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


def test_column_span_basis():
    B = intmat.column_span_basis([[2, 0], [0, 2], [2, 2]])
    assert len(B) == 2
