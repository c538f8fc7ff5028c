import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import elementary_divisors, in_row_span, kernel_count
from steinitz.intlat import (
    determinant,
    hermite_normal_form,
    identity,
    is_diagonal_chain,
    kernel_mod,
    lattice_index,
    matmul,
    smith_normal_form,
)


def matrices(max_rows=4, max_cols=4, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def diag_of(D):
    return [D[i][i] for i in range(min(len(D), len(D[0])))]


def test_snf_examples():
    _, D, _ = smith_normal_form(identity(3))
    assert D == identity(3)
    _, D, _ = smith_normal_form([[2, 0], [0, 3]])
    assert D == [[1, 0], [0, 6]]
    _, D, _ = smith_normal_form([[0, 0], [0, 0]])
    assert D == [[0, 0], [0, 0]]


def test_hnf_examples():
    assert hermite_normal_form([[2, 0], [0, 2]]) == [[2, 0], [0, 2]]
    assert hermite_normal_form([[1, 2], [3, 4]]) == [[1, 0], [0, 2]]
    assert hermite_normal_form([[0, 0]]) == [[0, 0]]


def test_hnf_keeps_zero_rows_last():
    H = hermite_normal_form([[0, 0, 0], [2, 4, 6], [1, 2, 3]])
    assert H[-1] == [0, 0, 0] and H[-2] == [0, 0, 0]
    assert H[0] == [1, 2, 3]


@settings(max_examples=120, deadline=None)
@given(matrices())
def test_snf_properties(A):
    U, D, V = smith_normal_form(A)
    assert matmul(matmul(U, A), V) == D
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    assert is_diagonal_chain(D)
    assert all(d >= 0 for d in diag_of(D))


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3))
def test_snf_matches_determinantal_divisors(A):
    _, D, _ = smith_normal_form(A)
    assert diag_of(D) == elementary_divisors(A)


@settings(max_examples=120, deadline=None)
@given(matrices())
def test_hnf_properties(A):
    H = hermite_normal_form(A)
    assert hermite_normal_form(H) == H
    nonzero = [r for r in H if any(r)]
    # same row lattice both ways
    for row in A:
        assert in_row_span(nonzero, row)
    pivots = []
    for r in nonzero:
        p = next(j for j, a in enumerate(r) if a)
        assert r[p] > 0
        pivots.append(p)
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    for i, p in enumerate(pivots):
        for r in nonzero[:i]:
            assert 0 <= r[p] < nonzero[i][p]
    assert len(nonzero) == sum(1 for d in elementary_divisors(A) if d) if len(A) <= 3 and len(A[0]) <= 3 else True


def test_kernel_examples():
    assert kernel_mod([[1]], [2]) == [[2]]
    assert kernel_mod([[1]], [1]) == [[1]]
    K = kernel_mod([[1], [1]], [3])
    assert lattice_index(K) == 3
    assert all((a + b) % 3 == 0 for a, b in K)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda r: st.integers(1, 3).flatmap(
            lambda c: st.tuples(
                st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r),
                st.lists(st.integers(1, 6), min_size=c, max_size=c),
            )
        )
    )
)
def test_kernel_mod_against_enumeration(data):
    A, moduli = data
    if math.lcm(*moduli) ** len(A) > 10**4:
        return
    M, count = kernel_count(A, moduli)
    K = kernel_mod(A, moduli)
    assert len(K) == len(A)
    for row in K:
        for j, m in enumerate(moduli):
            assert sum(row[i] * A[i][j] for i in range(len(A))) % m == 0
    # M Z^rows lies in the kernel, so the index is M^rows / #solutions in the box
    assert lattice_index(K) == M ** len(A) // count
    assert hermite_normal_form(K) == K


def test_lattice_index_and_determinant():
    assert lattice_index([[2, 1], [0, 3]]) == 6
    assert determinant([[1, 2], [3, 4]]) == -2
