import math

import pytest

from steinitz.bounds import (
    abelian_bound,
    c_of,
    compare_with_long,
    d_of,
    gcd_claim,
    kummer_bound_exponent,
    long_exponent,
    merge_factors,
    steinitz_bound,
)
from steinitz.galois import OmegaAction
from steinitz.group import abelian_invariant_lists, from_abelian, from_metacyclic, parse_group


def shape(B):
    return [(f.m, f.field.degree, f.exponent) for f in B.factors]


def test_c2_trivial_action():
    G = from_abelian([2])
    B = steinitz_bound(G, OmegaAction.trivial(2))
    assert B.squared and shape(B) == [(2, 1, 1)]


def test_klein_four_is_unsquared():
    G = from_abelian([2, 2])
    B = steinitz_bound(G, OmegaAction.full(2))
    assert not B.squared
    assert shape(B) == [(2, 1, 1)] * 3
    assert shape(merge_factors(B)) == [(2, 1, 1)]


def test_c6_squared_exponents():
    G = from_abelian([6])
    B = steinitz_bound(G, OmegaAction.full(6))
    assert B.squared
    assert [f.exponent for f in B.factors] == [3, 4, 5]
    assert [f.m for f in B.factors] == [2, 3, 6]


def test_c3_and_trivial_group():
    assert shape(steinitz_bound(from_abelian([3]), OmegaAction.full(3))) == [(3, 2, 1)]
    assert shape(steinitz_bound(from_abelian([3]), OmegaAction.trivial(3))) == [(3, 1, 1), (3, 1, 1)]
    assert steinitz_bound(from_abelian([]), OmegaAction.full(1)).factors == ()


def test_f21_bound():
    G = from_metacyclic(7, 3, 2)
    B = steinitz_bound(G, OmegaAction.full(21))
    assert not B.squared
    assert shape(B) == [(3, 2, 7), (7, 2, 9)]
    assert B.to_json()["factors"][1]["field"] == {"m": 7, "fixer_gens": [2], "degree": 2}


def test_s3_bound():
    G = parse_group("perm:3:(1 2),(1 2 3)")
    B = steinitz_bound(G, OmegaAction.full(6))
    # the transposition class has odd index 3, so rho is outside A_G
    assert B.squared and shape(B) == [(2, 1, 3), (3, 1, 4)]


@pytest.mark.parametrize("invs", [[2], [3], [6], [2, 2], [2, 4], [3, 3], [9], [2, 6]])
def test_merged_bound_matches_abelian_form(invs):
    G = from_abelian(invs)
    A = OmegaAction.full(G.exponent)
    key = lambda B: sorted({(f.m, f.field, f.exponent) for f in B.factors}, key=repr)
    assert key(merge_factors(steinitz_bound(G, A))) == key(abelian_bound(G, A))


def test_abelian_bound_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_bound(from_metacyclic(7, 3, 2), OmegaAction.full(21))
    with pytest.raises(ValueError):
        kummer_bound_exponent(from_metacyclic(7, 3, 2))
    with pytest.raises(ValueError):
        long_exponent(from_metacyclic(5, 2, 4))


def test_c_and_d_values():
    assert [c_of(e) for e in (1, 2, 3, 5, 7, 15, 21, 35)] == [0, 1, 2, 4, 6, 2, 2, 2]
    assert [d_of(e) for e in (2, 3, 9, 15, 21, 35, 49)] == [1, 1, 1, 1, 1, 1, 3]
    for e in (0, -3):
        with pytest.raises(ValueError):
            c_of(e)
        with pytest.raises(ValueError):
            d_of(e)


def test_gcd_claim_small():
    assert all(gcd_claim(e) for e in range(2, 500))
    with pytest.raises(ValueError):
        gcd_claim(1)


@pytest.mark.parametrize(
    "invs, bound, long, tight",
    [([2, 2], 1, 1, True), ([2, 4], 1, 2, False), ([9], 1, 1, True), ([4, 4], 2, 2, True), ([7], 3, 3, True)],
)
def test_long_examples(invs, bound, long, tight):
    out = compare_with_long(from_abelian(invs))
    assert (out["bound_exponent"], out["long_exponent"], out["tight"]) == (bound, long, tight)
    assert out["contains"]


def test_flattened_exponent_identity():
    # the per-divisor exponents have gcd equal to the single flattened exponent
    for n in range(2, 49):
        for invs in abelian_invariant_lists(n):
            G = from_abelian(invs)
            B = abelian_bound(G, OmegaAction.full(G.exponent))
            g = 0
            for f in B.factors:
                g = math.gcd(g, f.exponent)
            k, _ = kummer_bound_exponent(G)
            assert g == k, invs
