import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import monomials, random_square_free_ideal, square_free_ideals
from coverpack.ideals import (
    MonomialIdeal,
    SizeLimitError,
    brute_minimal_transversals,
    divides,
    divides_packed,
    equal,
    from_masks,
    height,
    intersect,
    lcm,
    mask_to_monomial,
    member,
    member_power,
    minimal_transversals,
    minimalize,
    monomial_str,
    mul,
    pack,
    parse_monomial,
    power,
    product,
    support_mask,
    unit_ideal,
    zero_ideal,
    _high_mask,
)


# -- monomial helpers -------------------------------------------------------

def test_monomial_str():
    assert monomial_str((2, 0, 1)) == "x1^2*x3"
    assert monomial_str((0, 0, 0)) == "1"
    assert monomial_str((0, 1, 0)) == "x2"


def test_parse_monomial_round_trip():
    for m in [(2, 0, 1), (0, 0, 0), (1, 1, 1), (0, 3, 0)]:
        assert parse_monomial(monomial_str(m), 3) == m
    with pytest.raises(ValueError):
        parse_monomial("x9", 3)
    with pytest.raises(ValueError):
        parse_monomial("y1", 3)


def test_divides_lcm_mul():
    assert divides((1, 0), (1, 2))
    assert not divides((2, 0), (1, 2))
    assert lcm((1, 2), (3, 0)) == (3, 2)
    assert mul((1, 2), (3, 0)) == (4, 2)


@given(st.integers(1, 6), st.data())
@settings(max_examples=200, deadline=None)
def test_packed_divisibility_matches_plain(n, data):
    a = tuple(data.draw(st.lists(st.integers(0, 900), min_size=n, max_size=n)))
    b = tuple(data.draw(st.lists(st.integers(0, 900), min_size=n, max_size=n)))
    high = _high_mask(n)
    assert divides_packed(pack(a), pack(b), high) == divides(a, b)


def test_support_mask():
    assert support_mask((1, 0, 2)) == 0b101
    assert mask_to_monomial(0b101, 3) == (1, 0, 1)


# -- minimalization ---------------------------------------------------------

def test_minimalize_drops_multiples():
    a = minimalize(2, [(1, 0), (1, 1), (2, 0)])
    assert a.gens == ((1, 0),)


def test_minimalize_canonical_order():
    a = minimalize(3, [(0, 0, 2), (1, 1, 0), (0, 1, 0)])
    # degree ascending, then exponent-tuple ascending; (1,1,0) is redundant
    assert a.gens == ((0, 1, 0), (0, 0, 2))


def test_zero_and_unit():
    z = zero_ideal(3)
    u = unit_ideal(3)
    assert z.is_zero and not z.is_unit
    assert u.is_unit and not u.is_zero
    assert minimalize(3, [(0, 0, 0), (1, 0, 0)]) == u


@given(square_free_ideals())
@settings(max_examples=150, deadline=None)
def test_minimalize_idempotent_and_antichain(a):
    assert minimalize(a.n, a.gens) == a
    for g, h in itertools.permutations(a.gens, 2):
        assert not divides(g, h)


@given(square_free_ideals(), st.randoms())
@settings(max_examples=100, deadline=None)
def test_minimalize_order_independent(a, rnd):
    gens = list(a.gens)
    rnd.shuffle(gens)
    assert minimalize(a.n, gens) == a


def test_ideal_json_round_trip():
    a = minimalize(3, [(1, 0, 2), (0, 1, 0)])
    assert MonomialIdeal.from_json(3, a.to_json()) == a


# -- arithmetic -------------------------------------------------------------

def test_product_small():
    a = minimalize(2, [(1, 0), (0, 1)])
    b = minimalize(2, [(1, 0)])
    assert product(a, b).gens == ((1, 1), (2, 0))


def test_power_zero_and_one():
    a = minimalize(2, [(1, 0), (0, 2)])
    assert power(a, 0) == unit_ideal(2)
    assert power(a, 1) == a


def test_power_principal():
    a = minimalize(3, [(1, 1, 0)])
    assert power(a, 3).gens == ((3, 3, 0),)


@given(square_free_ideals(n_max=5, k_max=4), st.integers(1, 2), st.integers(1, 2))
@settings(max_examples=60, deadline=None)
def test_power_additive(a, s1, s2):
    assert product(power(a, s1), power(a, s2)) == power(a, s1 + s2)


def test_cap_raises():
    a = minimalize(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    with pytest.raises(SizeLimitError):
        power(a, 6, cap=3)


# -- membership -------------------------------------------------------------

def test_member():
    a = minimalize(2, [(1, 1)])
    assert member((1, 1), a)
    assert member((2, 3), a)
    assert not member((1, 0), a)
    assert not member((0, 0), a)


@given(square_free_ideals(n_max=5, k_max=4), st.integers(1, 3), st.data())
@settings(max_examples=100, deadline=None)
def test_member_power_matches_expansion(a, s, data):
    ps = power(a, s)
    m = data.draw(monomials(a.n, max_exp=3))
    assert member_power(m, a, s) == member(m, ps)


def test_member_power_edge_cases():
    a = minimalize(2, [(1, 0)])
    assert member_power((0, 0), a, 0)
    assert not member_power((0, 0), a, 1)
    assert member_power((3, 1), a, 3)
    assert not member_power((2, 5), a, 3)


# -- intersection -----------------------------------------------------------

def test_intersect_membership_oracle():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 4)
        a = random_square_free_ideal(rng, n_min=n, n_max=n, k_max=4)
        b = random_square_free_ideal(rng, n_min=n, n_max=n, k_max=4)
        c = intersect(a, b)
        # compare against pointwise membership on the exponent box {0,1,2}^n
        for m in itertools.product(range(3), repeat=n):
            assert member(m, c) == (member(m, a) and member(m, b))


@given(square_free_ideals(n_max=5, k_max=4), st.data())
@settings(max_examples=60, deadline=None)
def test_intersect_commutative_idempotent(a, data):
    b = data.draw(square_free_ideals(n_min=a.n, n_max=a.n, k_max=4))
    assert intersect(a, b) == intersect(b, a)
    assert intersect(a, a) == a


# -- height and transversals ------------------------------------------------

def _brute_height(a):
    # smallest vertex set meeting every generator support
    masks = a.support_masks()
    for size in range(a.n + 1):
        for sub in itertools.combinations(range(a.n), size):
            sm = sum(1 << i for i in sub)
            if all(sm & m for m in masks):
                return size
    raise AssertionError("no cover found")


def test_height_against_subset_scan():
    rng = random.Random(77)
    for _ in range(150):
        a = random_square_free_ideal(rng)
        assert height(a) == _brute_height(a)


def test_height_rejects_non_proper():
    with pytest.raises(ValueError):
        height(zero_ideal(2))
    with pytest.raises(ValueError):
        height(unit_ideal(2))


def test_transversal_routes_agree():
    rng = random.Random(13)
    for _ in range(200):
        a = random_square_free_ideal(rng)
        fast = sorted(minimal_transversals(a.support_masks(), a.n))
        slow = sorted(brute_minimal_transversals(a.support_masks(), a.n))
        assert fast == slow


def test_transversals_hand_case():
    # supports {1,2} and {2,3}: minimal transversals {2} and {1,3}
    got = sorted(minimal_transversals((0b011, 0b110), 3))
    assert got == [0b010, 0b101]


def test_equal_and_from_masks():
    a = from_masks(3, [0b011, 0b110])
    b = minimalize(3, [(1, 1, 0), (0, 1, 1)])
    assert equal(a, b)
    assert a == b
