import random

import pytest
from hypothesis import given, strategies as st

from klchar.configurations import (
    BoundaryVector, all_boundaries, char_bruteforce, char_infinite, char_recursion,
    config_equivalent, config_monomial, extremal_config, extremal_config_good,
    extremal_config_maps, iota, iota_eval, is_config, lam_b, lam_k, lambda_apply,
)
from klchar.goodmon import good_words
from klchar.series import Window

W = Window(0, 10, 0, 6)


def terms(s):
    return sorted(s.items())


@pytest.mark.parametrize("x,k,l,want", [
    ((1, 0, 1), 1, 2, True),
    ((1, 1), 1, 2, False),
    ((2, 0, 0, 1), 2, 3, True),
])
def test_is_config(x, k, l, want):
    assert is_config(x, k, l) is want


def test_boundary_validation():
    with pytest.raises(ValueError):
        BoundaryVector(3, 1, (1, 0))
    with pytest.raises(ValueError):
        BoundaryVector(2, 1, (2,))
    with pytest.raises(ValueError):
        BoundaryVector(3, 1, (1,))
    assert BoundaryVector(3, 2, (0, 1)).exponents == (0, 1, 1)


def test_all_boundaries_count():
    # multisets of size l-1 from {0..k}
    assert len(all_boundaries(2, 3)) == 6
    assert len(all_boundaries(3, 4)) == 20


@pytest.mark.parametrize("fn", [char_bruteforce, char_recursion])
def test_small_characters(fn):
    bv = BoundaryVector(2, 1, (1,))
    assert terms(fn(bv, 2, W)) == [((0, 0), 1), ((0, 1), 1), ((1, 1), 1)]
    assert terms(fn(bv, 1, W)) == [((0, 0), 1), ((0, 1), 1)]


@pytest.mark.parametrize("bv", all_boundaries(2, 3))
def test_empty_length_gives_one(bv):
    assert terms(char_bruteforce(bv, 0, W)) == [((0, 0), 1)]
    assert terms(char_recursion(bv, 0, W)) == [((0, 0), 1)]


def test_zero_boundary_forces_empty_first_slot():
    assert terms(char_recursion(BoundaryVector(3, 1, (0, 1)), 1, W)) == [((0, 0), 1)]


def test_infinite_l2_slices():
    s = char_infinite(BoundaryVector(2, 1, (1,)), Window(0, 10, 0, 3))
    assert s.z_slice(0) == {0: 1}
    assert s.z_slice(1) == {a: 1 for a in range(11)}
    # pairs of parts differing by at least 2: q^2 + q^3 + 2q^4 + 2q^5 + 3q^6 + ...
    assert [s.z_slice(2).get(a, 0) for a in range(2, 11)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]


@given(st.sampled_from(all_boundaries(2, 3) + all_boundaries(1, 4)), st.integers(0, 6))
def test_recursion_matches_bruteforce(bv, N):
    assert char_recursion(bv, N, W).equal_on(char_bruteforce(bv, N, W), W)


@pytest.mark.parametrize("bv", all_boundaries(2, 3))
def test_stabilization(bv):
    w = Window(0, 8, 0, 5)
    assert char_recursion(bv, 9, w).equal_on(char_recursion(bv, 14, w), w)


def test_lattice_maps():
    l = 3
    assert lambda_apply("a", lam_k(l)) == lam_k(l)
    assert lambda_apply("b", lam_b(0, l)) == (-1, 1, 0)
    assert lambda_apply("a", lam_b(0, 2)) == lam_k(2)
    assert iota(2, 1, l) == lam_b(0, l)
    assert iota(1, 1, l) == lam_k(l)
    assert iota_eval(2, 1, BoundaryVector(2, 1, (1,))) == 1


@pytest.mark.parametrize("word,want", [("AA", (0, 0)), ("AB", (0, 3)), ("BA", (1, 0)), ("BB", (1, 2)),
                                       ("A", (0,)), ("B", (1,))])
def test_extremal_l2_vertices(word, want):
    assert extremal_config(word, BoundaryVector(2, 3, (1,))) == want


def test_config_equivalent():
    assert config_equivalent((1, 0), (1,))
    assert not config_equivalent((1,), (0, 1))
    bv = BoundaryVector(3, 2, (1, 2))
    assert config_equivalent(extremal_config("BAB", bv), extremal_config("BABA", bv))


@pytest.mark.parametrize("l", [2, 3, 4])
def test_extremal_routes_agree(l):
    for bv in all_boundaries(2, l):
        for word in good_words(l, 8):
            x = extremal_config(word, bv)
            assert extremal_config_good(word, bv) == x
            assert extremal_config_maps(word, bv) == x
            assert is_config(x, bv.k, l)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_extremal_configs_are_distinct_vertices(l):
    # generic boundary values separate the extremal points of distinct canonical words
    bv = BoundaryVector(l, l + 1, tuple(range(1, l)))
    seen = {}
    for word in good_words(l, 8):
        key = tuple(extremal_config(word + "A" * 8, bv))
        assert key not in seen, (word, seen.get(key))
        seen[key] = word


def test_config_monomial():
    assert config_monomial((1, 0, 2)) == (4, 3)


def test_random_extremal_is_admissible():
    rng = random.Random(7)
    for _ in range(50):
        l = rng.choice([2, 3, 4])
        word = "".join(rng.choice("AB") for _ in range(rng.randint(0, 9)))
        bv = rng.choice(all_boundaries(2, l))
        x = extremal_config(word, bv)
        assert is_config(x, bv.k, l)
