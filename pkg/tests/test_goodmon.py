import itertools

import pytest
from hypothesis import given, strategies as st

from klchar.configurations import all_boundaries, extremal_config
from klchar.goodmon import (
    EMPTY, FULL, blocks_adjacent_ok, cancellation_pairs,
    cancellation_partner, census_families, check_condition_Cs, classify, decompose_blocks,
    good_words, graph_step, image_vertex, is_good, is_good_by_path, marked_path, path_ascii,
    path_of, sigma_of, split_pair, tail_shape_ok, top, unmark, verify_cancellation, vertex_str,
)
from klchar.operators import word_on_infinity
from klchar.series import Window


def all_words(max_degree):
    for d in range(max_degree + 1):
        for t in itertools.product("AB", repeat=d):
            yield "".join(t)


def vertices(l):
    return [v for v in itertools.product((EMPTY, FULL), repeat=l) if any(v)]


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_only_two_self_loops(l):
    loops = {(v, c) for v in vertices(l) for c in "AB" if graph_step(v, c) == v}
    assert loops == {(top(l), "B"), ((FULL,) + (EMPTY,) * (l - 1), "A")}


def test_l3_arrow():
    assert graph_step((FULL, EMPTY, FULL), "A") == (FULL, FULL, EMPTY)


def test_sigma_image_example():
    word = "AABBA"
    assert set(sigma_of(word, 5)) == {1, 3, 4}
    assert vertex_str(path_of(word, 5)[-1]) == "[•∘••∘]"


def test_marked_path_example():
    P = marked_path("ABBA", 5)
    assert vertex_str(P[0]) == "[••••×]"
    assert vertex_str(P[-1]) == "[•∘••∘]"


def test_empty_word_path():
    assert path_of("", 4) == [top(4)]
    assert sigma_of("", 4) == (1, 2, 3, 4)


@given(st.text(alphabet="AB", max_size=10), st.integers(2, 5))
def test_path_projections(word, l):
    mp = marked_path(word, l)
    assert [unmark(v, FULL) for v in mp] == path_of(word, l)
    assert [unmark(v, EMPTY) for v in mp] == path_of("A" + word, l)[1:]
    assert image_vertex(sigma_of(word, l), l) == path_of(word, l)[-1]


@pytest.mark.parametrize("l", [2, 3, 4])
def test_goodness_predicates_agree(l):
    for word in all_words(8):
        assert is_good(word, l) == is_good_by_path(word, l)


def test_l3_small_words():
    assert is_good("AB", 3)
    assert not is_good("AAB", 3)
    assert is_good("BA", 3)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_census(l):
    assert set(good_words(l, 10)) == census_families(l, 10)


def test_l3_census_size():
    assert len(good_words(3, 4)) == 9


@pytest.mark.parametrize("l", [2, 3, 4])
def test_classification_partitions_and_involution(l):
    kinds = {}
    for word in good_words(l, 8):
        cl = classify(word, l)
        kinds.setdefault(cl.kind, []).append(word)
        if cl.kind == "G":
            assert is_good("A" + word, l)
            continue
        p = cancellation_partner(word, l)
        assert is_good(p, l)
        pc = classify(p, l)
        assert {cl.kind, pc.kind} == {"A", "B"}
        assert pc.index == cl.index
        assert cancellation_partner(p, l) == word
    assert set(kinds) <= {"G", "A", "B"}


def test_l2_smallest_pair():
    assert cancellation_pairs(2, 2)[0] == ("B", "BB")
    assert split_pair("B", 2) == ("B", "")


def test_l3_concrete_pair():
    assert ("AB", "ABAB") in cancellation_pairs(3, 4)


@pytest.mark.parametrize("l", [2, 3])
def test_cancellation_small(l):
    w = Window(0, 8, 0, 5)
    for word, _ in cancellation_pairs(l, 6):
        for bv in all_boundaries(2, l):
            assert verify_cancellation(word, bv, w)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_cancellation_wide_window(l):
    # a window large enough that almost every pair term is visible
    w = Window(0, 40, 0, 14)
    for word, _ in cancellation_pairs(l, 8):
        for bv in all_boundaries(2, l):
            assert verify_cancellation(word, bv, w)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_pair_has_equal_extremal_configs(l):
    for word, partner in cancellation_pairs(l, 8):
        N, K = split_pair(word, l)
        for bv in all_boundaries(2, l):
            x = extremal_config("A" + N + "A" + K, bv)
            y = extremal_config("A" + N + "B" + K, bv)
            assert x == y


@pytest.mark.parametrize("l", [2, 3, 4])
def test_block_structure(l):
    w = Window(0, 4, 0, 4)
    for word, _ in cancellation_pairs(l, 8):
        N, K = split_pair(word, l)
        blocks = decompose_blocks("B" + N, l)
        assert "".join(b for _, b in blocks) == "B" + N
        assert all(len(b) == l + s and 0 <= s <= l - 2 for s, b in blocks)
        assert blocks_adjacent_ok(blocks, l)
        assert tail_shape_ok(K, blocks[-1][0], l)
        # after the blocks right of position j, the pair satisfies (C)_s for the next block
        for j in range(1, len(blocks) + 1):
            pre = "".join(b for _, b in blocks[j:])
            v = word_on_infinity(pre + "A" + K, l, w)
            vp = word_on_infinity(pre + "B" + K, l, w)
            assert check_condition_Cs(v, vp, blocks[j - 1][0])


def test_decompose_rejects_non_blocks():
    with pytest.raises(ValueError):
        decompose_blocks("AB", 3)


def test_path_ascii():
    assert path_ascii("B", 2) == "[••] -B-> [••]"


def test_classify_rejects_bad_words():
    with pytest.raises(ValueError):
        classify("AAB", 3)
