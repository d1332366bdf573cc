import pytest
from hypothesis import given, strategies as st

from klchar.bosonic import (
    GoodParam, closed_scalar, closed_term_series, closed_vector_part, color_blocks,
    char_bosonic, char_bosonic_full, char_l2_closed, char_l3_closed, expected_quadratic,
    fac_consolidation, l3_family_terms, lower_bounds, param_to_word, scalar_only_series,
    sigma_independence_report, sigmas, step_factor, word_to_param,
)
from klchar.configurations import BoundaryVector, all_boundaries, char_infinite
from klchar.goodmon import good_words
from klchar.operators import eval_at_boundary, word_on_infinity
from klchar.series import ONE, Z, Monomial2, Window, inv_pochhammer_inf, mul_geom, shift_S

W = Window(0, 10, 0, 6)
COLORED = "B₃B₁B₄B₂B₃B₁AB₂B₃AB₁B₂AB₃B₁AB₂AAB₁AAB₂AAB₁"


def nonempty_good(l, d):
    return [w for w in good_words(l, d) if w]


def test_sigmas():
    assert sigmas(2) == [(2, 1)]
    assert sigmas(3) == [(3, 2, 1)]
    assert sorted(sigmas(4)) == [(4, 2, 3, 1), (4, 3, 2, 1)]


def test_param_validation():
    with pytest.raises(ValueError):
        GoodParam((3, 1, 2), (0, 0))
    with pytest.raises(ValueError):
        GoodParam((3, 2, 1), (0,))


@pytest.mark.parametrize("m", range(5))
def test_l2_words(m):
    assert param_to_word(GoodParam((2, 1), (m,))) == "B" * m


@pytest.mark.parametrize("n,m", [(0, 0), (1, 0), (2, 3), (0, 2)])
def test_l3_words(n, m):
    assert param_to_word(GoodParam((3, 2, 1), (n, m))) == "B" * m + "AB" * n


def test_l4_offset_family():
    # B^m (BAB)^n (AAB)^p with m = -1 drops the leading B
    sg = (4, 2, 3, 1)
    assert lower_bounds(sg) == (0, 1, -1)
    for n, p in [(1, 0), (2, 0), (1, 1), (2, 2)]:
        word = param_to_word(GoodParam(sg, (p, n, -1)))
        assert word == ("BAB" * n + "AAB" * p)[1:]


@pytest.mark.parametrize("l", [2, 3, 4])
def test_bijection(l):
    words = good_words(l, 10)
    params = [word_to_param(w, l) for w in words]
    assert len(set(params)) == len(words)
    assert all(param_to_word(p) == w for p, w in zip(params, words))


@st.composite
def params(draw):
    l = draw(st.integers(2, 5))
    sg = draw(st.sampled_from(sigmas(l)))
    n = tuple(lo + draw(st.integers(0, 3)) for lo in lower_bounds(sg))
    return GoodParam(sg, n)


@given(params())
def test_param_round_trip(p):
    word = param_to_word(p)
    if word:
        assert word_to_param(word, p.l) == p


def test_powers_of_B():
    assert word_to_param("BBB", 4).n == (0, 0, 3)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_vector_part_zero_parameter(l):
    p = word_to_param("", l)
    assert p.n == (0,) * (l - 1)
    assert closed_vector_part(p) == (ONE,) * l


@pytest.mark.parametrize("l", [2, 3, 4])
def test_vector_part_matches_operator(l):
    w = Window(0, 1, 0, 1)
    for word in good_words(l, 10):
        assert closed_vector_part(word_to_param(word, l)) == word_on_infinity(word, l, w).P


def test_l3_vector_part_families():
    # B^(3m) (AB)^(2n) v_inf has vector part proportional to [1, q^m, q^(2m+2n)]
    for m in range(4):
        for n in range(4):
            word = "B" * (3 * m) + "AB" * (2 * n)
            P = closed_vector_part(word_to_param(word, 3))
            assert (P[1] / P[0], P[2] / P[0]) == (Monomial2(m, 0), Monomial2(2 * m + 2 * n, 0))


def test_coloring_of_long_word():
    word = "B" * 5 + "BAB" * 4 + "AAB" * 3
    assert color_blocks(word, 4).colored() == COLORED


def test_single_B_coloring():
    bd = color_blocks("B", 2)
    assert bd.r == {1: 1} and bd.color == {1: 1} and bd.lam == {1: 0}


@pytest.mark.parametrize("l", [2, 3, 4])
def test_equal_colors_are_spaced(l):
    for word in nonempty_good(l, 10):
        bd = color_blocks(word, l)
        for i in bd.real:
            for j in bd.real:
                if i < j and bd.color[i] == bd.color[j]:
                    assert i + l <= j


@pytest.mark.parametrize("l", [2, 3, 4])
def test_step_factors(l):
    w = Window(0, 10, 0, 5)
    for word in nonempty_good(l, 7):
        bd = color_blocks(word, l)
        for i in range(1, len(word) + 1):
            fi = word_on_infinity(word[i - 1:], l, w).f
            nxt = word_on_infinity(word[i:], l, w).f
            assert fi.equal_on(mul_geom(shift_S(nxt), step_factor(bd, i)).restrict(w), w)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_fac_consolidation_matches_closed_scalar(l):
    for word in nonempty_good(l, 10):
        fac = fac_consolidation(word, l)
        sc = closed_scalar(word, l)
        assert (fac.alpha % 2, fac.beta, fac.gamma, fac.t) == (sc.alpha % 2, sc.beta, sc.gamma, sc.t)


def test_B_scalar():
    sc = closed_scalar("B", 2)
    assert (sc.alpha, sc.beta, sc.gamma, sc.t) == (1, 0, 1, (0,))
    w = Window(0, 8, 0, 5)
    assert scalar_only_series("B", 2, w).equal_on(word_on_infinity("B", 2, w).f, w)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_closed_scalar_matches_operator(l):
    w = Window(0, 10, 0, 6)
    for word in good_words(l, 8):
        assert scalar_only_series(word, l, w).equal_on(word_on_infinity(word, l, w).f, w)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_closed_scalar_quantities_nonnegative(l):
    for word in nonempty_good(l, 10):
        sc = closed_scalar(word, l)
        assert sc.alpha >= 0 and sc.beta >= 0 and min(sc.t) >= 0


def test_zero_parameter_series():
    bv = BoundaryVector(3, 2, (1, 2))
    s, lead = closed_term_series(word_to_param("", 3), bv, W)
    assert lead == ONE
    assert s.equal_on(inv_pochhammer_inf(Z, W), W)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_term_series_matches_operator(l):
    w = Window(0, 8, 0, 5)
    for bv in all_boundaries(1, l):
        for word in good_words(l, 7):
            s, _ = closed_term_series(word_to_param(word, l), bv, w)
            assert s.equal_on(eval_at_boundary(word_on_infinity(word, l, w), bv, w), w)


@pytest.mark.parametrize("bv,w", [
    (BoundaryVector(2, 1, (1,)), Window(0, 12, 0, 8)),
    (BoundaryVector(3, 2, (1, 2)), Window(0, 10, 0, 6)),
])
def test_bosonic_examples(bv, w):
    s = char_bosonic(bv, w)
    assert s.z_slice(0) == {0: 1}
    assert s.equal_on(char_infinite(bv, w), w)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_l2_closed(k):
    w = Window(0, 14, 0, 8)
    for b0 in range(k + 1):
        assert char_l2_closed(k, b0, w).equal_on(char_infinite(BoundaryVector(2, k, (b0,)), w), w)


@pytest.mark.parametrize("k", [1, 2])
def test_l3_closed(k):
    w = Window(0, 12, 0, 7)
    for bv in all_boundaries(k, 3):
        assert char_l3_closed(k, *bv.b, w).equal_on(char_infinite(bv, w), w)


def test_l3_families_match_operator():
    # each explicit family is the boundary evaluation of B^M (AB)^N v_inf
    w = Window(0, 14, 0, 8)
    for bv in all_boundaries(2, 3):
        for m in range(3):
            for n in range(3):
                for (M, N), (sign, qe, ze, pochs, T) in l3_family_terms(bv.k, *bv.b, m, n).items():
                    word = "B" * M + "AB" * N
                    s, lead = closed_term_series(word_to_param(word, 3), bv, w)
                    assert lead == Monomial2(qe, ze)
                    sc = closed_scalar(word, 3)
                    assert (-1) ** sc.alpha == sign
                    assert sorted(sc.t) == sorted(pochs) and sc.T == T


def test_l2_q0_slice():
    # at q^0 the character is 1 + z + ... + z^b0
    for b0 in range(3):
        s = char_l2_closed(2, b0, Window(0, 0, 0, 6))
        assert s.z_slice(0) == {0: 1} and all(s.coeff(0, n) == (1 if n <= b0 else 0) for n in range(7))


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_sigma_independence(l):
    rep = sigma_independence_report(l)
    assert rep.ok, "\n".join(rep.lines())
    H, slopes = expected_quadratic(l)
    if l == 2:
        assert [[str(x) for x in row] for row in H] == [["1/2"]]
    if l == 3:
        assert [str(x) for x in slopes] == ["1/2", "1/3"]


@pytest.mark.parametrize("l", [2, 3, 4])
def test_bosonic_term_shape(l):
    w = Window(0, 10, 0, 6)
    for bv in all_boundaries(2, l):
        res = char_bosonic_full(bv, w)
        for p, term, lead in res.terms:
            assert term.alpha >= 0 and min(term.t) >= 0
            assert lead.a >= 0 and lead.n >= 0
