"""The operators A and B on simple vectors ``f[P_1, ..., P_l]``.

A simple vector pairs a scalar series ``f`` with ``l`` monomials; at a
boundary vector it evaluates to ``f * P_1**b_0 * P_2**(b_1-b_0) * ... * P_l**(k-b_{l-2})``.
Words act right to left: ``apply_word("AB", v) == A(B(v))``.

Both operators end with the shift ``S: g(q, z) -> g(q, qz)``.  We shift first
and expand afterwards, which gives the same series because the expansion
rule commutes with ``S``; after the shift every geometric factor has
non-negative exponents, so the window of the scalar never shrinks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from .configurations import BoundaryVector, all_boundaries
from .series import (
    ONE, Z, Monomial2, PoleError, Series, Window, add, inv_pochhammer_inf,
    mul_geom, mul_monomial, shift_S,
)

Vec = Tuple[Monomial2, ...]


@dataclass(frozen=True)
class SimpleVector:
    f: Series
    P: Vec

    @property
    def l(self) -> int:
        return len(self.P)

    @property
    def window(self) -> Window:
        return self.f.window

    def bracket(self, bv: BoundaryVector) -> Monomial2:
        if bv.l != self.l:
            raise ValueError(f"vector has l={self.l}, boundary has l={bv.l}")
        m = ONE
        for p, e in zip(self.P, bv.exponents):
            m = m * p ** e
        return m

    def __str__(self) -> str:
        return f"({self.f.to_str()}) [{', '.join(str(p) for p in self.P)}]"


def _check_window(w: Window):
    if w.q_min != 0 or w.z_min != 0:
        raise ValueError(f"operator windows must start at q^0 z^0, got {w}")


def v_ini(l: int, w: Window) -> SimpleVector:
    _check_window(w)
    return SimpleVector(Series.one(w), (ONE,) * l)


def v_infinity(l: int, w: Window) -> SimpleVector:
    """``1/(z)_inf [1, ..., 1]``; fixed by A."""
    _check_window(w)
    return SimpleVector(inv_pochhammer_inf(Z, w).restrict(w), (ONE,) * l)


def _factor(f: Series, u: Monomial2) -> Series:
    """``f / (1 - u)``, keeping the window of ``f``."""
    if u.is_one():
        raise PoleError(f"operator factor 1/(1-u) has a pole: u = {u}")
    return mul_geom(f, u).restrict(f.window)


def apply_A(v: SimpleVector) -> SimpleVector:
    P = [p.shift() for p in v.P]
    u = Z * P[-1] / P[0]
    return SimpleVector(_factor(shift_S(v.f), u), (P[0],) + tuple(P[:-1]))


def apply_B(v: SimpleVector) -> SimpleVector:
    P = [p.shift() for p in v.P]
    u = P[0] / (Z * P[-1])
    return SimpleVector(_factor(shift_S(v.f), u), (Z * P[-1],) + tuple(P[:-1]))


_OPS = {"A": apply_A, "B": apply_B}


def check_word(word: str):
    if any(c not in "AB" for c in word):
        raise ValueError(f"words use only the letters A and B, got {word!r}")


def apply_word(word: str, v: SimpleVector) -> SimpleVector:
    check_word(word)
    for c in reversed(word):
        v = _OPS[c](v)
    return v


@lru_cache(maxsize=4096)
def _cached(word: str, l: int, w: Window, start: str) -> SimpleVector:
    if not word:
        return v_ini(l, w) if start == "ini" else v_infinity(l, w)
    # reuse the suffix: the rightmost letters act first
    return _OPS[word[0]](_cached(word[1:], l, w, start))


def word_on_ini(word: str, l: int, w: Window) -> SimpleVector:
    check_word(word)
    _check_window(w)
    return _cached(word, l, w, "ini")


def word_on_infinity(word: str, l: int, w: Window) -> SimpleVector:
    check_word(word)
    _check_window(w)
    return _cached(word, l, w, "inf")


def canonical(word: str) -> str:
    """Representative of the class of ``word`` under ``M ~ MA``."""
    check_word(word)
    return word.rstrip("A")


def eval_at_boundary(v: SimpleVector, bv: BoundaryVector, w: Optional[Window] = None) -> Series:
    w = w or v.window
    return mul_monomial(v.f, v.bracket(bv)).restrict(w)


def check_AB_pair(v: SimpleVector) -> bool:
    """``Av = f[P]`` and ``Bv = f'[P']`` satisfy ``P_1 = P_2``, ``P_j = P'_j`` (j >= 2) and ``f = -(P'_2/P'_1) f'``."""
    a, b = apply_A(v), apply_B(v)
    if a.P[0] != a.P[1] or a.P[1:] != b.P[1:]:
        return False
    rhs = mul_monomial(b.f, b.P[1] / b.P[0], -1)
    return a.f.equal_on(rhs, a.window)


# -- characters ------------------------------------------------------------------

def char_operator_all(k: int, l: int, N: int, w: Window) -> Dict[BoundaryVector, Series]:
    """``(A+B)**N v_ini`` evaluated at every boundary vector.

    Simple vectors sharing a vector part are merged, so the state stays small.
    """
    _check_window(w)
    state: Dict[Vec, Series] = {(ONE,) * l: Series.one(w)}
    for _ in range(N):
        nxt: Dict[Vec, Series] = {}
        for P, f in state.items():
            for op in (apply_A, apply_B):
                r = op(SimpleVector(f, P))
                nxt[r.P] = add(nxt[r.P], r.f).restrict(w) if r.P in nxt else r.f
        state = {P: f for P, f in nxt.items() if not f.is_zero()}
    out = {}
    for bv in all_boundaries(k, l):
        total = Series.zero(w)
        for P, f in state.items():
            total = add(total, eval_at_boundary(SimpleVector(f, P), bv, w)).restrict(w)
        out[bv] = total
    return out


def char_operator(bv: BoundaryVector, N: int, w: Window) -> Series:
    return char_operator_all(bv.k, bv.l, N, w)[bv]


def _lower_bound(v: SimpleVector, k: int, w: Window) -> List[Tuple[int, int]]:
    """Corners below which no word applied to ``v`` can contribute.

    Every evaluation of ``X v`` is a sum of monomials dominating some
    ``(a + k*qmin(P), n + k*zmin(P))`` with ``(a, n)`` a term of ``f``:
    both operators only raise exponents.
    """
    qp = k * min(p.a for p in v.P)
    zp = k * min(p.n for p in v.P)
    corners = set()
    for (a, n), _ in v.f.items():
        c = (a + qp, n + zp)
        if c[0] <= w.q_max and c[1] <= w.z_max:
            corners.add(c)
    return sorted(corners)


def certified_box(corners: Iterable[Tuple[int, int]], w: Window) -> Window:
    """Largest box ``[0,Qc] x [0,Zc]`` inside ``w`` holding no corner."""
    corners = list(corners)
    best = None
    for Zc in range(w.z_max, -1, -1):
        Qc = w.q_max
        for a, n in corners:
            if n <= Zc:
                Qc = min(Qc, a - 1)
        if Qc < 0:
            continue
        key = ((Qc + 1) * (Zc + 1), Zc)
        if best is None or key > best[0]:
            best = (key, Window(0, Qc, 0, Zc))
    if best is None:
        raise ValueError("no certified window: an unexplored word reaches q^0 z^0")
    return best[1]


@dataclass
class MonomialSum:
    """Result of summing ``M v_inf`` over canonical words."""
    chars: Dict[BoundaryVector, Series]
    window: Window
    words: List[str] = field(default_factory=list)
    frontier: int = 0


def char_by_monomials_all(k: int, l: int, w: Window, degree: Optional[int] = None,
                          max_nodes: int = 2_000_000) -> MonomialSum:
    """``chi^(inf)`` for every boundary vector as a sum over canonical words.

    Subtrees whose lower bound leaves the window are pruned, which makes the
    sum exact on ``w``.  With ``degree`` set, words longer than ``degree`` are
    not expanded; the result is then exact on the returned certified window.
    """
    _check_window(w)
    root = v_infinity(l, w)
    kept: List[Tuple[str, SimpleVector]] = []
    corners: List[Tuple[int, int]] = []
    stack = [("", root)]
    nodes = 0
    while stack:
        word, v = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError(f"word search exceeded {max_nodes} nodes")
        kept.append((word, v))
        letters = "B" if not word else "AB"
        for c in letters:
            child = _OPS[c](v)
            bound = _lower_bound(child, k, w)
            if not bound:
                continue
            if degree is not None and len(word) + 1 > degree:
                corners.extend(bound)
                continue
            stack.append((c + word, child))
    win = certified_box(corners, w) if corners else w
    chars = {}
    for bv in all_boundaries(k, l):
        total = Series.zero(win)
        for _, v in kept:
            total = add(total, eval_at_boundary(v, bv, win)).restrict(win)
        chars[bv] = total
    return MonomialSum(chars, win, sorted((x for x, _ in kept), key=lambda s: (len(s), s)),
                       len(corners))


def char_by_monomials(bv: BoundaryVector, w: Window, degree: Optional[int] = None) -> Series:
    return char_by_monomials_all(bv.k, bv.l, w, degree).chars[bv]
