"""Closed forms for good monomials and the bosonic character sums.

Good words are parameterized by ``(sigma, n)``; both the vector part and
the scalar part of ``M v_inf`` then have closed expressions, which summed
over all parameters give an alternating (bosonic) formula for the
infinite character.  The explicit l=2 and l=3 sums are kept as independent
formulas for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import lcm
from typing import Dict, Iterator, List, Sequence, Tuple

from .configurations import BoundaryVector
from .goodmon import is_good
from .series import (
    Monomial2, Series, Window, add, inv_pochhammer_inf, mul_geom, mul_monomial,
)

# -- parameterization ------------------------------------------------------------


def sigmas(l: int) -> List[Tuple[int, ...]]:
    """Permutations with ``sigma(1) = l`` and ``sigma(l) = 1``, as 1-based value tuples."""
    if l == 2:
        return [(2, 1)]
    return [(l,) + mid + (1,) for mid in permutations(range(2, l))]


def lower_bounds(sigma: Sequence[int]) -> Tuple[int, ...]:
    l = len(sigma)
    lo = []
    for i in range(1, l - 1):
        lo.append(1 if sigma[i - 1] < sigma[i] else 0)
    lo.append(2 - sigma[l - 2])
    return tuple(lo)


@dataclass(frozen=True)
class GoodParam:
    sigma: Tuple[int, ...]
    n: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "n", tuple(self.n))
        l = len(self.sigma)
        if sorted(self.sigma) != list(range(1, l + 1)) or self.sigma[0] != l or self.sigma[-1] != 1:
            raise ValueError(f"sigma must permute 1..l with sigma(1)=l, sigma(l)=1: {self.sigma}")
        if len(self.n) != l - 1:
            raise ValueError(f"n must have l-1 = {l - 1} entries")
        bad = [i + 1 for i, (x, lo) in enumerate(zip(self.n, lower_bounds(self.sigma))) if x < lo]
        if bad:
            raise ValueError(f"n = {self.n} violates the lower bounds at {bad} for sigma = {self.sigma}")

    @property
    def l(self) -> int:
        return len(self.sigma)


def block_word(sigma: Sequence[int], i: int) -> str:
    """``E_i = C_2 ... C_l`` with B exactly at the positions ``sigma(1..i)``."""
    pos = set(sigma[:i])
    return "".join("B" if j in pos else "A" for j in range(2, len(sigma) + 1))


def param_to_word(p: GoodParam) -> str:
    l = p.l
    body = "".join(block_word(p.sigma, a) * p.n[a - 1] for a in range(l - 2, 0, -1))
    lead = p.n[-1]
    if lead >= 0:
        return "B" * lead + body
    if body[:-lead] != "B" * (-lead):
        raise AssertionError(f"cannot absorb B^{lead} into {body!r}")
    return body[-lead:]


def word_to_param(word: str, l: int) -> GoodParam:
    """Inverse of ``param_to_word`` on good words that are empty or end in B."""
    if not is_good(word, l):
        raise ValueError(f"{word!r} is not good for l={l}")
    if word and word[-1] != "B":
        raise ValueError("use the canonical representative (ending in B)")
    size = l - 1
    Mp = "B" * size + word
    chunks = []
    end = len(Mp)
    while end >= size and "A" in Mp[end - size:end]:
        chunks.append(Mp[end - size:end])
        end -= size
    m = end
    if "A" in Mp[:m]:
        raise AssertionError(f"prefix of {Mp!r} is not a power of B")
    # chunks are read right to left; new B's fix sigma(1), ..., sigma(l-1)
    order: List[int] = []
    prev = set()
    for ch in chunks + ["B" * size]:
        cur = {j + 2 for j, c in enumerate(ch) if c == "B"}
        if not prev <= cur:
            raise AssertionError(f"{word!r}: B positions do not grow")
        order.extend(sorted(cur - prev, reverse=True))
        prev = cur
    sigma = tuple(order) + (1,)
    counts = [0] * (l - 2)
    for ch in chunks:
        counts[ch.count("B") - 1] += 1
    p = GoodParam(sigma, tuple(counts) + (m - l + 1,))
    if param_to_word(p) != word:
        raise AssertionError(f"round trip failed for {word!r}: {p}")
    return p


def params_by_shell(sigma: Sequence[int]) -> Iterator[Tuple[int, List[Tuple[int, ...]]]]:
    """Points of the n-lattice grouped by ``sum(n_i - lo_i)``."""
    lo = lower_bounds(sigma)
    d = len(lo)
    s = 0
    while True:
        pts = []
        for comp in _compositions(s, d):
            pts.append(tuple(a + b for a, b in zip(lo, comp)))
        yield s, pts
        s += 1


def _compositions(s: int, d: int) -> Iterator[Tuple[int, ...]]:
    if d == 1:
        yield (s,)
        return
    for first in range(s + 1):
        for rest in _compositions(s - first, d - 1):
            yield (first,) + rest


# -- closed vector part ----------------------------------------------------------


def _I(elems: Sequence[int], x: int) -> int:
    """The periodic enumeration ``I(0) = 1``, ``I(1..r)`` = sorted elements."""
    r = len(elems)
    x %= r + 1
    return 1 if x == 0 else elems[x - 1]


def _I_star(elems: Sequence[int], j: int) -> int:
    return max([0] + [i for i, e in enumerate(elems, start=1) if e <= j])


def omega_r(elems: Sequence[int], n: int, i: int, l: int) -> int:
    r = len(elems)
    mp = (i + n) // (r + 1)
    tot = sum(_I(elems, i + s) - 2 for s in range(1, n + 1))
    tot += n * (n - 1) * (l - 1) // 2 + mp
    tot -= (l - 1) * ((r - i) * mp + mp * (mp - 1) * (r + 1) // 2)
    return tot


def rho_r(elems: Sequence[int], n: int, i: int) -> int:
    return n - (i + n) // (len(elems) + 1)


def closed_vector_part(p: GoodParam) -> Tuple[Monomial2, ...]:
    """Vector part of ``M [1, ..., 1]`` from the nested index recursion."""
    l, n = p.l, p.n
    sets = {a: sorted(p.sigma[:a]) for a in range(1, l - 1)}
    out = []
    for i in range(1, l + 1):
        m, j = divmod(i - n[-1] - 1, l)
        j += 1
        idx: Dict[int, int] = {}
        for a in range(l - 2, 0, -1):
            if a == l - 2:
                idx[a] = _I_star(sets[a], j)
            else:
                idx[a] = _I_star(sets[a], _I(sets[a + 1], idx[a + 1] + n[a]))
        w = m * (m + 1) * l // 2 + (1 - i) * m
        rho = -m
        rhos = {a: rho_r(sets[a], n[a - 1], idx[a]) for a in idx}
        for a in idx:
            w += omega_r(sets[a], n[a - 1], idx[a], l) + n[-1] * rhos[a]
            rho += rhos[a]
        for a in idx:
            for b in idx:
                if a < b:
                    w += (l - 1) * n[b - 1] * rhos[a]
        out.append(Monomial2(w, rho))
    return tuple(out)


# -- blocks, colors, closed scalar part -------------------------------------------


@dataclass
class BlockData:
    word: str
    l: int
    r: Dict[int, int]  # 1-based B position -> block length
    color: Dict[int, int]
    lam: Dict[int, int]

    @property
    def n(self) -> int:
        return len(self.word)

    def colored(self) -> str:
        sub = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
        return "".join(f"B{self.color[i + 1]}".translate(sub) if c == "B" else "A"
                       for i, c in enumerate(self.word))

    @property
    def real(self) -> List[int]:
        """Positions of actual B's (the virtual block at 0 excluded)."""
        return sorted(j for j in self.r if j > 0)

    def t(self, c: int) -> int:
        """Number of letters in blocks of color c."""
        return sum(r - (j == 0) for j, r in self.r.items() if self.color[j] == c)

    def m(self, c: int) -> int:
        return sum(1 for j in self.real if self.color[j] == c)

    def mu(self, c: int) -> int:
        return sum(self.n - j + 1 for j in self.real if self.color[j] == c)

    def block_of(self, i: int) -> int:
        return max(j for j in self.r if j <= i)


def color_blocks(word: str, l: int) -> BlockData:
    if not word or word[-1] != "B":
        raise ValueError("coloring needs a word ending in B")
    if not is_good(word, l):
        raise ValueError(f"{word!r} is not good for l={l}")
    n = len(word)
    Bs = [i for i in range(1, n + 1) if word[i - 1] == "B"]
    if word[0] == "A":
        # a leading A-run trails a virtual B at position 0
        Bs = [0] + Bs
    r = {}
    for a, b in zip(Bs, Bs[1:]):
        r[a] = b - a
    r[n] = 1
    color = {n: 1}
    for i in reversed(Bs[:-1]):
        i1 = i + r[i]
        tgt = i1 + l - 1
        if tgt > n or word[tgt - 1] == "A":
            color[i] = max(color.values()) + 1
        else:
            color[i] = color[tgt]
    lam = {}
    for i in Bs:
        if color[i] == 1:
            lam[i] = sum(r[j] for j in Bs if j > i and color[j] != 1)
        else:
            lam[i] = sum(r[j] for j in Bs if j >= i and color[j] == color[i])
    return BlockData(word, l, r, color, lam)


def step_factor(bd: BlockData, i: int) -> Monomial2:
    """``u`` with ``f_i / S(f_{i+1}) = 1/(1-u)`` at position ``i`` (1-based)."""
    ib = bd.block_of(i)
    lam = bd.lam[ib]
    if bd.color[ib] == 1:
        return Monomial2(lam, 1) if bd.word[i - 1] == "A" else Monomial2(-lam, -1)
    d = i - ib
    return Monomial2(-lam + d, 0) if bd.word[i - 1] == "A" else Monomial2(lam - d, 0)


@dataclass(frozen=True)
class ClosedTerm:
    """``(-1)**alpha q**beta z**gamma / ((q)_{t_2}...(q)_{t_l} (q**T z)_inf)`` times a vector part."""
    alpha: int
    beta: int
    gamma: int
    t: Tuple[int, ...]  # (t_2, ..., t_l)
    vector: Tuple[Monomial2, ...] = ()
    extra: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)

    @property
    def T(self) -> int:
        return sum(self.t)

    def leading(self, bv: BoundaryVector) -> Monomial2:
        m = Monomial2(self.beta, self.gamma)
        for p, e in zip(self.vector, bv.exponents):
            m = m * p ** e
        return m


def closed_scalar(word: str, l: int) -> ClosedTerm:
    """Scalar part of ``M v_inf`` as ``(alpha, beta, gamma, t_2..t_l)``.

    Color-c blocks (c >= 2) contribute ``1/(q)_{t_c}`` and color-1 letters
    merge with the shifted ``1/(z)_inf`` into ``1/(q**T z)_inf``.  The
    q-exponent is ``n m_1 - mu_1 + sum_{c>=2} t_c(t_c+1)/2`` corrected by the
    block weights: ``+lambda`` on color-1 B's and ``-lambda`` on the others.
    """
    if not word:
        return ClosedTerm(0, 0, 0, (0,) * (l - 1))
    bd = color_blocks(word, l)
    n = len(word)
    colors = range(1, l + 1)
    if max(bd.color.values()) > l:
        raise AssertionError(f"{word!r} uses more than l colors")
    t = {c: bd.t(c) for c in colors}
    m = {c: bd.m(c) for c in colors}
    mu = {c: bd.mu(c) for c in colors}
    alpha = n - t[1] + sum(m.values())
    tri = sum(t[c] * (t[c] + 1) // 2 for c in colors if c >= 2)
    lam = sum(bd.lam[j] if bd.color[j] == 1 else -bd.lam[j] for j in bd.real)
    beta = n * m[1] - mu[1] + tri + lam
    # the naive exponent without the block-weight correction, kept for comparison
    beta_naive = n * m[1] + tri - sum(mu.values())
    return ClosedTerm(alpha, beta, m[1], tuple(t[c] for c in colors if c >= 2),
                      extra={"t": t, "m": m, "mu": mu, "beta_naive": beta_naive})


def fac_consolidation(word: str, l: int) -> ClosedTerm:
    """Multiply the per-letter factors symbolically and read off the closed shape.

    Each ``1/(1-S^{i-1} u_i)`` is normalized to a power-series factor; the
    q-only factors of each color must form ``(q)_{t_c}`` and the z-factors
    together with the tail ``(q**n z)_inf`` must form ``(q**T z)_inf``.
    """
    bd = color_blocks(word, l)
    n = len(word)
    sign, qe, ze = 0, 0, 0
    zexps: List[int] = []
    qexps: Dict[int, List[int]] = {}
    for i in range(1, n + 1):
        u = step_factor(bd, i)
        u = Monomial2(u.a + (i - 1) * u.n, u.n)
        if u.n < 0 or (u.n == 0 and u.a < 0):
            u = u.inverse()
            sign += 1
            qe += u.a
            ze += u.n
        if u.n == 0:
            qexps.setdefault(bd.color[bd.block_of(i)], []).append(u.a)
        else:
            zexps.append(u.a)
    t = []
    for c in range(2, l + 1):
        ex = sorted(qexps.get(c, []))
        if ex != list(range(1, len(ex) + 1)):
            raise AssertionError(f"{word!r}: color {c} q-factors {ex} are not a q-Pochhammer")
        t.append(len(ex))
    T = sum(t)
    if sorted(zexps) != list(range(T, n)):
        raise AssertionError(f"{word!r}: z-factors {sorted(zexps)} do not merge into (q^{T} z)_inf")
    return ClosedTerm(sign, qe, ze, tuple(t))


def closed_term(p: GoodParam) -> ClosedTerm:
    word = param_to_word(p)
    sc = closed_scalar(word, p.l)
    return ClosedTerm(sc.alpha, sc.beta, sc.gamma, sc.t, closed_vector_part(p),
                      extra=dict(sc.extra, word=word))


def scalar_series(term: ClosedTerm, lead: Monomial2, w: Window) -> Series:
    """``(-1)**alpha lead / ((q)_{t_2}...(q)_{t_l} (q**T z)_inf)`` on ``w``."""
    rq, rz = w.q_max - lead.a, w.z_max - lead.n
    if rq < 0 or rz < 0:
        return Series.zero(w)
    inner = Window(0, rq, 0, rz)
    g = inv_pochhammer_inf(Monomial2(term.T, 1), inner)
    for tc in term.t:
        for i in range(1, tc + 1):
            if i > rq:
                break
            g = mul_geom(g, Monomial2(i, 0)).restrict(inner)
    return mul_monomial(g, lead, -1 if term.alpha % 2 else 1).restrict(w)


def closed_term_series(p: GoodParam, bv: BoundaryVector, w: Window) -> Tuple[Series, Monomial2]:
    term = closed_term(p)
    lead = term.leading(bv)
    return scalar_series(term, lead, w), lead


def scalar_only_series(word: str, l: int, w: Window) -> Series:
    """The closed scalar part alone, for comparison with the operator scalar."""
    term = closed_scalar(word, l)
    return scalar_series(term, Monomial2(term.beta, term.gamma), w)


# -- bosonic sum -----------------------------------------------------------------


class SummationGuardError(RuntimeError):
    pass


@dataclass
class BosonicResult:
    series: Series
    terms: List[Tuple[GoodParam, ClosedTerm, Monomial2]]


def bosonic_terms(bv: BoundaryVector, w: Window, max_shell: int = 400,
                  slack: int = 2) -> List[Tuple[GoodParam, ClosedTerm, Monomial2]]:
    """All parameters whose term reaches ``w``, shell by shell per sigma.

    The z-degree of the leading monomial is checked to be nondecreasing
    along every lattice step; a sigma is finished after ``slack``
    consecutive shells whose leads all lie above ``z_max``.  (The q-degree
    of the lead is not monotone, so it only filters individual terms.)
    """
    out = []
    for sg in sigmas(bv.l):
        lo = lower_bounds(sg)
        prev: Dict[Tuple[int, ...], int] = {}
        quiet = 0
        for s, pts in params_by_shell(sg):
            if s > max_shell:
                raise SummationGuardError(
                    f"sigma={sg}: z-degrees still <= {w.z_max} after {max_shell} shells")
            cur = {}
            low = False
            for n in pts:
                p = GoodParam(sg, n)
                term = closed_term(p)
                lead = term.leading(bv)
                cur[n] = lead.n
                for i in range(len(n)):
                    if n[i] > lo[i]:
                        below = n[:i] + (n[i] - 1,) + n[i + 1:]
                        if lead.n < prev[below]:
                            raise SummationGuardError(
                                f"z-degree decreases: sigma={sg}, n={below}->{n}: "
                                f"{prev[below]}->{lead.n}")
                if lead.n <= w.z_max:
                    low = True
                    if lead.a <= w.q_max:
                        out.append((p, term, lead))
            prev = cur
            quiet = 0 if low else quiet + 1
            if quiet >= slack:
                break
    return out


def char_bosonic(bv: BoundaryVector, w: Window) -> Series:
    return char_bosonic_full(bv, w).series


def char_bosonic_full(bv: BoundaryVector, w: Window) -> BosonicResult:
    if w.q_min != 0 or w.z_min != 0:
        raise ValueError("character windows must start at q^0 z^0")
    terms = bosonic_terms(bv, w)
    total = Series.zero(w)
    for _, term, lead in terms:
        total = add(total, scalar_series(term, lead, w)).restrict(w)
    return BosonicResult(total, terms)


# -- explicit l = 2 and l = 3 sums -------------------------------------------------


def _explicit_term(sign: int, twice_q: int, zexp: int, pochs: Sequence[int], T: int,
                   w: Window) -> Series:
    if twice_q % 2:
        raise ArithmeticError(f"non-integral q exponent {twice_q}/2")
    term = ClosedTerm(0 if sign > 0 else 1, twice_q // 2, zexp, tuple(pochs))
    # T is passed separately because the explicit sums need not have T = sum(pochs)
    lead = Monomial2(term.beta, term.gamma)
    rq, rz = w.q_max - lead.a, w.z_max - lead.n
    if rq < 0 or rz < 0:
        return Series.zero(w)
    inner = Window(0, rq, 0, rz)
    g = inv_pochhammer_inf(Monomial2(T, 1), inner)
    for tc in pochs:
        for i in range(1, min(tc, rq) + 1):
            g = mul_geom(g, Monomial2(i, 0)).restrict(inner)
    return mul_monomial(g, lead, sign).restrict(w)


def l2_terms(k: int, b0: int, N: int) -> List[Tuple[int, int, int, Tuple[int, ...], int]]:
    """(sign, 2*q-exponent, z-exponent, pochhammer lengths, T) for both sums, n < N."""
    out = []
    for n in range(N):
        out.append(((-1) ** (n + 1), 2 * (n * n * k + n * b0) + 3 * n * (n + 1),
                    n * k + b0 + n + 1, (n,), n))
        out.append(((-1) ** n, 2 * (n * n * k - n * b0) + n * (3 * n - 1), n * k + n, (n,), n))
    return out


def char_l2_closed(k: int, b0: int, w: Window) -> Series:
    total = Series.zero(w)
    N = 0
    while True:
        # both z-exponents are at least n(k+1)
        if N * (k + 1) > w.z_max:
            break
        N += 1
    for sign, tq, ze, pochs, T in l2_terms(k, b0, N):
        total = add(total, _explicit_term(sign, tq, ze, pochs, T, w)).restrict(w)
    return total


def _bracket3(P: Sequence[Tuple[Fraction, int]], b0: int, b1: int, k: int) -> Tuple[Fraction, int]:
    e = (b0, b1 - b0, k - b1)
    return sum(p[0] * x for p, x in zip(P, e)), sum(p[1] * x for p, x in zip(P, e))


def l3_family_terms(k: int, b0: int, b1: int, m: int, n: int):
    """The six explicit families at ``(m, n)``, keyed by the word indices ``(3m+j, 2n or 2n-1)``.

    Each entry: (sign, q-exponent, z-exponent, pochhammer lengths, T).
    Families with second index ``2n-1`` are only emitted for ``n >= 1``.
    """
    F = Fraction
    g = (F(3 * k + 5, 2) * m * m + (3 * k + 5) * m * n + 2 * (k + 2) * n * n, (k + 1) * (m + n))
    rows = []

    def add_row(key, sign, pref, vec, pochs, T):
        bq, bz = _bracket3(vec, b0, b1, k)
        rows.append((key, sign, pref[0] + bq + g[0], pref[1] + bz + g[1], pochs, T))

    s0, s1 = (-1) ** m, (-1) ** (m + 1)
    if n >= 1:
        add_row((3 * m, 2 * n - 1), s0, (F(-3 * (k + 1) * m, 2) - (k + 2) * n, 0),
                [(0, 0), (m, 0), (-m - 2 * n + 1, -1)], (m, m + 2 * n - 1), 2 * m + 2 * n - 1)
    add_row((3 * m, 2 * n), s0, (F(-(3 * k + 1) * m, 2) - k * n, 0),
            [(0, 0), (m, 0), (2 * m + 2 * n, 0)], (m, m + 2 * n), 2 * m + 2 * n)
    if n >= 1:
        add_row((3 * m + 1, 2 * n - 1), s0, (F(-(3 * k + 1) * m, 2) - (2 * k + 1) * n, 0),
                [(0, 0), (m + 2 * n, 0), (2 * m + 2 * n, 0)], (m, m + 2 * n), 2 * m + 2 * n)
    add_row((3 * m + 1, 2 * n), s1, (F((3 * k + 5) * m, 2) + (2 * k + 3) * n, k + 1),
            [(0, 0), (-2 * m - 2 * n, -1), (-m - 2 * n, -1)], (m, m + 2 * n), 2 * m + 2 * n)
    if n >= 1:
        add_row((3 * m + 2, 2 * n - 1), s1, (F((3 * k + 5) * m, 2) + (k + 2) * n, k + 1),
                [(0, 0), (-2 * m - 2 * n, -1), (-m, -1)], (m, m + 2 * n), 2 * m + 2 * n)
    add_row((3 * m + 2, 2 * n), s1, (F((3 * k + 7) * m, 2) + (k + 4) * n + 1, k + 1),
            [(0, 0), (m + 2 * n + 1, 0), (-m, -1)], (m, m + 2 * n + 1), 2 * m + 2 * n + 1)
    out = {}
    for key, sign, qe, ze, pochs, T in rows:
        if qe.denominator != 1:
            raise ArithmeticError(f"non-integral q exponent {qe} in family {key}")
        out[key] = (sign, int(qe), ze, pochs, T)
    return out


def char_l3_closed(k: int, b0: int, b1: int, w: Window) -> Series:
    BoundaryVector(3, k, (b0, b1))  # validates the parameters
    total = Series.zero(w)
    # every family has z-exponent at least (k+1)(m+n)
    for m in range(w.z_max // (k + 1) + 1):
        for n in range(w.z_max // (k + 1) + 1 - m):
            for key, (sign, qe, ze, pochs, T) in sorted(l3_family_terms(k, b0, b1, m, n).items()):
                total = add(total, _explicit_term(sign, 2 * qe, ze, pochs, T, w)).restrict(w)
    return total


# -- sigma independence --------------------------------------------------------------


@dataclass
class SigmaReport:
    l: int
    omega_hessian: Dict[Tuple[Tuple[int, ...], int], List[List[Fraction]]]
    rho_slopes: Dict[Tuple[Tuple[int, ...], int], List[Fraction]]
    expected_hessian: List[List[Fraction]]
    expected_slopes: List[Fraction]
    scalar_checks: Dict[str, bool]

    @property
    def ok(self) -> bool:
        return (all(h == self.expected_hessian for h in self.omega_hessian.values())
                and all(s == self.expected_slopes for s in self.rho_slopes.values())
                and all(self.scalar_checks.values()))

    def lines(self) -> List[str]:
        out = [f"l={self.l}: expected rho slopes {[str(x) for x in self.expected_slopes]}"]
        for key in sorted(self.rho_slopes):
            sg, i = key
            out.append(f"sigma={sg} i={i}: rho slopes {'match' if self.rho_slopes[key] == self.expected_slopes else 'DIFFER'}, "
                       f"omega quadratic part {'matches' if self.omega_hessian[key] == self.expected_hessian else 'DIFFERS'}")
        for name, ok in sorted(self.scalar_checks.items()):
            out.append(f"{name}: {'yes' if ok else 'NO'}")
        return out


def expected_quadratic(l: int) -> Tuple[List[List[Fraction]], List[Fraction]]:
    d = l - 1
    H = [[Fraction(0)] * d for _ in range(d)]
    for a in range(1, l - 1):
        for b in range(1, l - 1):
            c = min(a, b)
            H[a - 1][b - 1] = Fraction((l - 1) * c, c + 1)
        H[a - 1][d - 1] = H[d - 1][a - 1] = Fraction(a, a + 1)
    H[d - 1][d - 1] = Fraction(1, l)
    slopes = [Fraction(a, a + 1) for a in range(1, l - 1)] + [Fraction(1, l)]
    return H, slopes


def _base_point(sg, L):
    lo = lower_bounds(sg)
    return tuple(x + 2 * L for x in lo)


def sigma_independence_report(l: int) -> SigmaReport:
    """Second differences of omega and first differences of rho with step lcm(2..l).

    The step is a multiple of every block period, so the floor terms
    become exactly linear and the differences are exact rationals.
    """
    L = lcm(*range(2, l + 1))
    d = l - 1
    H_exp, s_exp = expected_quadratic(l)
    hess, slopes = {}, {}
    scal: Dict[str, Dict] = {}

    def vec(sg, n):
        return closed_vector_part(GoodParam(sg, n))

    def unit(i, h):
        return tuple(h if j == i else 0 for j in range(d))

    def plus(x, y):
        return tuple(a + b for a, b in zip(x, y))

    for sg in sigmas(l):
        base = _base_point(sg, L)
        v0 = vec(sg, base)
        vi = {i: vec(sg, plus(base, unit(i, L))) for i in range(d)}
        for idx in range(l):
            slopes[(sg, idx + 1)] = [Fraction(vi[i][idx].n - v0[idx].n, L) for i in range(d)]
            H = [[Fraction(0)] * d for _ in range(d)]
            for a in range(d):
                for b in range(d):
                    vab = vec(sg, plus(plus(base, unit(a, L)), unit(b, L)))
                    H[a][b] = Fraction(vab[idx].a - vi[a][idx].a - vi[b][idx].a + v0[idx].a, L * L)
            hess[(sg, idx + 1)] = H
        # scalar data: second differences of beta, first differences of m_c and t_c
        def sc(n):
            return closed_term(GoodParam(sg, n))
        s0 = sc(base)
        si = {i: sc(plus(base, unit(i, L))) for i in range(d)}
        Hb = tuple(tuple(Fraction(sc(plus(plus(base, unit(a, L)), unit(b, L))).beta - si[a].beta
                                  - si[b].beta + s0.beta, L * L) for b in range(d)) for a in range(d))
        scal.setdefault("beta quadratic part", {})[sg] = Hb
        for c in range(1, l + 1):
            scal.setdefault(f"m_{c} linear part", {})[sg] = tuple(
                Fraction(si[i].extra["m"][c] - s0.extra["m"][c], L) for i in range(d))
            scal.setdefault(f"t_{c} linear part", {})[sg] = tuple(
                Fraction(si[i].extra["t"][c] - s0.extra["t"][c], L) for i in range(d))
    checks = {f"{name} independent of sigma": len(set(per.values())) == 1 for name, per in scal.items()}
    for key, want in expected_scalar_slopes(l).items():
        name, c = key.split("_")
        per = scal[f"{name}_{c} linear part"]
        checks[f"{key} slopes equal the expected ones"] = all(v == tuple(want) for v in per.values())
    return SigmaReport(l, hess, slopes, H_exp, s_exp, checks)


def expected_scalar_slopes(l: int) -> Dict[str, List[Fraction]]:
    """The expected linear parts of m_c (c >= 1) and t_c (c >= 2)."""
    out = {}
    for c in range(1, l + 1):
        out[f"m_{c}"] = [Fraction(a, a + 1) if a >= c - 1 else Fraction(0) for a in range(1, l - 1)] + [Fraction(1, l)]
        if c >= 2:
            out[f"t_{c}"] = [Fraction(l - 1, a + 1) if a >= c - 1 else Fraction(0) for a in range(1, l - 1)] + [Fraction(1, l)]
    return out
