"""(k,l)-configurations, their characters, and extremal configurations.

Configurations are multiplicity sequences ``x = (x_0, x_1, ...)`` in which
every ``l`` consecutive entries sum to at most ``k``.  A boundary vector
``b`` further bounds the prefix sums ``x_0 + ... + x_j <= b_j`` for
``j <= l-2``.  The character is ``sum q**(sum j x_j) z**(sum x_j)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterator, List, Sequence, Tuple

from .series import Monomial2, Series, Window, add, mul_monomial, shift_S


@dataclass(frozen=True)
class BoundaryVector:
    l: int
    k: int
    b: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if self.l < 2 or self.k < 1:
            raise ValueError(f"need l >= 2 and k >= 1, got l={self.l}, k={self.k}")
        if len(self.b) != self.l - 1:
            raise ValueError(f"b must have l-1 = {self.l - 1} entries, got {self.b}")
        if any(x < 0 for x in self.b) or any(x > y for x, y in zip(self.b, self.b[1:] + (self.k,))):
            raise ValueError(f"need 0 <= b_0 <= ... <= b_(l-2) <= k, got {self.b} with k={self.k}")

    @property
    def exponents(self) -> Tuple[int, ...]:
        """``(b_0, b_1-b_0, ..., k-b_(l-2))``: the powers in ``[P_1,...,P_l]``."""
        full = (0,) + self.b + (self.k,)
        return tuple(y - x for x, y in zip(full, full[1:]))

    def after(self, i: int) -> "BoundaryVector":
        """Boundary seen by ``(x_1, x_2, ...)`` once ``x_0 = i`` is fixed."""
        return BoundaryVector(self.l, self.k, tuple(x - i for x in self.b[1:]) + (self.k - i,))

    def __str__(self) -> str:
        return f"(k={self.k}, l={self.l}, b={list(self.b)})"


def all_boundaries(k: int, l: int) -> List[BoundaryVector]:
    return [BoundaryVector(l, k, b) for b in combinations_with_replacement(range(k + 1), l - 1)]


def _char_window(w: Window) -> Window:
    return Window(min(w.q_min, 0), w.q_max, min(w.z_min, 0), w.z_max)


# -- predicates and enumeration -------------------------------------------------

def is_config(x: Sequence[int], k: int, l: int) -> bool:
    xs = list(x)
    if any(v < 0 for v in xs):
        raise ValueError("configuration entries must be non-negative")
    return all(sum(xs[j:j + l]) <= k for j in range(len(xs)))


def satisfies_boundary(x: Sequence[int], bv: BoundaryVector) -> bool:
    total = 0
    for j, bj in enumerate(bv.b):
        total += x[j] if j < len(x) else 0
        if total > bj:
            return False
    return True


def configurations(bv: BoundaryVector, N: int, w: Window) -> Iterator[Tuple[int, ...]]:
    """Configurations of length <= N inside ``w`` (weight <= q_max, size <= z_max)."""
    k, l = bv.k, bv.l
    x: List[int] = []

    def cap(j: int) -> int:
        # window sum over the last l-1 entries, plus the boundary prefix bound
        c = k - sum(x[max(0, j - l + 1):j])
        if j <= l - 2:
            c = min(c, bv.b[j] - sum(x))
        return c

    def rec(j: int, weight: int, size: int):
        if j == N:
            yield tuple(x)
            return
        top = min(cap(j), w.z_max - size)
        if j > 0:
            top = min(top, (w.q_max - weight) // j)
        for v in range(max(top, 0) + 1):
            x.append(v)
            yield from rec(j + 1, weight + j * v, size + v)
            x.pop()

    yield from rec(0, 0, 0)


def char_bruteforce(bv: BoundaryVector, N: int, w: Window) -> Series:
    if N < 0:
        raise ValueError("N must be non-negative")
    acc: Dict[Tuple[int, int], int] = {}
    for x in configurations(bv, N, w):
        e = (sum(j * v for j, v in enumerate(x)), sum(x))
        acc[e] = acc.get(e, 0) + 1
    return Series(acc, _char_window(w))


def char_recursion_all(k: int, l: int, N: int, w: Window) -> Dict[BoundaryVector, Series]:
    """chi^(N) for every boundary vector at once, by the left-end recursion."""
    w = _char_window(w)
    states = all_boundaries(k, l)
    cur = {bv: Series.one(w) for bv in states}
    for _ in range(N):
        nxt = {}
        for bv in states:
            total = Series.zero(w)
            for i in range(bv.b[0] + 1):
                total = add(total, mul_monomial(shift_S(cur[bv.after(i)]), Monomial2(0, i)))
            nxt[bv] = total.restrict(w)
        cur = nxt
    return cur


def char_recursion(bv: BoundaryVector, N: int, w: Window) -> Series:
    if N < 0:
        raise ValueError("N must be non-negative")
    return char_recursion_all(bv.k, bv.l, N, w)[bv]


def char_infinite(bv: BoundaryVector, w: Window) -> Series:
    """chi^(inf) exact on ``w``: a part at position >= q_max+1 costs more weight than the window holds."""
    if w.q_min != 0 or w.z_min != 0:
        raise ValueError("character windows must start at q^0 z^0")
    return char_recursion(bv, w.q_max + 1, w)


# -- the lattice Lambda and extremal configurations -----------------------------

# A LambdaElement is a tuple of l integers: coefficients of (b_0, ..., b_{l-2}, k).
LambdaElement = Tuple[int, ...]


def lam_b(i: int, l: int) -> LambdaElement:
    """The generator ``b_i`` (``b_{-1} = 0``, ``b_{l-1}`` means ``k``)."""
    v = [0] * l
    if i >= 0:
        v[i] = 1
    return tuple(v)


def lam_k(l: int) -> LambdaElement:
    return lam_b(l - 1, l)


def lambda_apply(op: str, v: LambdaElement) -> LambdaElement:
    """Apply ``M_a`` (``op='a'``) or ``M_b`` (``op='b'``) to a lattice element."""
    l = len(v)
    out = [0] * l
    out[l - 1] += v[l - 1]  # both maps fix k
    for i in range(l - 1):
        c = v[i]
        if not c:
            continue
        out[i + 1] += c  # b_i -> b_{i+1}, and b_{l-2} -> k
        if op == "b":
            out[0] -= c
        elif op != "a":
            raise ValueError(f"unknown lattice map {op!r}")
    return tuple(out)


def lambda_eval(v: LambdaElement, bv: BoundaryVector) -> int:
    return sum(c * x for c, x in zip(v, bv.b + (bv.k,)))


def lambda_str(v: LambdaElement) -> str:
    l = len(v)
    names = [f"b{i}" for i in range(l - 1)] + ["k"]
    parts = []
    for c, name in zip(v, names):
        if c:
            parts.append(("" if c == 1 else "-" if c == -1 else f"{c}*") + name)
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _reduce(i: int, l: int) -> int:
    return (i - 1) % l + 1


def iota(i: int, j: int, l: int) -> LambdaElement:
    ib, jb = _reduce(i, l), _reduce(j, l)
    v = [x - y for x, y in zip(lam_b(ib - 2, l), lam_b(jb - 2, l))]
    if ib <= jb:
        v[l - 1] += 1
    return tuple(v)


def iota_eval(i: int, j: int, bv: BoundaryVector) -> int:
    return lambda_eval(iota(i, j, bv.l), bv)


def extremal_lattice(word: str, l: int) -> List[LambdaElement]:
    """Lattice form of the extremal configuration of ``word`` (zero vector where C_{i+1} = A)."""
    out = []
    for i, c in enumerate(word):
        if c == "A":
            out.append(tuple([0] * l))
            continue
        v = lam_b(0, l)
        for letter in reversed(word[:i]):
            v = lambda_apply(letter.lower(), v)
        out.append(v)
    return out


def extremal_config(word: str, bv: BoundaryVector) -> Tuple[int, ...]:
    return tuple(lambda_eval(v, bv) for v in extremal_lattice(word, bv.l))


def gammas(word: str, l: int) -> Dict[int, Tuple[int, int]]:
    """``(gamma_i, gamma'_i)`` for each 1-based position i of a B in a good word.

    Positions ``i <= 0`` count as B.
    """
    C = {i + 1: c for i, c in enumerate(word)}

    def letter(i):
        return "B" if i <= 0 else C[i]

    gamma: Dict[int, int] = {}
    gamma_p: Dict[int, int] = {}

    def g(i):
        if i <= l - 1:
            return i + 1
        return gamma_p[i - l + 1]

    for i in range(1, len(word) + 1):
        if letter(i) != "B":
            continue
        prev = i - 1
        while letter(prev) != "B":
            prev -= 1
        gamma_p[i] = g(prev)
        if i >= l and letter(i - l + 1) != "B":
            raise ValueError(f"{word} is not good for l={l}")
        gamma[i] = g(i)
    return {i: (gamma[i], gamma_p[i]) for i in gamma}


def extremal_config_good(word: str, bv: BoundaryVector) -> Tuple[int, ...]:
    """Extremal configuration of a good word via the gamma recursion."""
    gm = gammas(word, bv.l)
    return tuple(iota_eval(*gm[i + 1], bv) if c == "B" else 0 for i, c in enumerate(word))


def _map_a(j: int, l: int) -> int:
    return 1 if j in (1, l) else j + 1


def _map_b(j: int, l: int) -> int:
    return 1 if j == l else j + 1


def extremal_config_maps(word: str, bv: BoundaryVector) -> Tuple[int, ...]:
    """Extremal configuration of a good word from the index maps a, b on {1..l}.

    ``gamma_i = c_1 o ... o c_{i-1} (2)`` and ``gamma'_i`` the same applied to 1.
    """
    l = bv.l
    out = []
    for i, c in enumerate(word):
        if c == "A":
            out.append(0)
            continue
        g, gp = 2, 1
        for letter in reversed(word[:i]):
            f = _map_a if letter == "A" else _map_b
            g, gp = f(g, l), f(gp, l)
        out.append(iota_eval(g, gp, bv))
    return tuple(out)


def strip_zeros(x: Sequence[int]) -> Tuple[int, ...]:
    xs = list(x)
    while xs and xs[-1] == 0:
        xs.pop()
    return tuple(xs)


def config_equivalent(x: Sequence[int], y: Sequence[int]) -> bool:
    return strip_zeros(x) == strip_zeros(y)


def config_monomial(x: Sequence[int]) -> Monomial2:
    """``prod_i (q**i z)**x_i``."""
    return Monomial2(sum(i * v for i, v in enumerate(x)), sum(x))
