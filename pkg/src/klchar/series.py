"""Exact truncated bivariate Laurent series in ``q`` and ``z``.

A :class:`Series` stores integer coefficients keyed by exponent pairs
``(a, n)`` (``a`` for ``q``, ``n`` for ``z``) together with a
:class:`Window`, the box on which the coefficients are guaranteed exact.

The lower corner of a window doubles as a support floor: the represented
formal series has no term with ``n < z_min``, and no term with
``z_min <= n <= z_max`` and ``a < q_min``.  Every constructor and
operation below maintains this, which is what lets products, sums and
the ``z -> qz`` shift report the largest box on which their result is
still exact.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple

Exponent = Tuple[int, int]


class PoleError(ZeroDivisionError):
    """Raised when asked to expand ``1/(1 - 1)``."""


class WindowError(ValueError):
    pass


class Monomial2(NamedTuple):
    """``q**a * z**n`` with a unit coefficient."""

    a: int
    n: int

    def __mul__(self, other: "Monomial2") -> "Monomial2":  # type: ignore[override]
        return Monomial2(self.a + other.a, self.n + other.n)

    def __truediv__(self, other: "Monomial2") -> "Monomial2":
        return Monomial2(self.a - other.a, self.n - other.n)

    def __pow__(self, e: int) -> "Monomial2":
        return Monomial2(self.a * e, self.n * e)

    def inverse(self) -> "Monomial2":
        return Monomial2(-self.a, -self.n)

    def shift(self, times: int = 1) -> "Monomial2":
        """Image under ``z -> q**times * z``."""
        return Monomial2(self.a + times * self.n, self.n)

    def is_one(self) -> bool:
        return self.a == 0 and self.n == 0

    def __str__(self) -> str:
        return format_monomial(self.a, self.n)


ONE = Monomial2(0, 0)
Q = Monomial2(1, 0)
Z = Monomial2(0, 1)


def format_monomial(a: int, n: int) -> str:
    parts = []
    if a:
        parts.append("q" if a == 1 else f"q^{a}")
    if n:
        parts.append("z" if n == 1 else f"z^{n}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class Window:
    q_min: int
    q_max: int
    z_min: int
    z_max: int

    def __post_init__(self):
        if self.q_min > self.q_max or self.z_min > self.z_max:
            raise WindowError(f"degenerate window {self}")

    @classmethod
    def box(cls, q_max: int, z_max: int) -> "Window":
        return cls(0, q_max, 0, z_max)

    def __contains__(self, e: Exponent) -> bool:
        a, n = e
        return self.q_min <= a <= self.q_max and self.z_min <= n <= self.z_max

    def intersect(self, other: "Window") -> "Window":
        return Window(max(self.q_min, other.q_min), min(self.q_max, other.q_max),
                      max(self.z_min, other.z_min), min(self.z_max, other.z_max))

    def shifted(self, m: Monomial2) -> "Window":
        return Window(self.q_min + m.a, self.q_max + m.a,
                      self.z_min + m.n, self.z_max + m.n)

    def points(self) -> Iterator[Exponent]:
        for n in range(self.z_min, self.z_max + 1):
            for a in range(self.q_min, self.q_max + 1):
                yield a, n

    def as_dict(self) -> Dict[str, int]:
        return {"q_min": self.q_min, "q_max": self.q_max,
                "z_min": self.z_min, "z_max": self.z_max}

    def __str__(self) -> str:
        return f"q[{self.q_min},{self.q_max}] z[{self.z_min},{self.z_max}]"


class Series:
    """Immutable truncated series; see the module docstring for windows."""

    __slots__ = ("_coeffs", "window")

    def __init__(self, coeffs: Mapping[Exponent, int], window: Window):
        self.window = window
        self._coeffs = {e: int(c) for e, c in coeffs.items() if c and e in window}

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, window: Window) -> "Series":
        return cls({}, window)

    @classmethod
    def one(cls, window: Window) -> "Series":
        return cls.monomial(ONE, window)

    @classmethod
    def monomial(cls, m: Monomial2, window: Window, coeff: int = 1) -> "Series":
        # a lone monomial has its own support as floor
        w = Window(min(window.q_min, m.a), window.q_max,
                   min(window.z_min, m.n), window.z_max)
        return cls({(m.a, m.n): coeff}, w)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, int]], window: Window) -> "Series":
        acc: Dict[Exponent, int] = {}
        for a, n, c in terms:
            acc[(a, n)] = acc.get((a, n), 0) + c
        return cls(acc, window)

    # -- access -----------------------------------------------------------

    def __getitem__(self, e: Exponent) -> int:
        if e not in self.window:
            raise KeyError(f"{e} outside exact window {self.window}")
        return self._coeffs.get(e, 0)

    def coeff(self, a: int, n: int) -> int:
        return self[(a, n)]

    def items(self):
        return self._coeffs.items()

    def terms(self) -> list:
        """Rows ``(a, n, c)`` sorted by ``(n, a)``."""
        return [(a, n, c) for (a, n), c in sorted(self._coeffs.items(), key=lambda t: (t[0][1], t[0][0]))]

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def z_slice(self, n: int) -> Dict[int, int]:
        return {a: c for (a, m), c in self._coeffs.items() if m == n}

    def restrict(self, w: Window) -> "Series":
        """Forget coefficients above ``w``; lower bounds can only move down."""
        nw = Window(min(w.q_min, self.window.q_min), min(w.q_max, self.window.q_max),
                    min(w.z_min, self.window.z_min), min(w.z_max, self.window.z_max))
        return Series(self._coeffs, nw)

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "Series":
        return Series({e: -c for e, c in self._coeffs.items()}, self.window)

    def __add__(self, other: "Series") -> "Series":
        return add(self, other)

    def __sub__(self, other: "Series") -> "Series":
        return add(self, -other)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, int):
            return Series({e: c * other for e, c in self._coeffs.items()}, self.window)
        return NotImplemented

    __rmul__ = __mul__

    def equal_on(self, other: "Series", w: Window | None = None) -> bool:
        return not mismatches(self, other, w)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.window == other.window and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.window, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"Series({self.to_str()}, window={self.window})"

    def to_str(self, max_terms: int = 12) -> str:
        rows = self.terms()
        if not rows:
            return "0"
        parts = []
        for a, n, c in rows[:max_terms]:
            mono = format_monomial(a, n)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts).replace("+ -", "- ")
        return s + (" + ..." if len(rows) > max_terms else "")

    # -- serialization --------------------------------------------------------

    def to_table(self) -> str:
        w = self.window
        lines = [f"# window q_min={w.q_min} q_max={w.q_max} z_min={w.z_min} z_max={w.z_max}",
                 "# a n coefficient"]
        lines += [f"{a} {n} {c}" for a, n, c in self.terms()]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {"window": self.window.as_dict(),
               "terms": [[a, n, c] for a, n, c in self.terms()]}
        return json.dumps(doc, indent=1)

    @classmethod
    def from_table(cls, text: str) -> "Series":
        window = None
        terms = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("# window"):
                kv = dict(tok.split("=") for tok in line[len("# window"):].split())
                window = Window(int(kv["q_min"]), int(kv["q_max"]), int(kv["z_min"]), int(kv["z_max"]))
            elif not line.startswith("#"):
                a, n, c = line.split()
                terms.append((int(a), int(n), int(c)))
        if window is None:
            raise ValueError("missing window header")
        return cls.from_terms(terms, window)

    @classmethod
    def from_json(cls, text: str) -> "Series":
        doc = json.loads(text)
        return cls.from_terms(doc["terms"], Window(**doc["window"]))


def mismatches(s: Series, t: Series, w: Window | None = None) -> list:
    """Exponents in ``w`` (and both windows) where ``s`` and ``t`` differ."""
    common = s.window.intersect(t.window) if _overlap(s.window, t.window) else None
    if common is None:
        raise WindowError(f"incomparable windows {s.window} and {t.window}")
    if w is not None:
        if not _overlap(common, w):
            raise WindowError(f"window {w} misses the common exact region {common}")
        common = common.intersect(w)
    keys = {e for e in s._coeffs if e in common} | {e for e in t._coeffs if e in common}
    return sorted((e for e in keys if s._coeffs.get(e, 0) != t._coeffs.get(e, 0)),
                  key=lambda e: (e[1], e[0]))


def _overlap(v: Window, w: Window) -> bool:
    return (max(v.q_min, w.q_min) <= min(v.q_max, w.q_max)
            and max(v.z_min, w.z_min) <= min(v.z_max, w.z_max))


def add(s: Series, t: Series) -> Series:
    # below a floor the coefficient is a known zero, so the lower corner is the min
    sw, tw = s.window, t.window
    w = Window(min(sw.q_min, tw.q_min), min(sw.q_max, tw.q_max),
               min(sw.z_min, tw.z_min), min(sw.z_max, tw.z_max))
    acc = dict(s._coeffs)
    for e, c in t._coeffs.items():
        acc[e] = acc.get(e, 0) + c
    return Series(acc, w)


def product_window(v: Window, w: Window) -> Window:
    return Window(v.q_min + w.q_min, min(v.q_max + w.q_min, w.q_max + v.q_min),
                  v.z_min + w.z_min, min(v.z_max + w.z_min, w.z_max + v.z_min))


def _slices(s: Series) -> Dict[int, list]:
    rows: Dict[int, list] = {}
    for (a, n), c in s._coeffs.items():
        rows.setdefault(n, []).append((a, c))
    for row in rows.values():
        row.sort()
    return rows


def mul(s: Series, t: Series) -> Series:
    w = product_window(s.window, t.window)
    acc: Dict[Exponent, int] = {}
    ss, ts = _slices(s), _slices(t)
    for n1, row1 in ss.items():
        for n2, row2 in ts.items():
            n = n1 + n2
            if n > w.z_max:
                continue
            for a1, c1 in row1:
                for a2, c2 in row2:
                    a = a1 + a2
                    if a > w.q_max:
                        break
                    acc[(a, n)] = acc.get((a, n), 0) + c1 * c2
    return Series(acc, w)


def mul_monomial(s: Series, m: Monomial2, coeff: int = 1) -> Series:
    return Series({(a + m.a, n + m.n): c * coeff for (a, n), c in s._coeffs.items()},
                  s.window.shifted(m))


def shift_S(s: Series, times: int = 1) -> Series:
    """``g(q, z) -> g(q, q**times * z)``; exact q-range moves by the z-floor."""
    w = s.window
    dz = times * w.z_min
    nw = Window(w.q_min + dz, w.q_max + dz, w.z_min, w.z_max)
    return Series({(a + times * n, n): c for (a, n), c in s._coeffs.items()}, nw)


def _expansion(u: Monomial2):
    """Step monomial, first index and sign of the expansion of ``1/(1-u)``."""
    if u.is_one():
        raise PoleError("1/(1-u) with u = 1")
    if u.n > 0 or (u.n == 0 and u.a > 0):
        return u, 0, 1
    return u.inverse(), 1, -1


def geom_inverse(u: Monomial2, w: Window) -> Series:
    """Expansion of ``1/(1-u)``.

    ``sum_{j>=0} u**j`` when ``u`` has positive z-degree, or zero z-degree and
    positive q-degree; otherwise ``-sum_{j>=1} u**(-j)``.  The window's lower
    corner is lowered if the expansion reaches below it.
    """
    step, j, sign = _expansion(u)
    z_floor = j * step.n
    terms = {}
    lo_a = w.q_min
    while True:
        a, n = j * step.a, j * step.n
        if n > w.z_max or (step.n == 0 and a > w.q_max):
            break
        if a <= w.q_max:
            terms[(a, n)] = sign
            lo_a = min(lo_a, a)
        j += 1
    return Series(terms, Window(lo_a, w.q_max, min(w.z_min, z_floor), w.z_max))


def mul_geom(s: Series, u: Monomial2) -> Series:
    """``s * geom_inverse(u)`` computed by the recurrence ``h = s + u*h``.

    The recurrence needs an expansion over non-negative exponents, which is
    the situation for every operator factor after the shift; any other ``u``
    falls back to a plain product.
    """
    step, j0, sign = _expansion(u)
    w = s.window
    if step.a < 0:
        span = Window(0, w.q_max - w.q_min, 0, w.z_max - w.z_min)
        return mul(s, geom_inverse(u, span))
    h: Dict[Exponent, int] = {}
    src = s._coeffs
    for n in range(w.z_min, w.z_max + 1):
        for a in range(w.q_min, w.q_max + 1):
            c = src.get((a, n), 0) + h.get((a - step.a, n - step.n), 0)
            if c:
                h[(a, n)] = c
    out = Series(h, w)
    if j0:
        out = mul_monomial(out, step, sign)
    return out


def pochhammer(u: Monomial2, n: int, w: Window | None = None) -> Series:
    """The polynomial ``prod_{i<n} (1 - q**i u)``."""
    if n < 0:
        raise ValueError("pochhammer length must be non-negative")
    acc = {(0, 0): 1}
    for i in range(n):
        v = u * Monomial2(i, 0)
        nxt = dict(acc)
        for (a, m), c in acc.items():
            e = (a + v.a, m + v.n)
            nxt[e] = nxt.get(e, 0) - c
        acc = {e: c for e, c in nxt.items() if c}
    if w is None:
        amin = min(a for a, _ in acc) if acc else 0
        nmin = min(m for _, m in acc) if acc else 0
        w = Window(amin, max(a for a, _ in acc), nmin, max(m for _, m in acc))
    return Series(acc, w)


def _converges(u: Monomial2) -> bool:
    return u.n > 0 or (u.n == 0 and u.a > 0)


def pochhammer_inf(u: Monomial2, w: Window) -> Series:
    """``prod_{i>=0} (1 - q**i u)`` truncated to ``w``."""
    if not _converges(u):
        raise ValueError(f"(u)_inf does not converge for u = {u}")
    if w.q_min > 0 or w.z_min > 0:
        w = Window(min(w.q_min, 0), w.q_max, min(w.z_min, 0), w.z_max)
    out = Series.one(w)
    i = 0
    while True:
        v = u * Monomial2(i, 0)
        if v.a > w.q_max or v.n > w.z_max:
            break
        out = mul(out, Series({(0, 0): 1, (v.a, v.n): -1}, w))
        i += 1
    return out


def inv_pochhammer_inf(u: Monomial2, w: Window) -> Series:
    """Expansion of ``1/(u)_inf`` as a product of geometric series."""
    if not _converges(u):
        raise ValueError(f"(u)_inf does not converge for u = {u}")
    if w.q_min > 0 or w.z_min > 0:
        w = Window(min(w.q_min, 0), w.q_max, min(w.z_min, 0), w.z_max)
    out = Series.one(w)
    i = 0
    while True:
        v = u * Monomial2(i, 0)
        if v.a > w.q_max or v.n > w.z_max:
            break
        out = mul_geom(out, v)
        i += 1
    return out


def inv_pochhammer(u: Monomial2, n: int, w: Window) -> Series:
    """Expansion of ``1/(u)_n``."""
    if w.q_min > 0 or w.z_min > 0:
        w = Window(min(w.q_min, 0), w.q_max, min(w.z_min, 0), w.z_max)
    out = Series.one(w)
    for i in range(n):
        out = mul_geom(out, u * Monomial2(i, 0))
    return out
