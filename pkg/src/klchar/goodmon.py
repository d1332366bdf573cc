"""Summation graph, good monomials and cancellation pairs.

A vertex is a tuple over {0, 1, 2}: 0 for an empty slot, 1 for an occupied
one and 2 for the occupied slot carrying the mark.  Paths read words left
to right, starting from the all-occupied vertex (marked in its last slot
for marked paths).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .operators import SimpleVector, canonical, check_word, word_on_infinity
from .series import Z as _Z, Window

Vertex = Tuple[int, ...]
EMPTY, FULL, MARK = 0, 1, 2
_GLYPH = {EMPTY: "∘", FULL: "•", MARK: "×"}


def vertex_str(v: Vertex) -> str:
    return "[" + "".join(_GLYPH[x] for x in v) + "]"


def top(l: int, marked: bool = False) -> Vertex:
    return (FULL,) * (l - 1) + ((MARK if marked else FULL),)


def graph_step(v: Vertex, c: str) -> Vertex:
    """One arrow on an unmarked vertex."""
    if c == "B":
        return v[1:] + v[:1]
    if c != "A":
        raise ValueError(f"bad letter {c!r}")
    if v[0] == FULL:
        return (FULL,) + v[2:] + (EMPTY,)
    return v[1:] + (EMPTY,)


def marked_step(v: Vertex, c: str) -> Vertex:
    """One arrow on a possibly marked vertex; an A may drop the mark."""
    if c == "B":
        return v[1:] + v[:1]
    if c != "A":
        raise ValueError(f"bad letter {c!r}")
    head = v[0]
    if head == EMPTY:
        return v[1:] + (EMPTY,)
    if head == FULL:
        # the second slot disappears, mark included when it sits there
        return (FULL,) + v[2:] + (EMPTY,)
    if v[1] == EMPTY:
        return (MARK,) + v[2:] + (EMPTY,)
    return (FULL,) + v[2:] + (EMPTY,)


def path_of(word: str, l: int) -> List[Vertex]:
    check_word(word)
    out = [top(l)]
    for c in word:
        out.append(graph_step(out[-1], c))
    return out


def marked_path(word: str, l: int) -> List[Vertex]:
    check_word(word)
    out = [top(l, marked=True)]
    for c in word:
        out.append(marked_step(out[-1], c))
    return out


def unmark(v: Vertex, to: int) -> Vertex:
    return tuple(to if x == MARK else x for x in v)


def sigma_of(word: str, l: int) -> Tuple[int, ...]:
    """``sigma_M`` as the tuple ``(sigma(1), ..., sigma(l))``; composition is ``sigma_{MM'} = sigma_{M'} o sigma_M``."""
    check_word(word)
    sig = list(range(1, l + 1))
    for c in word:
        # sigma_{M c} = sigma_c o sigma_M
        sig = [(1 if s == 1 else s - 1) if c == "A" else (l if s == 1 else s - 1) for s in sig]
    return tuple(sig)


def image_vertex(sig: Sequence[int], l: int) -> Vertex:
    img = set(sig)
    return tuple(FULL if i in img else EMPTY for i in range(1, l + 1))


def is_good(word: str, l: int) -> bool:
    """``C_i = A`` forces ``C_{i+l-1} = A``; letters past the end are A."""
    check_word(word)
    n = len(word)
    return all(c == "B" or i + l - 1 >= n or word[i + l - 1] == "A" for i, c in enumerate(word))


def is_good_by_path(word: str, l: int) -> bool:
    return all(v[0] != EMPTY for v in path_of(word + "A" * l, l))


def good_words(l: int, max_degree: int) -> List[str]:
    """Canonical good words (empty or ending in B) of degree <= max_degree.

    Suffixes of good words are good, so prepending letters to good words
    reaches all of them.
    """
    out = [""]
    frontier = ["B"] if max_degree >= 1 else []
    while frontier:
        out.extend(frontier)
        frontier = [c + w for w in frontier for c in "AB"
                    if len(w) < max_degree and is_good(c + w, l)]
    return sorted(out, key=lambda s: (len(s), s))


def census_families(l: int, max_degree: int) -> set:
    """The explicit families of good classes for l = 2, 3, 4."""
    out = set()
    D = max_degree
    if l == 2:
        out = {"B" * m for m in range(D + 1)}
    elif l == 3:
        out = {"B" * m + "AB" * n for m in range(D + 1) for n in range(D + 1) if m + 2 * n <= D}
    elif l == 4:
        for m in range(D + 1):
            for n in range(D + 1):
                for p in range(D + 1):
                    w = "B" * m + "ABB" * n + "AAB" * p
                    if len(w) <= D:
                        out.add(w)
        for m in range(-1, D + 1):
            for n in range(1, D + 1):
                for p in range(D + 1):
                    w = "BAB" * n + "AAB" * p
                    w = ("B" * m + w) if m >= 0 else w[1:]
                    if len(w) <= D:
                        out.add(w)
    else:
        raise ValueError("explicit families are only listed for l = 2, 3, 4")
    return out


# -- cancellation pairs ----------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    kind: str  # "G", "A" or "B"
    index: Optional[int] = None  # 1-based position of the cancellation arrow
    path: Tuple[Vertex, ...] = ()


def classify(word: str, l: int) -> Classification:
    """Place a good class in G_G, G_A or G_B by its marked path.

    The class is extended with A's up to degree + 2l, after which the marked
    path no longer changes the head slot.
    """
    if not is_good(word, l):
        raise ValueError(f"{word!r} is not good for l={l}")
    ext = word + "A" * (2 * l)
    P = marked_path(ext, l)
    last = None
    for i, c in enumerate(ext, start=1):
        v = P[i - 1]
        if v[0] != MARK:
            continue
        if v[1] == FULL:
            last = (c, i)
        elif c == "B":
            raise AssertionError(f"marked path of good word {word!r} takes a forbidden arrow at {i}")
    if last is None:
        if any(v[0] == MARK for v in P):
            raise AssertionError(f"mark stays at the head for {word!r} without a cancellation arrow")
        if not is_good("A" + word, l):
            raise AssertionError(f"A{word} should be good")
        return Classification("G", None, tuple(P))
    return Classification(last[0], last[1], tuple(P))


def cancellation_partner(word: str, l: int) -> str:
    cl = classify(word, l)
    if cl.kind == "G":
        raise ValueError(f"{word!r} is in G_G and has no partner")
    ext = list(word + "A" * (2 * l))
    i = cl.index - 1
    ext[i] = "B" if ext[i] == "A" else "A"
    return canonical("".join(ext))


def split_pair(word: str, l: int) -> Tuple[str, str]:
    """``(N, K)`` with the cancellation arrow between them (class padded with A's)."""
    cl = classify(word, l)
    if cl.kind == "G":
        raise ValueError(f"{word!r} is in G_G")
    ext = word + "A" * (2 * l)
    return ext[:cl.index - 1], canonical(ext[cl.index:])


def cancellation_pairs(l: int, max_degree: int) -> List[Tuple[str, str]]:
    """Pairs ``(NAK, NBK)`` of canonical good words, both of degree <= max_degree."""
    pairs = []
    for w in good_words(l, max_degree):
        cl = classify(w, l)
        if cl.kind == "A":
            p = cancellation_partner(w, l)
            if len(p) <= max_degree:
                pairs.append((w, p))
    return pairs


def pair_vectors(word: str, l: int, w: Window) -> Tuple[SimpleVector, SimpleVector]:
    """``A N A K v_inf`` and ``A N B K v_inf`` for the pair containing ``word``."""
    N, K = split_pair(word, l)
    return (word_on_infinity("A" + N + "A" + K, l, w), word_on_infinity("A" + N + "B" + K, l, w))


def verify_cancellation(word: str, bv, w: Window) -> bool:
    from .operators import eval_at_boundary
    from .series import add
    x, y = pair_vectors(word, bv.l, w)
    return add(eval_at_boundary(x, bv, w), eval_at_boundary(y, bv, w)).restrict(w).is_zero()


# -- cancellation blocks and the conditions (C)_s ---------------------------------

def is_block(word: str, l: int) -> bool:
    s = len(word) - l
    if not 0 <= s <= l - 2:
        return False
    return (word[0] == word[s + 1] == word[l - 1] == "B"
            and set(word[1:s + 1]) <= {"A"} and set(word[l:]) <= {"A"})


def decompose_blocks(BN: str, l: int) -> List[Tuple[int, str]]:
    """Factor ``BN`` into cancellation blocks ``B A^s B ... B A^s``.

    Each block is fixed by its length ``s`` of the leading A-run, so the
    factorization is unique when it exists.
    """
    out = []
    pos = 0
    while pos < len(BN):
        if BN[pos] != "B":
            raise ValueError(f"{BN!r} does not factor into cancellation blocks")
        s = 0
        while pos + 1 + s < len(BN) and BN[pos + 1 + s] == "A":
            s += 1
        blk = BN[pos:pos + l + s]
        if not is_block(blk, l):
            raise ValueError(f"{BN!r} does not factor into cancellation blocks at {pos}")
        out.append((s, blk))
        pos += l + s
    return out


def blocks_adjacent_ok(blocks: Sequence[Tuple[int, str]], l: int) -> bool:
    for (s, _), (t, D) in zip(blocks, blocks[1:]):
        if t == l - 2:
            continue
        if l >= s + t + 3 and all(c == "A" for c in D[l - s - 1:l - 1]):
            continue
        return False
    return True


def tail_shape_ok(K: str, s_last: int, l: int) -> bool:
    """K, padded with A's, splits into degree-(l-1) pieces each ending in A^(s_last+1)."""
    size = l - 1
    K = K + "A" * (-len(K) % size)
    return all(K[i + size - s_last - 1:i + size] == "A" * (s_last + 1) for i in range(0, len(K), size))


def check_condition_Cs(v: SimpleVector, vp: SimpleVector, s: int) -> bool:
    P, Pp = v.P, vp.P
    l = len(P)
    c1 = all(P[j] == Pp[j] for j in range(1, l))
    c2 = P[0] / P[1] == Pp[-1] / Pp[0] * _Z
    c3 = len(set(P[l - s - 1:])) == 1
    return c1 and c2 and c3


def path_ascii(word: str, l: int, marked: bool = False) -> str:
    P = marked_path(word, l) if marked else path_of(word, l)
    parts = [vertex_str(P[0])]
    for c, v in zip(word, P[1:]):
        parts.append(f" -{c}-> {vertex_str(v)}")
    return "".join(parts)
