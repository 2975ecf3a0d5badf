"""Cross-corner surgery on words and multi-words, and the reduction of a word
to one with at most two block-pairs.

A cut at position ``i`` falls between letters ``i`` and ``i + 1``.  Cutting a
cyclic word at two corners leaves two arcs; surgery glues them back so the
two corners become transversals.
"""
from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional, Union

from .errors import DegenerateSplit, NotOppositeCorners, PurePower, WrongOrientation
from .words import (
    A_FAMILY,
    INVERSE,
    CyclicWord,
    MultiWord,
    block_decomposition,
    invert,
    inverse_linear,
    is_reduced_linear,
    word_from_blocks,
)


class SiteKind(str, Enum):
    TRANSVERSAL = "transversal"
    CORNER = "corner"


class CornerSite(NamedTuple):
    position: int
    kind: SiteKind


class Orientation(str, Enum):
    SAME = "same"
    REVERSED = "reversed"


class OppositeCornerPair(NamedTuple):
    site1: CornerSite
    site2: CornerSite
    orientation: Orientation


def sites(w: CyclicWord) -> list:
    n = len(w)
    return [CornerSite(i, SiteKind.TRANSVERSAL if w[i] == w[i + 1] else SiteKind.CORNER)
            for i in range(n)]


def corner_letters(w: CyclicWord, i: int) -> tuple:
    return w[i], w[i + 1]


def opposite_relation(c1: tuple, c2: tuple) -> Optional[Orientation]:
    """How two corners (given as letter pairs) are opposite, if at all."""
    p, q = c1
    if p == q or c2[0] == c2[1]:
        return None
    if c2 == (q, p):
        return Orientation.SAME
    if c2 == (INVERSE[p], INVERSE[q]):
        return Orientation.REVERSED
    return None


def find_opposite_corner_pairs(w: CyclicWord) -> list:
    """All unordered pairs of opposite corners of ``w``, by position."""
    corners = [s for s in sites(w) if s.kind is SiteKind.CORNER]
    out = []
    for a in range(len(corners)):
        for b in range(a + 1, len(corners)):
            s1, s2 = corners[a], corners[b]
            rel = opposite_relation(corner_letters(w, s1.position), corner_letters(w, s2.position))
            if rel is not None:
                out.append(OppositeCornerPair(s1, s2, rel))
    return out


def _arcs(w: CyclicWord, i: int, j: int) -> tuple:
    """The two arcs left by cutting after positions ``i`` and ``j``."""
    n = len(w)
    text = w.letters * 2
    i, j = i % n, j % n
    if i == j:
        raise DegenerateSplit("the two cuts coincide")
    first = text[i + 1:(j if j > i else j + n) + 1]
    second = text[j + 1:(i if i > j else i + n) + 1]
    return first, second


def _closed(text: str) -> CyclicWord:
    # the templates only ever create transversals at the seams
    assert is_reduced_linear(text) and text[-1] != INVERSE[text[0]], text
    return CyclicWord(text)


def _pair_positions(pair) -> tuple:
    if isinstance(pair, OppositeCornerPair):
        return pair.site1.position, pair.site2.position, pair.orientation
    i, j = pair
    return i, j, None


def surgery_reversed(w: CyclicWord, pair) -> CyclicWord:
    """<x r|s y R|S z>  ->  <s y R R X Z s>, i.e. the arc through x is inverted.

    The other choice (inverting the arc through y) gives the inverse class,
    which has the same self-intersection number.
    """
    i, j, _ = _pair_positions(pair)
    rel = opposite_relation(corner_letters(w, i), corner_letters(w, j))
    if rel is not Orientation.REVERSED:
        raise WrongOrientation(f"corners at {i}, {j} of {w!r} are not reversed opposite corners")
    inner, outer = _arcs(w, i, j)  # inner = s y R, outer = S z x r
    return _closed(inner + inverse_linear(outer))


def surgery_same(w: CyclicWord, pair) -> MultiWord:
    """<x r|s y s|r z>  ->  [<x r r z>, <s y s>]."""
    i, j, _ = _pair_positions(pair)
    rel = opposite_relation(corner_letters(w, i), corner_letters(w, j))
    if rel is not Orientation.SAME:
        raise WrongOrientation(f"corners at {i}, {j} of {w!r} are not same-orientation opposite corners")
    inner, outer = _arcs(w, i, j)
    if not inner or not outer:
        raise DegenerateSplit("surgery would leave an empty component")
    return MultiWord([_closed(outer), _closed(inner)])


def surgery_merge(mw: MultiWord, site1: int, site2: int) -> CyclicWord:
    """Join two components at opposite corners, one in each.

    [<x r|s y>, <z s|r w>]  ->  <x r r w z s s y>.  If the second corner is
    R|S the second component is inverted first, which turns it into s|r.
    """
    if len(mw) != 2:
        raise NotOppositeCorners("merging needs exactly two components")
    v, w = mw[0], mw[1]
    c1, c2 = corner_letters(v, site1), corner_letters(w, site2)
    rel = opposite_relation(c1, c2)
    if rel is None:
        raise NotOppositeCorners(f"{c1} in {v!r} and {c2} in {w!r} are not opposite corners")
    if rel is Orientation.REVERSED:
        w = invert(w)
        # invert() re-canonicalizes; locate the image of the corner by letters
        site2 = _image_of_inverted_site(w, mw[1], site2)
        assert corner_letters(w, site2) == (c1[1], c1[0])
    n1, n2 = len(v), len(w)
    arc1 = (v.letters * 2)[site1 % n1 + 1:site1 % n1 + 1 + n1]  # s ... r
    arc2 = (w.letters * 2)[site2 % n2 + 1:site2 % n2 + 1 + n2]  # r ... s
    return _closed(arc1 + arc2)


def _image_of_inverted_site(inv: CyclicWord, orig: CyclicWord, site: int) -> int:
    n = len(orig)
    flipped = inverse_linear(orig.letters)
    # position site in orig maps to n-2-site in the plain reversal
    k = (n - 2 - site) % n
    # inv.letters is a rotation of flipped; find the offset
    doubled = inv.letters * 2
    for off in range(n):
        if doubled[off:off + n] == flipped:
            return (k + off) % n
    raise AssertionError("inverse is not a rotation")


# ---------------------------------------------------------------- pipeline

class TraceStep(NamedTuple):
    rule: str
    before: Union[CyclicWord, MultiWord]
    after: Union[CyclicWord, MultiWord]


class ReductionTrace(NamedTuple):
    steps: list
    final: CyclicWord
    guaranteed_gain: int

    def to_json(self) -> list:
        def fmt(x):
            return x.letters if isinstance(x, CyclicWord) else x.texts()
        return [{"rule": s.rule, "before": fmt(s.before), "after": fmt(s.after)} for s in self.steps]


def _block_pairs(w: CyclicWord, r_family: Optional[bool] = None) -> tuple:
    """(r, pairs, blocks) with blocks rotated to start at an r-block and pairs
    listing (r_exp, t_letter, t_exp) in cyclic order.

    ``r`` is the letter of the family that uses a single letter; for
    two-letter words the a-family is used unless ``r_family`` (True for the
    a-family) says otherwise.
    """
    blocks = list(block_decomposition(w).blocks)
    if r_family is None:
        a_letters = {x for x, _ in blocks if x in A_FAMILY}
        r_family = len(a_letters) == 1
    if (blocks[0][0] in A_FAMILY) != r_family:
        blocks = blocks[1:] + blocks[:1]
    r = blocks[0][0]
    pairs = [(blocks[2 * t][1], blocks[2 * t + 1][0], blocks[2 * t + 1][1]) for t in range(len(blocks) // 2)]
    return r, pairs, blocks


def _cut_position(w: CyclicWord, blocks: list, block_index: int) -> int:
    """Position of the corner at the end of block ``block_index`` in ``w``."""
    spelled = "".join(x * e for x, e in blocks)
    off = None
    doubled = w.letters * 2
    n = len(w)
    for k in range(n):
        if doubled[k:k + n] == spelled:
            off = k
            break
    end = sum(e for _, e in blocks[:block_index + 1]) - 1
    return (end + off) % n


def _least_merge(mw: MultiWord) -> Optional[tuple]:
    v, w = mw[0], mw[1]
    best = None
    for s1 in sites(v):
        if s1.kind is not SiteKind.CORNER:
            continue
        for s2 in sites(w):
            if s2.kind is not SiteKind.CORNER:
                continue
            rel = opposite_relation(corner_letters(v, s1.position), corner_letters(w, s2.position))
            if rel is Orientation.SAME:
                cand = (s1.position, s2.position)
                if best is None or cand < best:
                    best = cand
    return best


def _double_surgery(w: CyclicWord, rule: str, steps: list) -> CyclicWord:
    """Split at two consecutive block-pairs of one kind, then merge back."""
    r, pairs, blocks = _block_pairs(w)
    h = len(pairs)
    kinds = [t for _, t, _ in pairs]
    kind = next(k for k in sorted(set(kinds)) if kinds.count(k) >= 3)
    best = None
    idx = [t for t in range(h) if kinds[t] == kind]
    for a, p in enumerate(idx):
        q = idx[(a + 1) % len(idx)]
        # corner r|K inside pair p, corner K|r right after pair q
        c1 = _cut_position(w, blocks, 2 * p)
        c2 = _cut_position(w, blocks, 2 * q + 1)
        cand = tuple(sorted((c1, c2)))
        if best is None or cand < best:
            best = cand
    split = surgery_same(w, best)
    steps.append(TraceStep(f"{rule}:split", w, split))
    merge = _least_merge(split)
    assert merge is not None, split
    out = surgery_merge(split, *merge)
    steps.append(TraceStep(f"{rule}:merge", split, out))
    return out


def _substitute_h3(w: CyclicWord, steps: list, rule: str = "three-letters-h3:substitute") -> CyclicWord:
    """<r^i K^j r^k K^l r^m K'^n>  ->  <r^(i+k) K^(j+l) r^m K'^n>."""
    r, pairs, _ = _block_pairs(w)
    kinds = [t for _, t, _ in pairs]
    lone = next(t for t in range(3) if kinds.count(kinds[t]) == 1)
    (i, K, j), (k, _, l), (m, Kp, n) = (pairs[(lone + 1) % 3], pairs[(lone + 2) % 3], pairs[lone])
    out = word_from_blocks([(r, i + k), (K, j + l), (r, m), (Kp, n)])
    steps.append(TraceStep(rule, w, out))
    return out


def _reduce_four_pairs(w: CyclicWord, steps: list) -> CyclicWord:
    r, pairs, blocks = _block_pairs(w)
    kinds = [t for _, t, _ in pairs]
    counts = sorted(kinds.count(k) for k in set(kinds))
    if counts == [1, 3]:
        return _double_surgery(w, "three-letters-h4", steps)
    # two pairs of each kind
    adjacent = any(kinds[t] == kinds[(t + 1) % 4] for t in range(4))
    if not adjacent:
        # alternating: split at two same-kind pairs, then merge
        best = None
        for p in range(4):
            q = (p + 2) % 4
            c1 = _cut_position(w, blocks, 2 * p)
            c2 = _cut_position(w, blocks, 2 * q + 1)
            cand = tuple(sorted((c1, c2)))
            if best is None or cand < best:
                best = cand
        split = surgery_same(w, best)
        steps.append(TraceStep("three-letters-h4:split", w, split))
        merge = _least_merge(split)
        out = surgery_merge(split, *merge)
        steps.append(TraceStep("three-letters-h4:merge", split, out))
        return out
    # r s r s r S r S: split off r S r S as <r^m S^n>, then substitute
    best = None
    for p in range(4):
        q = (p + 1) % 4
        if kinds[p] == kinds[q]:
            c1 = _cut_position(w, blocks, 2 * p)
            c2 = _cut_position(w, blocks, 2 * q + 1)
            cand = (tuple(sorted((c1, c2))), p)
            if best is None or cand < best:
                best = cand
    split = surgery_same(w, best[0])
    steps.append(TraceStep("three-letters-h4:split", w, split))
    two = [c for c in split if block_decomposition(c).h == 2][0]
    one = [c for c in split if block_decomposition(c).h == 1][0]
    _, two_pairs, _ = _block_pairs(two, r in A_FAMILY)
    (i, K, j), (k, _, l) = two_pairs
    ob = [x for x in block_decomposition(one).blocks]
    m = next(e for x, e in ob if x == r)
    Kp, n = next((x, e) for x, e in ob if x != r)
    out = word_from_blocks([(r, i + k), (K, j + l), (r, m), (Kp, n)])
    steps.append(TraceStep("three-letters-h4:substitute", split, out))
    return out


def reduce_to_two_blockpairs(w: CyclicWord) -> ReductionTrace:
    """Lower the block-pair count to at most two, keeping alpha and beta.

    The final word has at least SI(w) + h(w) - 2 self-intersections.
    """
    h0 = block_decomposition(w).h
    if h0 == 0:
        raise PurePower(f"{w!r} has no block-pairs")
    steps: list = []
    cur = w
    if h0 <= 2:
        steps.append(TraceStep("identity", w, w))
    while block_decomposition(cur).h > 2:
        h = block_decomposition(cur).h
        letters = cur.letter_set()
        if len(letters) == 4:
            pair = next(p for p in find_opposite_corner_pairs(cur) if p.orientation is Orientation.REVERSED)
            nxt = surgery_reversed(cur, pair)
            steps.append(TraceStep("four-letters", cur, nxt))
            cur = nxt
        elif len(letters) == 3:
            if h >= 5:
                cur = _double_surgery(cur, "three-letters", steps)
            elif h == 4:
                cur = _reduce_four_pairs(cur, steps)
            else:
                cur = _substitute_h3(cur, steps)
        else:
            cur = _double_surgery(cur, "two-letters", steps)
    return ReductionTrace(steps, cur, max(h0 - 2, 0))
