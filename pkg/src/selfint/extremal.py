"""Closed-form counts and extremal word families, and bound checks."""
from __future__ import annotations

from math import isqrt
from typing import NamedTuple

from .errors import NonPrimitiveInput, UnknownShape, UnvalidatedLength
from .linking import TORUS, SurfaceOrder, si_result
from .words import INVERSE, CyclicWord, block_decomposition, is_pure_power

R_LETTERS = ("a", "A")
S_LETTERS = ("b", "B")
PANTS_VALIDATED_MAX = 15


def _torus_max(L: int) -> int:
    if L % 2 == 0:
        return (L - 2) ** 2 // 4
    return (L - 1) * (L - 3) // 4


def _pants_max(L: int) -> int:
    if L % 2:
        return (L * L - 1) // 4
    if L == 2:
        return 1
    if L % 4 == 0:
        return L * L // 4 - 1
    return L * L // 4 - 2


def max_si(L: int, surface: SurfaceOrder | str = TORUS, force: bool = False) -> int:
    """Largest SI among primitive classes of length ``L``."""
    if L < 1:
        raise ValueError("L must be at least 1")
    name = surface if isinstance(surface, str) else surface.name
    if name == "pants":
        if L > PANTS_VALIDATED_MAX and not force:
            raise UnvalidatedLength(f"pants maximum is validated only for L <= {PANTS_VALIDATED_MAX}")
        return _pants_max(L)
    if L <= 3:
        return 0
    return _torus_max(L)


def count_maximal(L: int) -> int:
    if L < 4:
        raise ValueError("formula holds for L >= 4")
    if L % 2 == 0:
        return (L - 2) ** 2 + 4
    return 2 * (L - 1) * (L - 3) + 8


def count_submaximal(L: int) -> int:
    if L < 4:
        raise ValueError("formula holds for L >= 4")
    if L % 2:
        return (L - 1) * (L - 3)
    return 5 * (L - 2) ** 2 // 2


def _both_ways(r: str, s: str):
    # every shape also occurs with the roles of r and s swapped
    yield r, s
    yield s, r


def _pairs():
    for r in R_LETTERS:
        for s in S_LETTERS:
            yield r, s


def _two_block(m: int, n: int) -> set:
    out = set()
    for r, s in _pairs():
        for x, y in _both_ways(r, s):
            out.add(CyclicWord(x * m + y * n))
    return out


def _rsrS(first: int, second: int) -> set:
    """All <r^i s^j r^k S^l> with i + k = first, j + l = second, both orientations."""
    out = set()
    for r, s in _pairs():
        for x, y in _both_ways(r, s):
            for i in range(1, first):
                for j in range(1, second):
                    out.add(CyclicWord(x * i + y * j + x * (first - i) + INVERSE[y] * (second - j)))
    return out


def _rsRS(first: int, second: int) -> set:
    out = set()
    for r, s in _pairs():
        for i in range(1, first):
            for j in range(1, second):
                out.add(CyclicWord(r * i + s * j + INVERSE[r] * (first - i) + INVERSE[s] * (second - j)))
    return out


def maximal_words(L: int) -> list:
    """Torus words of length ``L`` with the largest SI, from their block shapes."""
    if L < 4:
        raise ValueError("maximal word shapes are listed for L >= 4")
    if L % 2 == 0:
        h = L // 2
        words = _two_block(h, h) | _rsrS(h, h)
    else:
        big, small = (L + 1) // 2, (L - 1) // 2
        words = _two_block(big, small) | _rsrS(big, small) | _rsrS(small, big)
    return sorted(words)


def submaximal_words(L: int) -> list:
    """Torus words of length ``L`` whose SI is one below the maximum."""
    if L < 4:
        raise ValueError("sub-maximal word shapes are listed for L >= 4")
    if L % 2:
        big, small = (L + 1) // 2, (L - 1) // 2
        words = _rsRS(small, big) | _rsRS(big, small)
    else:
        h = L // 2
        words = _two_block(h - 1, h + 1) | _rsRS(h, h) | _rsrS(h - 1, h + 1) | _rsrS(h + 1, h - 1)
    return sorted(words)


def pants_maximal_words(L: int) -> list:
    if L % 2 == 0:
        raise ValueError("no closed form for even pants lengths")
    n = (L - 1) // 2
    return sorted({CyclicWord(r + (r + s) * n) for r, s in (("a", "B"), ("B", "a"), ("A", "b"), ("b", "A"))})


def min_length_for_si(k: int) -> int:
    """Smallest integer >= 2*sqrt(k) + 2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    # L >= 2 + 2 sqrt(k)  <=>  (L - 2)^2 >= 4k
    root = isqrt(4 * k)
    if root * root < 4 * k:
        root += 1
    return root + 2


def min_length_by_search(k: int, surface: SurfaceOrder = TORUS) -> int:
    L = 1
    while max_si(L, surface) < k:
        L += 1
    return L


class ClosedForm(NamedTuple):
    value: int
    exact: bool


SHAPES = ("ab", "abab", "abaB", "abAB", "ababaB", "ab|aB", "abab|aB")


def shape_word(shape: str, exps: tuple):
    """The word (or pair of words) spelled by a block shape and its exponents."""
    letters = shape.replace("|", "")
    if shape not in SHAPES or len(exps) != len(letters) or min(exps) < 1:
        raise UnknownShape(f"unknown shape {shape!r} with exponents {exps!r}")
    spelled = [x * e for x, e in zip(letters, exps)]
    if "|" in shape:
        cut = shape.index("|")
        return CyclicWord("".join(spelled[:cut])), CyclicWord("".join(spelled[cut:]))
    return CyclicWord("".join(spelled))


def closed_form_si(shape: str, exps: tuple) -> ClosedForm:
    """Self- or intersection number of a block shape from its closed formula.

    ``abab`` with ``i == k`` and ``j == l`` is a proper power; only an upper
    bound is known there, except that the value is 1 when ``i`` or ``j`` is 1.
    """
    exps = tuple(exps)
    shape_word(shape, exps)  # validates
    if shape == "ab":
        i, j = exps
        return ClosedForm((i - 1) * (j - 1), True)
    if shape == "abab":
        i, j, k, l = exps
        if i == k and j == l:
            if i == 1 or j == 1:
                return ClosedForm(1, True)
            return ClosedForm((i + k - 2) * (j + l - 2) + 1, False)
        return ClosedForm((i + k - 2) * (j + l - 2) + abs(i - k) + abs(j - l) - 1, True)
    if shape == "abaB":
        i, j, k, l = exps
        return ClosedForm((i + k - 1) * (j + l - 1), True)
    if shape == "abAB":
        i, j, k, l = exps
        return ClosedForm((i + k - 1) * (j + l - 1) - 1, True)
    if shape == "ababaB":
        i, j, k, l, m, n = exps
        return ClosedForm((i + k + m - 1) * (j + l + n - 1) - 2 * (k + min(j, l) - 1), True)
    if shape == "ab|aB":
        i, j, m, n = exps
        return ClosedForm(i * n + m * j, True)
    i, j, k, l, m, n = exps  # abab|aB
    return ClosedForm((i + k) * n + m * (j + l), True)


class BoundReport(NamedTuple):
    word: CyclicWord
    si: int
    bound: int
    slack: int
    bound_kind: str  # "blockpair", "general" or "length"
    exception: bool  # pure power above the length bound


def bound_report(w: CyclicWord, order: SurfaceOrder = TORUS) -> BoundReport:
    """Exact SI of ``w`` against the tightest applicable torus upper bound."""
    r = si_result(w, order)
    if not r.exact:
        raise NonPrimitiveInput(f"{w!r} is a proper power that is not a pure power")
    L = len(w)
    length_bound = max_si(L)
    if is_pure_power(w):
        return BoundReport(w, r.value, length_bound, length_bound - r.value, "length",
                           r.value > length_bound)
    bd = block_decomposition(w)
    general = (bd.alpha - 1) * (bd.beta - 1)
    candidates = []
    if bd.h >= 2:
        candidates.append((general - bd.h + 2, 0, "blockpair"))
    candidates.append((general, 1, "general"))
    candidates.append((length_bound, 2, "length"))
    bound, _, kind = min(candidates)
    return BoundReport(w, r.value, bound, bound - r.value, kind, False)


def combined_count(L: int) -> int:
    """Maximal plus sub-maximal classes of length ``L``, as a polynomial."""
    if L % 2:
        return 3 * L * L - 12 * L + 17
    return 7 * L * L // 2 - 14 * L + 18

