"""Linked pairs of subwords and the intersection counts they determine.

Two routes compute the same numbers:

* :func:`linked_pairs` walks every pair of equal-length occurrences and asks
  :func:`classify_pair`.  It is a literal transcription of the definition and
  is slow (quartic in the length).
* :func:`self_intersection` and :func:`intersection_number` go through the
  compiled kernels, which find each candidate pair from its two start letters
  and the longest common extension, so every pair is visited once.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional

import numpy as np

from . import _kernels
from .errors import CapExceeded, LengthMismatch, NonPrimitiveInput, SameOccurrence
from .words import (
    INVERSE,
    LETTER_CODE,
    CyclicWord,
    MultiWord,
    inverse_linear,
    is_pure_power,
    power_decomposition,
)


@dataclass(frozen=True)
class SurfaceOrder:
    """Cyclic arrangement of the four letter directions around the basepoint."""

    ring: tuple
    name: str = "custom"

    def __post_init__(self):
        if sorted(self.ring) != sorted("abAB"):
            raise ValueError(f"ring must be a permutation of a, b, A, B: {self.ring!r}")
        object.__setattr__(self, "ring", tuple(self.ring))

    @property
    def positions(self) -> np.ndarray:
        pos = np.zeros(4, dtype=np.int64)
        for i, x in enumerate(self.ring):
            pos[LETTER_CODE[x]] = i
        return pos

    def index(self, x: str) -> int:
        return self.ring.index(x)

    def __str__(self) -> str:
        return f"{self.name}({''.join(self.ring)})"


TORUS = SurfaceOrder(("a", "b", "A", "B"), "torus")
PANTS = SurfaceOrder(("a", "A", "b", "B"), "pants")
# the other planar arrangement; relabelling b <-> B maps one onto the other
PANTS_ALT = SurfaceOrder(("a", "A", "B", "b"), "pants")


class Occurrence(NamedTuple):
    start: int
    length: int


class Kind(str, Enum):
    I = "I"
    II = "II"
    III = "III"


class LinkedPair(NamedTuple):
    first: Occurrence
    second: Occurrence
    kind: Kind
    hosts: tuple


def _orientation(t: tuple, order: SurfaceOrder) -> int:
    x, y, z = t
    if x == y or y == z or x == z:
        return 0
    i = order.index(x)
    j = (order.index(y) - i) % 4
    k = (order.index(z) - i) % 4
    return 1 if j < k else -1


def similarly_oriented(t1: tuple, t2: tuple, order: SurfaceOrder = TORUS) -> bool:
    """True iff both triples are three distinct letters turning the same way."""
    o = _orientation(tuple(t1), order)
    return o != 0 and o == _orientation(tuple(t2), order)


def chords_interleave(a: tuple, b: tuple, order: SurfaceOrder = TORUS) -> bool:
    pts = [*a, *b]
    if len(set(pts)) < 4:
        return False
    lo = order.index(a[0])
    hi = (order.index(a[1]) - lo) % 4
    inside = [(order.index(x) - lo) % 4 < hi for x in b]
    return inside[0] != inside[1]


def _link_kind(u1: str, u2: str, order: SurfaceOrder) -> Optional[Kind]:
    p1, p2 = u1[0], u1[-1]
    q1, q2 = u2[0], u2[-1]
    P1, Q1 = INVERSE[p1], INVERSE[q1]
    if len(u1) == 2:
        if chords_interleave((P1, p2), (Q1, q2), order):
            return Kind.I
        return None
    y1, y2 = u1[1:-1], u2[1:-1]
    x1, X2 = y1[0], INVERSE[y1[-1]]
    if y1 == y2:
        if similarly_oriented((P1, Q1, x1), (p2, q2, X2), order):
            return Kind.II
    elif y2 == inverse_linear(y1):
        if similarly_oriented((P1, q2, x1), (p2, Q1, X2), order):
            return Kind.III
    return None


def classify_pair(
    host1: CyclicWord,
    o1: Occurrence,
    host2: CyclicWord,
    o2: Occurrence,
    order: SurfaceOrder = TORUS,
    same_host: Optional[bool] = None,
) -> Optional[LinkedPair]:
    """Decide whether two positioned subwords form a linked pair.

    ``same_host`` defaults to ``host1 == host2``; pass ``False`` to treat two
    equal words as separate components.
    """
    o1, o2 = Occurrence(*o1), Occurrence(*o2)
    if o1.length != o2.length:
        raise LengthMismatch(f"occurrence lengths differ: {o1.length} != {o2.length}")
    if o1.length < 2:
        raise LengthMismatch("occurrences must have length at least 2")
    if same_host is None:
        same_host = host1 == host2
    if same_host and o1.start % len(host1) == o2.start % len(host2):
        raise SameOccurrence(f"{o1} and {o2} are the same occurrence")
    kind = _link_kind(host1.read(*o1), host2.read(*o2), order)
    if kind is None:
        return None
    hosts = (host1,) if same_host else (host1, host2)
    return LinkedPair(o1, o2, kind, hosts)


def linked_pairs(w: CyclicWord, order: SurfaceOrder = TORUS, max_length: Optional[int] = None) -> Iterator[LinkedPair]:
    """Every unordered linked pair of ``w`` with length up to ``max_length``
    (default ``len(w) + 2``), found by brute force."""
    n = len(w)
    top = n + 2 if max_length is None else max_length
    for length in range(2, top + 1):
        for s1 in range(n):
            for s2 in range(s1 + 1, n):
                lp = classify_pair(w, (s1, length), w, (s2, length), order, same_host=True)
                if lp is not None:
                    yield lp


def linked_pairs_between(v: CyclicWord, w: CyclicWord, order: SurfaceOrder = TORUS,
                         cap: Optional[int] = None) -> Iterator[LinkedPair]:
    """Ordered linked pairs (occurrence in ``v``, occurrence in ``w``), brute force,
    with occurrences read from the periodic extensions."""
    cap = len(v) + len(w) if cap is None else cap
    for length in range(2, cap + 3):
        for s1 in range(len(v)):
            for s2 in range(len(w)):
                lp = classify_pair(v, (s1, length), w, (s2, length), order, same_host=False)
                if lp is not None:
                    if length - 2 >= cap:
                        raise CapExceeded(f"linked pair at interior length {cap} for {v!r}, {w!r}")
                    yield lp


def _codes(w: CyclicWord) -> np.ndarray:
    return np.array(w.codes(), dtype=np.int8)


def count_linked_pairs(w: CyclicWord, order: SurfaceOrder = TORUS) -> int:
    c = _kernels.si_linked_pairs(_codes(w), len(w), order.positions)
    if c < 0:
        raise AssertionError(f"odd type-III count for {w!r}")
    return int(c)


class SIResult(NamedTuple):
    value: int
    exact: bool
    reason: str  # "primitive", "pure-power" or "bound"

    def to_json(self) -> dict:
        return {"si": self.value, "exact": self.exact, "reason": self.reason}


def si_result(w: CyclicWord, order: SurfaceOrder = TORUS) -> SIResult:
    """Self-intersection number together with an exact/bound tag.

    Pure powers r^k have k - 1 self-intersections.  Other proper powers u^k
    get the upper bound (k - 1) + number of linked pairs.
    """
    if is_pure_power(w):
        return SIResult(len(w) - 1, True, "pure-power")
    k = power_decomposition(w).exponent
    lp = count_linked_pairs(w, order)
    if k == 1:
        return SIResult(lp, True, "primitive")
    return SIResult(k - 1 + lp, False, "bound")


def self_intersection(w: CyclicWord, order: SurfaceOrder = TORUS) -> int:
    return si_result(w, order).value


def intersection_number(v: CyclicWord, w: CyclicWord, order: SurfaceOrder = TORUS,
                        cap: Optional[int] = None) -> int:
    """Minimal number of crossings between curves representing ``v`` and ``w``.

    Common interiors are followed for at most ``cap`` letters (default
    ``len(v) + len(w)``, which primitive inputs never reach).
    """
    for x in (v, w):
        if power_decomposition(x).exponent != 1:
            raise NonPrimitiveInput(f"{x!r} is a proper power")
    cap = len(v) + len(w) if cap is None else cap
    c = _kernels.in_linked_pairs(_codes(v), len(v), _codes(w), len(w), order.positions, cap)
    if c < 0:
        raise CapExceeded(f"common interior reached {cap} letters for {v!r}, {w!r}")
    return int(c)


def multiword_si(mw: MultiWord, order: SurfaceOrder = TORUS) -> int:
    comps = list(mw)
    for c in comps:
        if power_decomposition(c).exponent != 1:
            raise NonPrimitiveInput(f"component {c!r} is a proper power")
    total = sum(self_intersection(c, order) for c in comps)
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            total += intersection_number(comps[i], comps[j], order)
    return total


def si_exactly_computable(x) -> bool:
    """Whether :func:`si_result` / :func:`multiword_si` give exact values for ``x``."""
    if isinstance(x, CyclicWord):
        return is_pure_power(x) or power_decomposition(x).exponent == 1
    comps = list(x)
    if any(power_decomposition(c).exponent != 1 for c in comps):
        return False
    inverses = [inverse_linear(c.letters) for c in comps]
    for i in range(len(comps)):
        for j in range(i + 1, len(comps)):
            if comps[i] == comps[j] or comps[i] == CyclicWord(inverses[j]):
                return False
    return True


def exact_si(x, order: SurfaceOrder = TORUS) -> Optional[int]:
    """Exact SI of a word or multi-word, or ``None`` when only a bound exists."""
    if isinstance(x, CyclicWord):
        r = si_result(x, order)
        return r.value if r.exact else None
    if len(x) == 1:
        return exact_si(x[0], order)
    if not si_exactly_computable(x):
        return None
    try:
        return multiword_si(x, order)
    except CapExceeded:
        return None
