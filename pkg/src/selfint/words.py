"""Reduced cyclic words over the alphabet a, b, A, B.

Letters are ordered a < b < A < B.  A :class:`CyclicWord` always stores the
least rotation under that order, so two words compare equal exactly when
they spell the same cyclic class.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, total_ordering
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyWord, IllegalCharacter, NotCyclicallyReduced

ALPHABET = "abAB"
LETTER_CODE = {"a": 0, "b": 1, "A": 2, "B": 3}
# code ^ 2 flips a <-> A and b <-> B
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
A_FAMILY = frozenset("aA")
B_FAMILY = frozenset("bB")


def inverse_letter(x: str) -> str:
    return INVERSE[x]


def inverse_linear(u: str) -> str:
    """Inverse of a linear word: reverse and swap case."""
    return u[::-1].swapcase()


def family(x: str) -> str:
    return "a" if x in A_FAMILY else "b"


def least_rotation(codes: Sequence[int]) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(codes) * 2
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:  # i == -1
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % len(codes)


def canonical_rotation(text: str) -> str:
    k = least_rotation([LETTER_CODE[c] for c in text])
    return text[k:] + text[:k]


def is_reduced_linear(text: str) -> bool:
    return all(text[i + 1] != INVERSE[text[i]] for i in range(len(text) - 1))


def _check_text(text: str) -> None:
    if not text:
        raise EmptyWord("empty word")
    for ch in text:
        if ch not in LETTER_CODE:
            raise IllegalCharacter(f"illegal character {ch!r} in {text!r}")
    n = len(text)
    for i in range(n):
        if text[(i + 1) % n] == INVERSE[text[i]]:
            where = "wrap-around" if i == n - 1 else f"position {i}"
            raise NotCyclicallyReduced(
                f"{text!r} cancels at {where}: {text[i]}{text[(i + 1) % n]}"
            )


@total_ordering
@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word, stored as its least rotation.

    Words sort by length, then lexicographically under a < b < A < B.
    """

    letters: str

    def __post_init__(self):
        _check_text(self.letters)
        canon = canonical_rotation(self.letters)
        if canon != self.letters:
            object.__setattr__(self, "letters", canon)

    @property
    def canonical(self) -> bool:
        return True

    def __len__(self) -> int:
        return len(self.letters)

    def __lt__(self, other: "CyclicWord") -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return (len(self), self.codes()) < (len(other), other.codes())

    def __str__(self) -> str:
        return self.letters

    def __repr__(self) -> str:
        return f"<{self.letters}>"

    def __getitem__(self, i: int) -> str:
        return self.letters[i % len(self.letters)]

    def codes(self) -> list[int]:
        return [LETTER_CODE[c] for c in self.letters]

    def read(self, start: int, length: int) -> str:
        """Linear subword of ``length`` letters read cyclically from ``start``."""
        n = len(self.letters)
        reps = (start % n + length) // n + 1
        s = start % n
        return (self.letters * reps)[s:s + length]

    @cached_property
    def alpha(self) -> int:
        return sum(1 for c in self.letters if c in A_FAMILY)

    @cached_property
    def beta(self) -> int:
        return len(self.letters) - self.alpha

    @property
    def h(self) -> int:
        return block_decomposition(self).h

    def letter_set(self) -> frozenset:
        return frozenset(self.letters)


class BlockDecomposition(NamedTuple):
    blocks: tuple  # of (letter, exponent)
    h: int
    alpha: int
    beta: int


class PowerDecomposition(NamedTuple):
    root: CyclicWord
    exponent: int


def parse_word(text: str) -> CyclicWord:
    """Parse a cyclically reduced spelling into its canonical cyclic word."""
    return CyclicWord(text.strip())


def cyclic_reduce(text: str) -> str:
    """Freely and cyclically reduce an arbitrary spelling (CLI convenience)."""
    stack: list[str] = []
    for ch in text:
        if ch not in LETTER_CODE:
            raise IllegalCharacter(f"illegal character {ch!r} in {text!r}")
        if stack and stack[-1] == INVERSE[ch]:
            stack.pop()
        else:
            stack.append(ch)
    i, j = 0, len(stack) - 1
    while i < j and stack[j] == INVERSE[stack[i]]:
        i += 1
        j -= 1
    return "".join(stack[i:j + 1])


def runs(text: str) -> list[tuple[str, int]]:
    """Maximal runs of a linear word."""
    out: list[tuple[str, int]] = []
    for ch in text:
        if out and out[-1][0] == ch:
            out[-1] = (ch, out[-1][1] + 1)
        else:
            out.append((ch, 1))
    return out


def block_decomposition(w: CyclicWord) -> BlockDecomposition:
    text = w.letters
    if len(set(text)) == 1:
        blocks = ((text[0], len(text)),)
        h = 0
    else:
        # the least rotation of a word with two letters starts at a run boundary
        assert text[-1] != text[0]
        blocks = tuple(runs(text))
        h = len(blocks) // 2
    return BlockDecomposition(blocks, h, w.alpha, w.beta)


def power_decomposition(w: CyclicWord) -> PowerDecomposition:
    text = w.letters
    n = len(text)
    for p in range(1, n + 1):
        if n % p == 0 and text[:p] * (n // p) == text:
            return PowerDecomposition(CyclicWord(text[:p]), n // p)
    raise AssertionError("unreachable")


def is_primitive(w: CyclicWord) -> bool:
    return power_decomposition(w).exponent == 1


def is_pure_power(w: CyclicWord) -> bool:
    return len(w) > 1 and len(set(w.letters)) == 1


def invert(w: CyclicWord) -> CyclicWord:
    return CyclicWord(inverse_linear(w.letters))


def word_from_blocks(blocks: Iterable[tuple[str, int]]) -> CyclicWord:
    return CyclicWord("".join(x * e for x, e in blocks))


@dataclass(frozen=True)
class MultiWord:
    """An ordered list of cyclic words modelling a multi-component curve."""

    components: tuple

    def __init__(self, components: Iterable):
        comps = tuple(c if isinstance(c, CyclicWord) else parse_word(c) for c in components)
        if not comps:
            raise EmptyWord("a multi-word needs at least one component")
        object.__setattr__(self, "components", comps)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i: int) -> CyclicWord:
        return self.components[i]

    def __repr__(self) -> str:
        return "[" + ", ".join(repr(c) for c in self.components) + "]"

    @property
    def alpha(self) -> int:
        return sum(c.alpha for c in self.components)

    @property
    def beta(self) -> int:
        return sum(c.beta for c in self.components)

    @property
    def h(self) -> int:
        return sum(c.h for c in self.components)

    def texts(self) -> list[str]:
        return [c.letters for c in self.components]
