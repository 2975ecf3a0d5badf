import itertools

from hypothesis import strategies as st

from selfint.words import ALPHABET, INVERSE, CyclicWord


@st.composite
def reduced_spellings(draw, min_size=1, max_size=12):
    """Cyclically reduced spellings over a, b, A, B."""
    n = draw(st.integers(min_size, max_size))
    text = [draw(st.sampled_from(ALPHABET))]
    for _ in range(n - 1):
        text.append(draw(st.sampled_from([x for x in ALPHABET if x != INVERSE[text[-1]]])))
    if n > 1 and text[-1] == INVERSE[text[0]]:
        text[-1] = next(x for x in ALPHABET if x not in (INVERSE[text[0]], INVERSE[text[-2]]))
    return "".join(text)


def cyclic_words(min_size=1, max_size=12):
    return reduced_spellings(min_size, max_size).map(CyclicWord)


def all_spellings(n):
    """Every cyclically reduced spelling of length n (brute force)."""
    for t in itertools.product(ALPHABET, repeat=n):
        if all(t[(i + 1) % n] != INVERSE[t[i]] for i in range(n)):
            yield "".join(t)
