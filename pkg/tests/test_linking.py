import itertools

import pytest
from hypothesis import given, settings

from conftest import cyclic_words
from selfint.census import enumerate_words
from selfint.errors import CapExceeded, LengthMismatch, NonPrimitiveInput, SameOccurrence
from selfint.linking import (
    PANTS,
    PANTS_ALT,
    TORUS,
    Kind,
    _link_kind,
    classify_pair,
    count_linked_pairs,
    exact_si,
    intersection_number,
    linked_pairs,
    linked_pairs_between,
    multiword_si,
    self_intersection,
    si_result,
    similarly_oriented,
)
from selfint.words import INVERSE, CyclicWord, MultiWord, is_primitive, parse_word

W = parse_word


def test_similarly_oriented_examples():
    assert similarly_oriented("abA", "bAB")
    assert not similarly_oriented("abA", "aAb")
    assert not similarly_oriented("aab", "abA")
    assert not similarly_oriented("abA", "aab")


def test_type_one_list_on_the_torus():
    doubles = ["aa", "bb", "AA", "BB"]
    expected = {frozenset(p) for p in [("aa", "bb"), ("aa", "BB"), ("AA", "bb"), ("AA", "BB")]}
    words = ["".join(t) for t in itertools.product("abAB", repeat=2) if t[1] != INVERSE[t[0]]]
    found = {frozenset((u, v)) for u, v in itertools.combinations(words, 2) if _link_kind(u, v, TORUS)}
    assert found == expected
    assert all(_link_kind(u, v, TORUS) is Kind.I for u, v in itertools.combinations(doubles, 2)
               if frozenset((u, v)) in expected)


def test_classify_examples():
    aab, aaB = W("aab"), W("Baa")
    assert aaB.letters == "aaB" and aaB.read(2, 3) == "Baa"
    assert classify_pair(aab, (0, 3), aaB, (2, 3)).kind is Kind.II
    baa = W("baa")
    assert baa.read(2, 3) == "baa"
    assert classify_pair(aab, (0, 3), baa, (2, 3), same_host=False) is None
    w = W("aabb")
    lp = classify_pair(w, (0, 2), w, (2, 2))
    assert lp.kind is Kind.I and lp.hosts == (w,)


# row word, column word, linked?  ("=" and "N" entries both mean not linked)
TABLE_A = {
    ("a{i1}b", "ba{i1}"): False, ("a{i1}b", "Ba{i1}"): True, ("a{i1}b", "Ba{i}B"): True,
    ("ba{i1}", "a{i1}B"): True, ("ba{i1}", "Ba{i}B"): True,
    ("a{i1}B", "Ba{i1}"): False, ("a{i1}B", "ba{i}b"): True,
    ("Ba{i1}", "ba{i}b"): True,
    ("ba{i}b", "a{i2}"): True, ("ba{i}b", "Ba{i}B"): True,
    ("a{i2}", "Ba{i}B"): True,
    ("a{i1}b", "a{i1}B"): False, ("a{i1}b", "ba{i}b"): False, ("a{i1}b", "a{i2}"): False,
    ("ba{i1}", "Ba{i1}"): False, ("ba{i1}", "a{i2}"): False,
}
TABLE_AB = {
    ("aYb", "bYa"): False, ("bYb", "aYa"): True, ("aYb", "bYb"): False, ("aYb", "aYa"): False,
    ("bYa", "bYb"): False, ("bYa", "aYa"): False,
}


def _spell(template, i):
    t = template.replace("{i1}", "{" + str(i + 1) + "}").replace("{i2}", "{" + str(i + 2) + "}")
    t = t.replace("{i}", "{" + str(i) + "}")
    out, k = "", 0
    while k < len(t):
        if t[k] == "{":
            end = t.index("}", k)
            out += out[-1] * (int(t[k + 1:end]) - 1)
            k = end + 1
        else:
            out += t[k]
            k += 1
    return out


@pytest.mark.parametrize("i", [1, 2, 3])
def test_linking_table_single_letter_interior(i):
    for (row, col), linked in TABLE_A.items():
        u, v = _spell(row, i), _spell(col, i)
        assert len(u) == len(v)
        assert (_link_kind(u, v, TORUS) is not None) == linked, (u, v)
        assert (_link_kind(v, u, TORUS) is not None) == linked, (v, u)


@pytest.mark.parametrize("interior", ["ab", "aab", "abb", "aabbb", "aba", "abba", "aabaa"])
def test_linking_tables_longer_interiors(interior):
    for (row, col), linked in TABLE_AB.items():
        u, v = row.replace("Y", interior), col.replace("Y", interior)
        assert (_link_kind(u, v, TORUS) is not None) == linked, (u, v)


def test_classify_errors():
    w = W("aabb")
    with pytest.raises(LengthMismatch):
        classify_pair(w, (0, 2), w, (1, 3))
    with pytest.raises(LengthMismatch):
        classify_pair(w, (0, 1), w, (1, 1))
    with pytest.raises(SameOccurrence):
        classify_pair(w, (1, 3), w, (5, 3))


@settings(max_examples=60, deadline=None)
@given(cyclic_words(2, 8))
def test_classify_is_symmetric(w):
    n = len(w)
    for length in range(2, n + 2):
        for s1, s2 in itertools.combinations(range(n), 2):
            a = classify_pair(w, (s1, length), w, (s2, length))
            b = classify_pair(w, (s2, length), w, (s1, length))
            assert (a is None) == (b is None)
            if a is not None:
                assert a.kind == b.kind


@pytest.mark.parametrize("text, si", [
    ("baBBAba", 3), ("baBBBaa", 6), ("aabbb", 2), ("abAB", 0), ("a", 0), ("aabb", 1),
])
def test_self_intersection_examples(text, si):
    assert self_intersection(W(text)) == si


def test_pure_powers_and_bounds():
    assert si_result(W("aaaa")) == (3, True, "pure-power")
    r = si_result(W("abab"))
    assert (r.value, r.exact, r.reason) == (1, False, "bound")
    assert r.to_json() == {"si": 1, "exact": False, "reason": "bound"}
    assert exact_si(W("abab")) is None


def _brute(w, order=TORUS):
    pairs = list(linked_pairs(w, order))
    # the walk goes to length L + 2; nothing beyond L + 1 ever links
    assert all(lp.first.length <= len(w) + 1 for lp in pairs), w
    return len(pairs)


@pytest.mark.parametrize("order", [TORUS, PANTS, PANTS_ALT], ids=str)
@pytest.mark.parametrize("n", range(1, 8))
def test_kernel_matches_brute_force(order, n):
    for w in enumerate_words(n, primitive_only=True):
        assert count_linked_pairs(w, order) == _brute(w, order), w


@pytest.mark.parametrize("n", [8, 9])
def test_kernel_matches_brute_force_longer(n):
    words = list(enumerate_words(n, primitive_only=True))
    step = 1 if n == 8 else 7
    for w in words[::step]:
        assert count_linked_pairs(w) == _brute(w), w


def _corner_shape(u):
    # r s ... s R with r, s distinct
    return len(u) >= 4 and u[0] != u[1] and u[-2] == u[1] and u[-1] == INVERSE[u[0]]


def test_corner_shape_is_never_linked():
    for n in range(1, 9):
        for w in enumerate_words(n, primitive_only=True):
            for lp in linked_pairs(w):
                assert not _corner_shape(w.read(*lp.first)), (w, lp)
                assert not _corner_shape(w.read(*lp.second)), (w, lp)


@pytest.mark.parametrize("v, w, value", [
    ("ab", "aB", 2), ("aab", "aBB", 5), ("ababb", "aB", 5), ("a", "b", 1),
])
def test_intersection_examples(v, w, value):
    assert intersection_number(W(v), W(w)) == value
    assert intersection_number(W(w), W(v)) == value
    assert sum(1 for _ in linked_pairs_between(W(v), W(w))) == value


def test_intersection_errors():
    with pytest.raises(NonPrimitiveInput):
        intersection_number(W("abab"), W("aB"))
    with pytest.raises(CapExceeded):
        intersection_number(W("aabab"), W("aabaB"), cap=1)
    with pytest.raises(CapExceeded):
        list(linked_pairs_between(W("aabab"), W("aabaB"), cap=1))


def test_intersection_with_itself_counts_ordered_pairs():
    from selfint.words import invert
    for n in range(1, 8):
        for w in enumerate_words(n, primitive_only=True):
            s = self_intersection(w)
            assert intersection_number(w, w) == 2 * s
            assert intersection_number(w, invert(w)) == 2 * s


@settings(max_examples=80, deadline=None)
@given(cyclic_words(1, 6), cyclic_words(1, 6))
def test_intersection_kernel_matches_brute_force(v, w):
    if not (is_primitive(v) and is_primitive(w)):
        return
    try:
        fast = intersection_number(v, w)
    except CapExceeded:
        with pytest.raises(CapExceeded):
            list(linked_pairs_between(v, w))
        return
    assert fast == sum(1 for _ in linked_pairs_between(v, w))
    assert fast == intersection_number(w, v)


def test_multiword_si():
    assert multiword_si(MultiWord(["ab", "aB"])) == 2
    assert multiword_si(MultiWord(["a", "b"])) == 1
    assert multiword_si(MultiWord(["aabbb"])) == 2
    with pytest.raises(NonPrimitiveInput):
        multiword_si(MultiWord(["abab", "a"]))
    assert exact_si(MultiWord(["ab", "ab"])) is None
    assert exact_si(MultiWord(["ab", "aB"])) == 2


def test_si_is_bounded_by_letter_counts():
    from selfint.words import block_decomposition
    for n in range(2, 12):
        for w in enumerate_words(n, primitive_only=True):
            bd = block_decomposition(w)
            s = self_intersection(w)
            if bd.h == 0:
                continue
            assert s <= (bd.alpha - 1) * (bd.beta - 1)
            if bd.h >= 2:
                assert s <= (bd.alpha - 1) * (bd.beta - 1) - bd.h + 2


ROTATE = str.maketrans("abAB", "bAB" + "a")
REFLECT = str.maketrans("abAB", "baBA")


@pytest.mark.parametrize("n", range(1, 8))
def test_ring_symmetries_preserve_si(n):
    for w in enumerate_words(n):
        base = si_result(w)
        for tr in (ROTATE, REFLECT):
            assert si_result(CyclicWord(w.letters.translate(tr))) == base, w
        assert si_result(CyclicWord(w.letters[::-1].swapcase())) == base, w
