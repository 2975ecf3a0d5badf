import random

import pytest
from hypothesis import given, settings

from conftest import cyclic_words
from selfint.census import enumerate_words
from selfint.errors import NotOppositeCorners, PurePower, WrongOrientation
from selfint.linking import multiword_si, self_intersection
from selfint.surgery import (
    Orientation,
    SiteKind,
    find_opposite_corner_pairs,
    reduce_to_two_blockpairs,
    sites,
    surgery_merge,
    surgery_reversed,
    surgery_same,
)
from selfint.verify import check_surgeries
from selfint.words import CyclicWord, MultiWord, block_decomposition, invert, parse_word

W = parse_word


def _pairs(w, orientation):
    return {(p.site1.position, p.site2.position) for p in find_opposite_corner_pairs(w)
            if p.orientation is orientation}


def test_sites():
    kinds = [s.kind for s in sites(W("aabb"))]
    assert kinds == [SiteKind.TRANSVERSAL, SiteKind.CORNER, SiteKind.TRANSVERSAL, SiteKind.CORNER]


def test_opposite_corner_examples():
    assert (0, 2) in _pairs(W("abAB"), Orientation.REVERSED)
    assert (1, 3) in _pairs(W("aabb"), Orientation.SAME)
    assert _pairs(W("ab"), Orientation.SAME) == {(0, 1)}
    assert find_opposite_corner_pairs(W("aaa")) == []


def test_reversed_surgery_on_the_figure_word():
    w = W("baBBAba")
    # b|a at the end of the spelling and the B|A corner
    out = surgery_reversed(w, (4, 6))
    assert (w[4], w[5]) == ("B", "A") and (w[6], w[7]) == ("b", "a")
    assert out == W("bbbABAA")
    assert self_intersection(out) == 6 >= self_intersection(w) + 1
    assert out == invert(W("baBBBaa"))


def test_reversed_surgery_on_abAB():
    w = W("abAB")
    out = surgery_reversed(w, (0, 2))
    assert out.h == 1 and (out.alpha, out.beta) == (2, 2)
    assert self_intersection(out) == 1


def test_orientation_is_checked():
    with pytest.raises(WrongOrientation):
        surgery_reversed(W("aabb"), (1, 3))
    with pytest.raises(WrongOrientation):
        surgery_same(W("abAB"), (0, 2))


def test_same_surgery_on_three_letter_word():
    w = W("abababaB")
    out = surgery_same(w, (0, 3))
    # <x r|s y s|r z> -> [<x r r z>, <s y s>]
    assert out.texts() == ["aabaB", "abb"]
    assert (out.alpha, out.beta, out.h) == (4, 4, 3)
    assert multiword_si(out) >= self_intersection(w) + 1


def test_same_surgery_split_totals():
    w = W("aabab")
    for i, j in _pairs(w, Orientation.SAME):
        out = surgery_same(w, (i, j))
        assert len(out) == 2
        assert (out.alpha, out.beta) == (3, 2)
        assert out.h == w.h - 1


def test_merge_examples():
    mw = MultiWord(["abaB", "ab"])
    # b|a in the first component, a|b in the second
    out = surgery_merge(mw, 1, 0)
    assert (out.alpha, out.beta, out.h) == (3, 3, 2)
    assert self_intersection(out) >= multiword_si(mw) + 1
    # reversed corners: the second component is inverted first
    mw = MultiWord(["ab", "AB"])
    flipped = MultiWord([mw[0], invert(mw[1])])
    corner = next(i for i in range(2) if (flipped[1][i], flipped[1][i + 1]) == ("b", "a"))
    assert surgery_merge(mw, 0, 0) == surgery_merge(flipped, 0, corner)
    with pytest.raises(NotOppositeCorners):
        surgery_merge(MultiWord(["aab", "aaB"]), 1, 0)


def test_split_then_merge_round_trip():
    rng = random.Random(7)
    words = [w for w in enumerate_words(9) if _pairs(w, Orientation.SAME)]
    for w in rng.sample(words, 200):
        i, j = min(_pairs(w, Orientation.SAME))
        split = surgery_same(w, (i, j))
        for a in range(len(split[0])):
            for b in range(len(split[1])):
                try:
                    m = surgery_merge(split, a, b)
                except NotOppositeCorners:
                    continue
                assert (m.alpha, m.beta) == (w.alpha, w.beta)
                assert m.h == w.h - 2


@pytest.mark.parametrize("n", range(1, 9))
def test_invariants_on_every_word(n):
    for w in enumerate_words(n):
        assert check_surgeries(w) == []


@settings(max_examples=200, deadline=None)
@given(cyclic_words(2, 12))
def test_invariants_on_random_words(w):
    assert check_surgeries(w) == []


def test_reduce_examples():
    tr = reduce_to_two_blockpairs(W("abababaB"))
    f = tr.final
    bd = block_decomposition(f)
    assert (f.alpha, f.beta) == (4, 4) and bd.h == 2
    assert sorted(x for x, _ in bd.blocks) == ["B", "a", "a", "b"]
    assert tr.guaranteed_gain == 2
    assert self_intersection(f) >= self_intersection(W("abababaB")) + 2

    tr = reduce_to_two_blockpairs(W("ababab"))
    assert tr.final.h <= 2 and (tr.final.alpha, tr.final.beta) == (3, 3)

    tr = reduce_to_two_blockpairs(W("abAB"))
    assert [s.rule for s in tr.steps] == ["identity"] and tr.final == W("abAB")
    assert tr.guaranteed_gain == 0

    with pytest.raises(PurePower):
        reduce_to_two_blockpairs(W("aaa"))


@pytest.mark.parametrize("text, rule", [
    ("aabAbbaBBAbaab", "four-letters"),
    ("abababababaB", "three-letters:split"),
    ("abaBabaB", "three-letters-h4:split"),
    ("ababaB", "three-letters-h3:substitute"),
    ("ababababb", "two-letters:split"),
])
def test_reduce_follows_case_analysis(text, rule):
    tr = reduce_to_two_blockpairs(W(text))
    assert tr.steps[0].rule == rule
    prev = W(text).h
    for step in tr.steps:
        after = step.after
        h = after.h
        assert (after.alpha, after.beta) == (W(text).alpha, W(text).beta)
        assert prev - h == 1, step
        prev = h
    assert tr.final.h <= 2


def test_reduce_trace_json_and_determinism():
    a = reduce_to_two_blockpairs(W("abababababaB")).to_json()
    b = reduce_to_two_blockpairs(W("abababababaB")).to_json()
    assert a == b
    assert a[0]["rule"] == "three-letters:split" and isinstance(a[0]["after"], list)


@pytest.mark.parametrize("shape", ["ababAB", "abAbaB", "abaBAB", "abABaB"])
def test_four_letter_block_shapes_have_slack_two(shape):
    import itertools
    for exps in itertools.product(range(1, 4), repeat=6):
        w = CyclicWord("".join(x * e for x, e in zip(shape, exps)))
        assert self_intersection(w) <= (w.alpha - 1) * (w.beta - 1) - 2
