"""Verification suites behind ``selfint verify``.

Each suite returns a list of failure messages; an empty list is a pass.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Optional

from .census import (
    PANTS_VALIDATED_MAX,
    enumerate_words,
    pants_extremes,
    resolve_pants_order,
    si_histogram,
    words_with_si,
)
from .errors import NonPrimitiveInput
from .extremal import (
    SHAPES,
    bound_report,
    closed_form_si,
    count_maximal,
    count_submaximal,
    max_si,
    maximal_words,
    min_length_for_si,
    pants_maximal_words,
    shape_word,
    submaximal_words,
)
from .linking import exact_si, intersection_number, si_result
from .reference import TORUS_COUNTS
from .surgery import (
    Orientation,
    find_opposite_corner_pairs,
    reduce_to_two_blockpairs,
    surgery_merge,
    surgery_reversed,
    surgery_same,
)
from .words import ALPHABET, INVERSE, CyclicWord, MultiWord, power_decomposition


def _in_with_powers(v: CyclicWord, w: CyclicWord) -> int:
    # IN(u^k, w) = k IN(u, w)
    pv, pw = power_decomposition(v), power_decomposition(w)
    return pv.exponent * pw.exponent * intersection_number(pv.root, pw.root)


def appendix_oracle(top: int = 4) -> list:
    """Closed forms for block shapes against linked-pair counts, exponents 1..top."""
    failures = []
    for shape in SHAPES:
        n = len(shape.replace("|", ""))
        for exps in itertools.product(range(1, top + 1), repeat=n):
            cf = closed_form_si(shape, exps)
            target = shape_word(shape, exps)
            if isinstance(target, tuple):
                got, exact = _in_with_powers(*target), True
            else:
                r = si_result(target)
                got, exact = r.value, r.exact
            # the proper-power abab case is a bound on both sides; the bounds must agree
            if got != cf.value or (cf.exact and not exact and cf.value != 1):
                failures.append(f"{shape}{exps}: closed form {cf.value} vs linked pairs {got}")
    return failures


def _h(x) -> int:
    return x.h if isinstance(x, CyclicWord) else sum(c.h for c in x)


def check_surgeries(w: CyclicWord) -> list:
    """Invariants of every surgery available on ``w`` and of its reduction."""
    failures = []
    s0 = exact_si(w)
    for pair in find_opposite_corner_pairs(w):
        tag = f"{w.letters} at {pair.site1.position},{pair.site2.position}"
        if pair.orientation is Orientation.REVERSED:
            out = surgery_reversed(w, pair)
        else:
            out = surgery_same(w, pair)
        if (out.alpha, out.beta) != (w.alpha, w.beta):
            failures.append(f"{tag}: alpha/beta changed")
        if _h(out) != w.h - 1:
            failures.append(f"{tag}: block-pairs {w.h} -> {_h(out)}")
        s1 = exact_si(out)
        if s0 is not None and s1 is not None and s1 < s0 + 1:
            failures.append(f"{tag}: SI {s0} -> {s1}")
        if isinstance(out, MultiWord):
            failures.extend(_check_merges(out, s1, tag))
    if w.h >= 1:
        trace = reduce_to_two_blockpairs(w)
        f = trace.final
        if f.h > 2 or (f.alpha, f.beta) != (w.alpha, w.beta):
            failures.append(f"{w.letters}: reduction ended at {f.letters}")
        sf = exact_si(f)
        if s0 is not None and sf is not None and sf < s0 + trace.guaranteed_gain:
            failures.append(f"{w.letters}: reduction SI {s0} -> {sf}, gain {trace.guaranteed_gain}")
    return failures


def _check_merges(mw: MultiWord, s1: Optional[int], tag: str) -> list:
    failures = []
    v, u = mw[0], mw[1]
    for i in range(len(v)):
        for j in range(len(u)):
            if INVERSE[v[i]] == v[i + 1] or v[i] == v[i + 1] or u[j] == u[j + 1]:
                continue
            c1, c2 = (v[i], v[i + 1]), (u[j], u[j + 1])
            if c2 not in ((c1[1], c1[0]), (INVERSE[c1[0]], INVERSE[c1[1]])):
                continue
            m = surgery_merge(mw, i, j)
            if (m.alpha, m.beta) != (mw.alpha, mw.beta) or m.h != _h(mw) - 1:
                failures.append(f"{tag}: merge at {i},{j} broke alpha/beta/h")
            s2 = exact_si(m)
            if s1 is not None and s2 is not None and s2 < s1 + 1:
                failures.append(f"{tag}: merge at {i},{j} SI {s1} -> {s2}")
    return failures


def random_word(length: int, rng: random.Random) -> CyclicWord:
    """Uniform over cyclically reduced spellings of ``length``, by rejection."""
    while True:
        text = [rng.choice(ALPHABET)]
        for _ in range(length - 1):
            text.append(rng.choice([x for x in ALPHABET if x != INVERSE[text[-1]]]))
        if length == 1 or text[-1] != INVERSE[text[0]]:
            return CyclicWord("".join(text))


def surgery_invariants(max_length: int = 10, samples: int = 10_000,
                       sample_max_length: int = 12, seed: int = 0) -> list:
    failures = []
    for L in range(1, max_length + 1):
        for w in enumerate_words(L):
            failures.extend(check_surgeries(w))
    rng = random.Random(seed)
    done = 0
    while done < samples:
        w = random_word(rng.randint(2, sample_max_length), rng)
        if not find_opposite_corner_pairs(w):
            continue
        done += 1
        failures.extend(check_surgeries(w))
    return failures


def table1(max_length: int = 12, threads: Optional[int] = None) -> list:
    failures = []
    for L in range(1, max_length + 1):
        got = si_histogram(L, threads=threads).row()
        want = TORUS_COUNTS[L]
        if got != want:
            bad = next(s for s in range(max(len(got), len(want)))
                       if (got + [0] * len(want))[s] != (want + [0] * len(got))[s])
            failures.append(f"length {L}, SI {bad}: got {got[bad] if bad < len(got) else 0}, "
                            f"expected {want[bad] if bad < len(want) else 0}")
    return failures


def extremal(max_length: int = 14, arithmetic_max: int = 30, max_k: int = 25,
             bound_length: int = 9, threads: Optional[int] = None) -> list:
    failures = []
    census_max = {}
    for L in range(1, max_length + 1):
        hist = si_histogram(L, threads=threads)
        census_max[L] = hist.max_si
        if L < 4:
            continue
        top = max_si(L)
        if hist.max_si != top:
            failures.append(f"L={L}: census max {hist.max_si} != {top}")
        if hist.counts.get(top, 0) != count_maximal(L):
            failures.append(f"L={L}: {hist.counts.get(top, 0)} maximal words, formula {count_maximal(L)}")
        if hist.counts.get(top - 1, 0) != count_submaximal(L):
            failures.append(f"L={L}: {hist.counts.get(top - 1, 0)} sub-maximal words, "
                            f"formula {count_submaximal(L)}")
        if set(words_with_si(L, top, top, threads=threads)) != set(maximal_words(L)):
            failures.append(f"L={L}: maximal word set differs from the generated shapes")
        if set(words_with_si(L, top - 1, top - 1, threads=threads)) != set(submaximal_words(L)):
            failures.append(f"L={L}: sub-maximal word set differs from the generated shapes")
    for L in range(4, arithmetic_max + 1):
        if len(maximal_words(L)) != count_maximal(L):
            failures.append(f"L={L}: {len(maximal_words(L))} generated maximal words")
        if len(submaximal_words(L)) != count_submaximal(L):
            failures.append(f"L={L}: {len(submaximal_words(L))} generated sub-maximal words")
    for k in range(1, max_k + 1):
        want = min_length_for_si(k)
        by_formula = next(L for L in itertools.count(1) if max_si(L) >= k)
        by_census = next((L for L in sorted(census_max) if census_max[L] >= k), None)
        if not (want == by_formula == by_census):
            failures.append(f"k={k}: min length {want}, by max_si {by_formula}, by census {by_census}")
    for L in range(1, bound_length + 1):
        for w in enumerate_words(L):
            try:
                rep = bound_report(w)
            except NonPrimitiveInput:
                continue
            if rep.slack < 0 and not rep.exception:
                failures.append(f"{w.letters}: SI {rep.si} above the {rep.bound_kind} bound {rep.bound}")
    return failures


def _pants_min(L: int) -> int:
    return 0 if L <= 2 else L // 2


def pants(max_length: int = 13, threads: Optional[int] = None) -> list:
    failures = []
    order = resolve_pants_order()
    for L in range(1, min(max_length, PANTS_VALIDATED_MAX) + 1):
        ex = pants_extremes(L, include_nonprimitive=L >= 4 and L % 2 == 0,
                            order=order, threads=threads)
        if ex.max_si != max_si(L, "pants"):
            failures.append(f"L={L}: pants max {ex.max_si} != {max_si(L, 'pants')}")
        if ex.min_si != _pants_min(L):
            failures.append(f"L={L}: pants min {ex.min_si} != {_pants_min(L)}")
        if L % 2 and L >= 3:
            if set(ex.max_words) != set(pants_maximal_words(L)):
                failures.append(f"L={L}: pants maximal words differ")
            if ex.max_count != 4:
                failures.append(f"L={L}: {ex.max_count} maximal classes, expected 4")
        elif L >= 4:
            if ex.overall_max != L * L // 4 + L // 2 - 1:
                failures.append(f"L={L}: overall max {ex.overall_max}")
            if ex.overall_count != 2:
                failures.append(f"L={L}: {ex.overall_count} maximal classes over all words, expected 2")
    return failures


def symmetry(max_length: int = 8) -> list:
    """SI is unchanged by inversion and by relabelings that preserve the torus ring."""
    from .linking import TORUS
    ring = "".join(TORUS.ring)
    maps = []
    for shift in range(4):
        for flip in (False, True):
            seq = ring[shift:] + ring[:shift]
            if flip:
                seq = seq[0] + seq[:0:-1]
            maps.append(str.maketrans(ring, seq))
    failures = []
    for L in range(1, max_length + 1):
        for w in enumerate_words(L):
            base = si_result(w)
            for tr in maps:
                img = CyclicWord(w.letters.translate(tr))
                if si_result(img) != base:
                    failures.append(f"{w.letters} -> {img.letters}: SI changed")
            inv = CyclicWord(w.letters[::-1].swapcase())
            if si_result(inv) != base:
                failures.append(f"{w.letters}: inversion changed SI")
    return failures


SUITES: dict[str, Callable[[], list]] = {
    "appendix-oracle": appendix_oracle,
    "surgery-invariants": surgery_invariants,
    "table1": table1,
    "extremal": extremal,
    "pants": pants,
    "symmetry": symmetry,
}
