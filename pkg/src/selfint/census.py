"""Exhaustive enumeration of cyclic words and self-intersection histograms.

The word space of a given length is split into shards by canonical prefix;
each shard is walked by the compiled kernel and the per-shard histograms are
added in shard order, so the result never depends on the thread count.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .errors import UnvalidatedLength
from .linking import PANTS, PANTS_ALT, TORUS, SurfaceOrder, si_result
from .words import ALPHABET, CyclicWord, power_decomposition

THREADS_ENV = "SELFINT_THREADS"
PANTS_VALIDATED_MAX = 15
SHARD_PREFIX = 3


def default_threads() -> int:
    env = os.environ.get(THREADS_ENV, "auto")
    if env == "auto":
        return os.cpu_count() or 1
    return max(1, int(env))


def decode(code: int, length: int) -> str:
    out = []
    for _ in range(length):
        out.append(ALPHABET[code % 4])
        code //= 4
    return "".join(reversed(out))


@lru_cache(maxsize=None)
def shard_prefixes(length: int) -> tuple:
    """Canonical prefixes that seed the shards, in lexicographic order."""
    k = min(SHARD_PREFIX, length)
    out = []

    def grow(prefix, per):
        d = len(prefix)
        if d == k:
            out.append(tuple(prefix))
            return
        for c in range(4):
            if d == 0:
                grow([c], 1)
                continue
            if c == prefix[-1] ^ 2:
                continue
            ref = prefix[d - per]
            if c < ref:
                continue
            grow(prefix + [c], per if c == ref else d + 1)

    grow([], 1)
    return tuple(out)


def _run_shards(length: int, order: SurfaceOrder, primitive_only: bool,
                keep_lo: int, keep_hi: int, with_si: bool, threads: Optional[int]):
    pos = order.positions
    prefixes = shard_prefixes(length)

    def work(prefix):
        return _kernels.scan_necklaces(length, np.array(prefix, dtype=np.int8), pos,
                                       primitive_only, keep_lo, keep_hi, with_si)

    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(prefixes) == 1:
        results = [work(p) for p in prefixes]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(work, prefixes))
    hist = np.zeros(length * length + 2, dtype=np.int64)
    kept: list[int] = []
    for h, k in results:
        hist += h
        kept.extend(int(c) for c in k)
    if hist[0]:
        raise AssertionError(f"kernel reported an odd type-III count at length {length}")
    return hist[1:], kept


def enumerate_words(length: int, primitive_only: bool = False,
                    threads: Optional[int] = None) -> Iterator[CyclicWord]:
    """Every canonical cyclically reduced word of ``length``, in lexicographic order."""
    if length < 1:
        raise ValueError("length must be at least 1")
    _, kept = _run_shards(length, TORUS, primitive_only, 0, 0, False, threads)
    for code in kept:
        yield CyclicWord(decode(code, length))


def words_with_si(length: int, lo: int, hi: Optional[int] = None,
                  order: SurfaceOrder = TORUS, threads: Optional[int] = None) -> list:
    """Primitive words of ``length`` whose SI lies in ``[lo, hi]``."""
    hi = length * length if hi is None else hi
    _, kept = _run_shards(length, order, True, lo, hi, True, threads)
    return [CyclicWord(decode(c, length)) for c in kept]


@dataclass
class SiHistogram:
    length: int
    surface: str
    counts: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def max_si(self) -> int:
        return max(self.counts)

    @property
    def min_si(self) -> int:
        return min(s for s, c in self.counts.items() if c)

    def row(self) -> list:
        """Counts for SI = 0, 1, ..., max_si (interior zeros kept)."""
        return [self.counts.get(s, 0) for s in range(self.max_si + 1)]


def si_histogram(length: int, order: SurfaceOrder = TORUS,
                 threads: Optional[int] = None) -> SiHistogram:
    """Histogram of SI over all primitive classes of ``length``."""
    if length < 1:
        raise ValueError("length must be at least 1")
    hist, _ = _run_shards(length, order, True, 1, 0, True, threads)
    nz = np.nonzero(hist)[0]
    top = int(nz.max())
    counts = {s: int(hist[s]) for s in range(top + 1)}
    return SiHistogram(length, order.name, counts)


def _check_pants_length(length: int, force: bool) -> None:
    if length > PANTS_VALIDATED_MAX and not force:
        raise UnvalidatedLength(
            f"pants data is only validated for L <= {PANTS_VALIDATED_MAX}; pass force=True")


@dataclass
class PantsExtremes:
    length: int
    max_si: int
    max_count: int
    max_words: list
    min_si: int
    # over all classes; proper powers carry the linked-pair upper bound
    overall_max: Optional[int] = None
    overall_count: Optional[int] = None
    overall_words: Optional[list] = None


def pants_extremes(length: int, include_nonprimitive: bool = False, force: bool = False,
                   order: Optional[SurfaceOrder] = None,
                   threads: Optional[int] = None) -> PantsExtremes:
    """Maximum and minimum SI over primitive classes on the pair of pants."""
    if length < 1:
        raise ValueError("length must be at least 1")
    _check_pants_length(length, force)
    order = resolve_pants_order() if order is None else order
    hist = si_histogram(length, order, threads)
    top = hist.max_si
    words = words_with_si(length, top, top, order, threads)
    rec = PantsExtremes(length, top, hist.counts[top], words, hist.min_si)
    if include_nonprimitive:
        scored = [(top, w, True) for w in words]
        for w in enumerate_words(length, threads=threads):
            if power_decomposition(w).exponent > 1:
                r = si_result(w, order)
                scored.append((r.value, w, r.exact))
        best = max(s for s, _, _ in scored)
        rec.overall_max = best
        rec.overall_words = sorted(w for s, w, _ in scored if s == best)
        rec.overall_count = len(rec.overall_words)
    return rec


def _pants_expected_max(length: int) -> int:
    if length % 2:
        return (length * length - 1) // 4
    if length == 2:
        return 1
    if length % 4 == 0:
        return length * length // 4 - 1
    return length * length // 4 - 2


def _pants_expected_words(length: int) -> set:
    n = (length - 1) // 2
    return {CyclicWord(r + (r + s) * n) for r, s in (("a", "B"), ("B", "a"), ("A", "b"), ("b", "A"))}


def pants_self_test(order: SurfaceOrder, max_length: int = 7) -> list:
    """Failures of the known pants maxima/minima for L <= ``max_length`` under ``order``."""
    failures = []
    for length in range(1, max_length + 1):
        hist = si_histogram(length, order, threads=1)
        if hist.max_si != _pants_expected_max(length):
            failures.append(f"L={length}: max {hist.max_si} != {_pants_expected_max(length)}")
        want_min = 0 if length <= 2 else length // 2
        if hist.min_si != want_min:
            failures.append(f"L={length}: min {hist.min_si} != {want_min}")
        if length % 2 and length >= 3:
            got = set(words_with_si(length, hist.max_si, hist.max_si, order, threads=1))
            if got != _pants_expected_words(length):
                failures.append(f"L={length}: maximal words differ")
    return failures


class PantsRingError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def resolve_pants_order() -> SurfaceOrder:
    """The pants ring that passes the self-test; the default ring is tried first."""
    report = []
    for order in (PANTS, PANTS_ALT):
        failures = pants_self_test(order)
        if not failures:
            return order
        report.append(f"{order}: {failures[0]}")
    raise PantsRingError("no pants ring passes the self-test: " + "; ".join(report))


# ---------------------------------------------------------------- tables

def census_table(max_length: int, order: SurfaceOrder = TORUS,
                 threads: Optional[int] = None) -> list:
    return [si_histogram(L, order, threads) for L in range(1, max_length + 1)]


def table_to_csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["length", "si", "count"])
    for h in rows:
        for s in sorted(h.counts):
            writer.writerow([h.length, s, h.counts[s]])
    return buf.getvalue()


def table_to_json(rows: list) -> str:
    surface = rows[0].surface if rows else TORUS.name
    doc = {
        "surface": surface,
        "rows": [{"length": h.length, "counts": {str(s): h.counts[s] for s in sorted(h.counts)}}
                 for h in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def table_to_plain(rows: list) -> str:
    """Table-1-shaped grid: one line per length, counts for SI = 0, 1, ..."""
    return "".join(f"{h.length}: " + " ".join(str(c) for c in h.row()) + "\n" for h in rows)


def parse_csv_table(text: str, surface: str = TORUS.name) -> list:
    rows: dict[int, SiHistogram] = {}
    reader = csv.DictReader(io.StringIO(text))
    for rec in reader:
        L = int(rec["length"])
        rows.setdefault(L, SiHistogram(L, surface)).counts[int(rec["si"])] = int(rec["count"])
    return [rows[L] for L in sorted(rows)]


def parse_json_table(text: str) -> list:
    doc = json.loads(text)
    return [SiHistogram(r["length"], doc["surface"], {int(s): int(c) for s, c in r["counts"].items()})
            for r in doc["rows"]]


def emit_table(max_length: int, order: SurfaceOrder = TORUS, fmt: str = "csv",
               threads: Optional[int] = None) -> str:
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    rows = census_table(max_length, order, threads)
    if fmt == "csv":
        return table_to_csv(rows)
    if fmt == "json":
        return table_to_json(rows)
    if fmt == "plain":
        return table_to_plain(rows)
    raise ValueError(f"unknown format {fmt!r}")
