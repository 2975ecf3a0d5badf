"""Compiled inner loops: linked-pair counting and necklace enumeration.

Words are int8 arrays of letter codes a=0, b=1, A=2, B=3; ``code ^ 2`` is
the inverse letter.  ``pos[c]`` is the place of letter ``c`` on the boundary
ring, so the ring itself never appears in these loops.
"""
import numpy as np
from numba import njit

_OPTS = dict(cache=True, nogil=True)


@njit(**_OPTS)
def _orient(pos, x, y, z):
    if x == y or y == z or x == z:
        return 0
    i = pos[x]
    j = (pos[y] - i) % 4
    k = (pos[z] - i) % 4
    return 1 if j < k else -1


@njit(**_OPTS)
def _similar(pos, x1, y1, z1, x2, y2, z2):
    o = _orient(pos, x1, y1, z1)
    return o != 0 and o == _orient(pos, x2, y2, z2)


@njit(**_OPTS)
def _interleave(pos, a1, a2, b1, b2):
    # chords a1-a2 and b1-b2 on the 4-point ring, endpoints all distinct
    if a1 == a2 or b1 == b2 or a1 == b1 or a1 == b2 or a2 == b1 or a2 == b2:
        return False
    lo = pos[a1]
    hi = (pos[a2] - lo) % 4
    t1 = (pos[b1] - lo) % 4
    t2 = (pos[b2] - lo) % 4
    return (t1 < hi) != (t2 < hi)


@njit(**_OPTS)
def si_linked_pairs(w, n, pos):
    """Number of unordered linked pairs of the cyclic word ``w[:n]``.

    Pairs whose common interior never ends (periodic words) are skipped.
    Returns -1 if the type-III count comes out odd, which would mean the
    pairing argument is broken.
    """
    count = 0
    for s1 in range(n):
        p1 = w[s1]
        for s2 in range(s1 + 1, n):
            q1 = w[s2]
            if p1 == q1:
                continue
            m = 0
            while m < n and w[(s1 + 1 + m) % n] == w[(s2 + 1 + m) % n]:
                m += 1
            if m >= n:
                continue
            p2 = w[(s1 + 1 + m) % n]
            q2 = w[(s2 + 1 + m) % n]
            if m == 0:
                if _interleave(pos, p1 ^ 2, p2, q1 ^ 2, q2):
                    count += 1
            else:
                x1 = w[(s1 + 1) % n]
                x2i = w[(s1 + m) % n] ^ 2
                if _similar(pos, p1 ^ 2, q1 ^ 2, x1, p2, q2, x2i):
                    count += 1
    # type III: forward reading from f against inverted backward reading from g
    c3 = 0
    for f in range(n):
        p1 = w[f]
        for g in range(n):
            q2 = w[g]
            if p1 == q2 ^ 2:
                continue
            m = 0
            while m < n and w[(f + 1 + m) % n] == w[(g - 1 - m) % n] ^ 2:
                m += 1
            if m == 0 or m >= n:
                continue
            p2 = w[(f + 1 + m) % n]
            q1 = w[(g - 1 - m) % n]
            x1 = w[(f + 1) % n]
            x2i = w[(f + m) % n] ^ 2
            if _similar(pos, p1 ^ 2, q2, x1, p2, q1 ^ 2, x2i):
                c3 += 1
    if c3 % 2 != 0:
        return -1
    return count + c3 // 2


@njit(**_OPTS)
def in_linked_pairs(v, n1, w, n2, pos, cap):
    """Ordered linked pairs between occurrences in ``v`` and in ``w``.

    Occurrences are read from the periodic extensions.  Returns -1 when a
    common interior reaches ``cap`` letters.
    """
    count = 0
    for s1 in range(n1):
        p1 = v[s1]
        for s2 in range(n2):
            q1 = w[s2]
            if p1 == q1:
                continue
            m = 0
            while m < cap and v[(s1 + 1 + m) % n1] == w[(s2 + 1 + m) % n2]:
                m += 1
            if m >= cap:
                return -1
            p2 = v[(s1 + 1 + m) % n1]
            q2 = w[(s2 + 1 + m) % n2]
            if m == 0:
                if _interleave(pos, p1 ^ 2, p2, q1 ^ 2, q2):
                    count += 1
            else:
                x1 = v[(s1 + 1) % n1]
                x2i = v[(s1 + m) % n1] ^ 2
                if _similar(pos, p1 ^ 2, q1 ^ 2, x1, p2, q2, x2i):
                    count += 1
    for f in range(n1):
        p1 = v[f]
        for g in range(n2):
            q2 = w[g]
            if p1 == q2 ^ 2:
                continue
            m = 0
            while m < cap and v[(f + 1 + m) % n1] == w[(g - 1 - m) % n2] ^ 2:
                m += 1
            if m >= cap:
                return -1
            if m == 0:
                continue
            p2 = v[(f + 1 + m) % n1]
            q1 = w[(g - 1 - m) % n2]
            x1 = v[(f + 1) % n1]
            x2i = v[(f + m) % n1] ^ 2
            if _similar(pos, p1 ^ 2, q2, x1, p2, q1 ^ 2, x2i):
                count += 1
    return count


@njit(**_OPTS)
def scan_necklaces(n, prefix, pos, primitive_only, keep_lo, keep_hi, with_si):
    """Walk every canonical cyclically reduced word of length ``n`` that starts
    with ``prefix`` and tally linked-pair counts.

    Extends prenecklaces one letter at a time (the period-tracking rule of
    Fredricksen-Kessler-Maiorana) while skipping letters that would cancel.
    Words whose count lies in ``[keep_lo, keep_hi]`` are returned encoded in
    base 4, first letter most significant.  With ``with_si`` false every word
    is kept and the histogram stays empty.
    """
    hist = np.zeros(n * n + 2, dtype=np.int64)
    kept = [np.int64(0)]
    kept.pop()
    word = np.zeros(n, dtype=np.int8)
    per = np.ones(n + 1, dtype=np.int64)
    cand = np.zeros(n + 1, dtype=np.int64)
    k = len(prefix)
    if k > n:
        return hist, kept
    # replay the prefix through the same rule
    for d in range(k):
        c = prefix[d]
        if d == 0:
            per[1] = 1
        else:
            if c == word[d - 1] ^ 2:
                return hist, kept
            ref = word[d - per[d]]
            if c < ref:
                return hist, kept
            per[d + 1] = per[d] if c == ref else d + 1
        word[d] = c
    d = k
    cand[d] = 0
    while True:
        if d == n:
            p = per[n]
            if n % p == 0 and word[n - 1] != word[0] ^ 2 and (p == n or not primitive_only):
                if with_si:
                    s = si_linked_pairs(word, n, pos)
                    hist[s + 1] += 1  # slot 0 collects the -1 sentinel
                    keep = keep_lo <= s <= keep_hi
                else:
                    keep = True
                if keep:
                    code = np.int64(0)
                    for t in range(n):
                        code = code * 4 + word[t]
                    kept.append(code)
            d -= 1
            continue
        if d < k:
            break
        c = cand[d]
        if c > 3:
            d -= 1
            continue
        cand[d] = c + 1
        if d == 0:
            newp = 1
        else:
            if c == word[d - 1] ^ 2:
                continue
            ref = word[d - per[d]]
            if c < ref:
                continue
            newp = per[d] if c == ref else d + 1
        word[d] = c
        per[d + 1] = newp
        d += 1
        cand[d] = 0
    return hist, kept
