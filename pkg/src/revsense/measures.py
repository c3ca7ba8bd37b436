"""Substring complexity (delta) and CDAWG right-extension count (e).

delta(w) = max over k of |S_w(k)| / k, with S_w(k) the set of distinct
length-k substrings.  Returned as an exact Fraction, never a float, so
invariance checks and cross-family comparisons stay exact.

e(w) = |E_r(w)|, where E_r collects every substring xa whose stem x is
right-maximal: x (the empty string included) counts as right-maximal
iff at least two distinct symbols follow occurrences of x in w, or x
is a suffix of w.
"""

from __future__ import annotations

from fractions import Fraction

from .suffixes import SuffixContext, build_suffix_context
from .text import Text


def distinct_substring_counts(w: Text, ctx: SuffixContext | None = None) -> list[int]:
    """counts[k-1] = number of distinct length-k substrings, for k in [1, n].

    Distinct substrings of length k are suffix prefixes minus repeats:
    (#suffixes of length >= k) - (#LCP entries >= k).
    """
    if len(w) == 0:
        raise ValueError("substring counts require a non-empty text")
    if ctx is None:
        ctx = build_suffix_context(w)
    n = len(w)
    geq = [0] * (n + 2)
    for v in ctx.lcp:
        if v > 0:
            geq[min(v, n)] += 1
    for k in range(n - 1, 0, -1):
        geq[k] += geq[k + 1]
    return [(n - k + 1) - geq[k] for k in range(1, n + 1)]


def substring_complexity(w: Text, ctx: SuffixContext | None = None) -> Fraction:
    counts = distinct_substring_counts(w, ctx)
    best_num, best_den = 0, 1
    for k, c in enumerate(counts, start=1):
        if c * best_den > best_num * k:
            best_num, best_den = c, k
    return Fraction(best_num, best_den)


def right_extensions(w: Text) -> set[Text]:
    """E_r(w), by brute force over all substring occurrences.

    One pass records, per distinct substring, the set of symbols that
    follow it and whether it ends the text; symbol sequences are kept
    as bytes when ranks fit for hashing speed.
    """
    if len(w) == 0:
        raise ValueError("right extensions require a non-empty text")
    symbols = w.symbols
    n = len(symbols)
    use_bytes = max(symbols) < 256
    s = bytes(symbols) if use_bytes else symbols
    info: dict[object, tuple[set[int], list[bool]]] = {}
    for i in range(n):
        for j in range(i + 1, n + 1):
            x = s[i:j]
            entry = info.get(x)
            if entry is None:
                entry = info[x] = (set(), [False])
            if j < n:
                entry[0].add(symbols[j])
            else:
                entry[1][0] = True
    out: set[Text] = set()
    # the empty stem is always a suffix, hence right-maximal
    for a in set(symbols):
        out.add(Text((a,), w.names))
    for x, (nexts, is_suffix) in info.items():
        if len(nexts) >= 2 or is_suffix[0]:
            base = tuple(x)
            for a in nexts:
                out.add(Text(base + (a,), w.names))
    return out


def right_extension_count(w: Text) -> int:
    return len(right_extensions(w))
