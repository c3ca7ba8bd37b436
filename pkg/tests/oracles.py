"""Independent brute-force oracles for differential tests.

Everything here works directly from definitions on plain symbol tuples,
deliberately sharing no machinery with the library implementations.
"""

from __future__ import annotations

import random
from fractions import Fraction


def random_symbols(rng: random.Random, max_n: int, alphabets=(2, 3, 5), min_n: int = 1):
    n = rng.randint(min_n, max_n)
    sigma = rng.choice(alphabets)
    return tuple(rng.randrange(sigma) for _ in range(n))


def brute_lz_shape(s):
    """Greedy LZ with overlap, straight from the definition."""
    n = len(s)
    i = 0
    out = []
    while i < n:
        best = 0
        for j in range(i):
            l = 0
            while i + l < n and s[j + l] == s[i + l]:
                l += 1
            if l > best:
                best = l
        step = best if best else 1
        out.append((i + 1, step))
        i += step
    return tuple(out)


def brute_lz_no_overlap_shape(s):
    n = len(s)
    i = 0
    out = []
    while i < n:
        best = 0
        for j in range(i):
            l = 0
            while i + l < n and j + l < i and s[j + l] == s[i + l]:
                l += 1
            if l > best:
                best = l
        step = best if best else 1
        out.append((i + 1, step))
        i += step
    return tuple(out)


def brute_lz_end_greedy_shape(s):
    """Greedy end-aligned LZ: scan every (source, boundary) pair."""
    n = len(s)
    i = 0
    ends = []
    out = []
    while i < n:
        best = 0
        for e in ends:  # 1-based end of a previous phrase
            for ell in range(1, min(e, n - i) + 1):
                j = e - ell  # 0-based source start
                if s[j:j + ell] == s[i:i + ell] and ell > best:
                    best = ell
        step = best if best else 1
        out.append((i + 1, step))
        ends.append(i + step)
        i += step
    return tuple(out)


def exhaustive_lz_end_size(s):
    """Exact smallest end-aligned parsing by enumerating boundary sets."""
    n = len(s)
    best = [n]

    def extend(i, ends, count):
        if count >= best[0]:
            return
        if i == n:
            best[0] = count
            return
        moves = {1}
        for e in ends:
            for ell in range(1, min(e, n - i) + 1):
                if s[e - ell:e] == s[i:i + ell]:
                    moves.add(ell)
        for ell in sorted(moves, reverse=True):
            ends.append(i + ell)
            extend(i + ell, ends, count + 1)
            ends.pop()

    extend(0, [], 0)
    return best[0]


def left_source_optimal_size(s):
    """Minimal left-source parsing size by dynamic programming."""
    n = len(s)
    dp = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        best = 0
        for j in range(i):
            l = 0
            while i + l < n and s[j + l] == s[i + l]:
                l += 1
            if l > best:
                best = l
        hi = max(1, best)
        dp[i] = 1 + min(dp[i + 1:i + hi + 1])
    return dp[0]


def brute_delta(s):
    n = len(s)
    return max(
        Fraction(len({s[i:i + k] for i in range(n - k + 1)}), k)
        for k in range(1, n + 1)
    )


def brute_right_extensions(s):
    """E_r from the definition: one occurrence scan per distinct substring."""
    n = len(s)
    subs = {s[i:j] for i in range(n) for j in range(i + 1, n + 1)}
    subs.add(())
    out = set()
    for x in subs:
        m = len(x)
        nexts = {s[i + m] for i in range(n - m) if s[i:i + m] == x}
        is_suffix = s[n - m:] == x
        if len(nexts) >= 2 or is_suffix:
            out |= {x + (a,) for a in nexts}
    return out


def decode_parsing(parsing, w):
    """Rebuild the text from phrase sources (literals from the phrase start).

    Sources start strictly before their phrase, so copying one symbol at
    a time from the already-decoded output is well defined even when the
    source overlaps the phrase.
    """
    out = []
    for ph in parsing.phrases:
        if ph.source is None:
            assert ph.length == 1
            out.append(w.symbols[ph.start - 1])
        else:
            src0 = ph.source - 1
            for t in range(ph.length):
                out.append(out[src0 + t])
    return tuple(out)
