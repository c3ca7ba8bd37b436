"""Lempel-Ziv factorizations: greedy with self-overlap (z), greedy
non-overlapping (z_no), greedy end-aligned (z_e), and the smallest
end-aligned parsing (z_end) by bounded exact search.

Phrase model: a parsing tiles the text; a phrase either copies some
earlier-starting occurrence (its source) or is a single literal
character.  The variants differ only in which sources qualify:

* lz_parse       -- source starts strictly before the phrase (it may
                    overlap the phrase).
* lz_no_overlap  -- source lies entirely before the phrase.
* lz_end_greedy  -- source ends exactly at the end of a previously
                    produced phrase.
* lz_end_optimal -- minimum number of phrases over all parsings whose
                    sources end at earlier boundaries of that same
                    parsing; greedy end-aligned parsing is not optimal
                    in general.
"""

from __future__ import annotations

import sys
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

import numpy as np

from .suffixes import SuffixContext, build_suffix_context
from .text import Text


@dataclass(frozen=True)
class Phrase:
    start: int            # 1-based
    length: int
    source: int | None    # 1-based start of the copied occurrence; None = literal

    @property
    def end(self) -> int:
        return self.start + self.length - 1


@dataclass(frozen=True)
class Parsing:
    phrases: tuple[Phrase, ...]
    variant: str

    def __len__(self) -> int:
        return len(self.phrases)

    def shape(self) -> tuple[tuple[int, int], ...]:
        """(start, length) pairs; two parsings factorize alike iff equal."""
        return tuple((p.start, p.length) for p in self.phrases)

    def boundaries(self) -> tuple[int, ...]:
        return tuple(p.end for p in self.phrases)

    def phrase_texts(self, w: Text) -> list[Text]:
        return [w[p.start - 1:p.end] for p in self.phrases]


class _SparseMin:
    """O(1) range-minimum queries over a static integer array."""

    def __init__(self, values: np.ndarray):
        self.levels = [values]
        j = 1
        while (1 << j) <= len(values):
            prev = self.levels[-1]
            half = 1 << (j - 1)
            self.levels.append(np.minimum(prev[:-half], prev[half:]))
            j += 1

    def query(self, lo: int, hi: int) -> int:
        """min over inclusive index range [lo, hi]."""
        k = (hi - lo + 1).bit_length() - 1
        lev = self.levels[k]
        return int(min(lev[lo], lev[hi - (1 << k) + 1]))


class _SuffixMatcher:
    """Longest-match machinery over a suffix context (0-based internally)."""

    def __init__(self, w: Text, ctx: SuffixContext | None = None):
        if ctx is None:
            ctx = build_suffix_context(w)
        n = len(w)
        self.n = n
        self.sa0 = np.asarray(ctx.sa, dtype=np.int64) - 1
        self.isa0 = [r - 1 for r in ctx.isa]
        self.lcp = np.asarray(ctx.lcp, dtype=np.int64)
        self.lcp_rmq = _SparseMin(self.lcp)
        self.sa_rmq = _SparseMin(self.sa0)
        sa_list = self.sa0.tolist()
        psv = [-1] * n
        stack: list[int] = []
        for r in range(n):
            while stack and sa_list[stack[-1]] > sa_list[r]:
                stack.pop()
            psv[r] = stack[-1] if stack else -1
            stack.append(r)
        nsv = [-1] * n
        stack = []
        for r in range(n - 1, -1, -1):
            while stack and sa_list[stack[-1]] > sa_list[r]:
                stack.pop()
            nsv[r] = stack[-1] if stack else -1
            stack.append(r)
        self.psv = psv
        self.nsv = nsv
        self.sa_list = sa_list

    def lcp_of_ranks(self, ra: int, rb: int) -> int:
        """lcp of the suffixes ranked ra and rb (0-based ranks)."""
        if ra == rb:
            return self.n - self.sa_list[ra]
        if ra > rb:
            ra, rb = rb, ra
        return self.lcp_rmq.query(ra + 1, rb)

    def longest_earlier_match(self, i0: int) -> tuple[int, int | None]:
        """Longest prefix of w[i0:] occurring at some position < i0
        (overlap with the phrase allowed); returns (length, source0)."""
        r = self.isa0[i0]
        best, src = 0, None
        for cand in (self.psv[r], self.nsv[r]):
            if cand < 0:
                continue
            ell = self.lcp_of_ranks(cand, r)
            if ell > best:
                best, src = ell, self.sa_list[cand]
        return best, src

    def _interval_with_lcp(self, r: int, ell: int) -> tuple[int, int]:
        """Maximal rank interval around r whose suffixes share a prefix
        of length >= ell with suffix rank r."""
        lo, hi = r, r
        a, b = 0, r
        while a < b:
            mid = (a + b) // 2
            if self.lcp_rmq.query(mid + 1, r) >= ell:
                b = mid
            else:
                a = mid + 1
        lo = a
        a, b = r, self.n - 1
        while a < b:
            mid = (a + b + 1) // 2
            if self.lcp_rmq.query(r + 1, mid) >= ell:
                a = mid
            else:
                b = mid - 1
        hi = a
        return lo, hi

    def match_all(self, i0: int) -> np.ndarray:
        """Vector of lcp(suffix_j, suffix_i0) over all positions j.

        Running minima over the LCP array outward from rank of i0.
        """
        n, r = self.n, self.isa0[i0]
        match = np.empty(n, dtype=np.int64)
        if r > 0:
            match[self.sa0[:r]] = np.minimum.accumulate(self.lcp[1:r + 1][::-1])[::-1]
        if r < n - 1:
            match[self.sa0[r + 1:]] = np.minimum.accumulate(self.lcp[r + 1:])
        match[i0] = n - i0
        return match

    def longest_nonoverlapping_match(self, i0: int) -> tuple[int, int | None]:
        """Longest prefix of w[i0:] with an occurrence inside [0, i0)."""
        n = self.n
        r = self.isa0[i0]
        max_ell = min(i0, n - i0)
        best, src = 0, None
        lo_ell, hi_ell = 1, max_ell
        while lo_ell <= hi_ell:
            mid = (lo_ell + hi_ell) // 2
            lo, hi = self._interval_with_lcp(r, mid)
            if self.sa_rmq.query(lo, hi) <= i0 - mid:
                best = mid
                lo_ell = mid + 1
            else:
                hi_ell = mid - 1
        if best:
            lo, hi = self._interval_with_lcp(r, best)
            window = self.sa0[lo:hi + 1]
            src = int(window[window <= i0 - best].min())
        return best, src


def _match_lengths(symbols: tuple[int, ...], i0: int) -> list[int]:
    """match[j] = length of the longest common prefix of w[j:] and w[i0:],
    via the Z-array of w[i0:] + separator + w."""
    pat = symbols[i0:]
    m = len(pat)
    t = pat + (-1,) + symbols
    nt = len(t)
    z = [0] * nt
    z[0] = nt
    l = r = 0
    for i in range(1, nt):
        if i < r:
            z[i] = min(r - i, z[i - l])
        while i + z[i] < nt and t[z[i]] == t[i + z[i]]:
            z[i] += 1
        if i + z[i] > r:
            l, r = i, i + z[i]
    return [min(z[m + 1 + j], m) for j in range(len(symbols))]


def lz_parse(w: Text, ctx: SuffixContext | None = None) -> Parsing:
    """Greedy LZ with self-overlap allowed; phrase count = z(w)."""
    if len(w) == 0:
        raise ValueError("cannot parse the empty text")
    matcher = _SuffixMatcher(w, ctx)
    n = len(w)
    phrases: list[Phrase] = []
    i0 = 0
    while i0 < n:
        ell, src0 = matcher.longest_earlier_match(i0)
        if ell == 0:
            phrases.append(Phrase(i0 + 1, 1, None))
            i0 += 1
        else:
            phrases.append(Phrase(i0 + 1, ell, src0 + 1))
            i0 += ell
    return Parsing(tuple(phrases), "lz")


def lz_no_overlap(w: Text, ctx: SuffixContext | None = None) -> Parsing:
    """Greedy LZ with sources completely to the left; count = z_no(w)."""
    if len(w) == 0:
        raise ValueError("cannot parse the empty text")
    matcher = _SuffixMatcher(w, ctx)
    n = len(w)
    phrases: list[Phrase] = []
    i0 = 0
    while i0 < n:
        ell, src0 = matcher.longest_nonoverlapping_match(i0)
        if ell == 0:
            phrases.append(Phrase(i0 + 1, 1, None))
            i0 += 1
        else:
            phrases.append(Phrase(i0 + 1, ell, src0 + 1))
            i0 += ell
    return Parsing(tuple(phrases), "lz_no")


def _end_aligned_candidates(
    match: list[int], ends: list[int], i0: int, n: int
) -> dict[int, int]:
    """All feasible end-aligned phrase lengths at position i0.

    Returns {length: source0}.  A length ell qualifies iff the prefix
    w[i0:i0+ell] occurs starting at some j0 < i0 with its last position
    j0+ell-1 equal to a boundary in `ends` (1-based ends, all < i0+1).
    """
    found: dict[int, int] = {}
    for j0 in range(i0):
        mj = min(match[j0], n - i0)
        if mj <= 0:
            continue
        lo_e, hi_e = j0 + 1, min(j0 + mj, i0)
        if lo_e > hi_e:
            continue
        a = bisect_left(ends, lo_e)
        b = bisect_right(ends, hi_e)
        for e in ends[a:b]:
            ell = e - j0
            if ell not in found:
                found[ell] = j0
    return found


def lz_end_greedy(w: Text, ctx: SuffixContext | None = None) -> Parsing:
    """Greedy end-aligned LZ; phrase count = z_e(w).

    Feasible lengths at a position are not downward closed (an
    occurrence ending at a boundary says nothing about its shorter
    prefixes), so the maximum is taken over all (source, boundary)
    combinations: per source start j the best candidate is the largest
    boundary within the match range of j, found by binary search.
    """
    if len(w) == 0:
        raise ValueError("cannot parse the empty text")
    n = len(w)
    matcher = _SuffixMatcher(w, ctx)
    phrases: list[Phrase] = []
    ends = np.empty(n, dtype=np.int64)
    n_ends = 0
    i0 = 0
    while i0 < n:
        best_ell, best_src = 0, -1
        if n_ends:
            match = matcher.match_all(i0)
            j = np.arange(i0)
            m = np.minimum(match[:i0], n - i0)
            hi = np.minimum(j + m, i0)
            idx = np.searchsorted(ends[:n_ends], hi, side="right") - 1
            e = ends[np.maximum(idx, 0)]
            ell = e - j
            ell[(m <= 0) | (idx < 0) | (e <= j)] = 0
            best_ell = int(ell.max()) if i0 else 0
            if best_ell > 0:
                best_src = int(np.argmax(ell))
        if best_ell == 0:
            phrases.append(Phrase(i0 + 1, 1, None))
            end = i0 + 1
            i0 += 1
        else:
            phrases.append(Phrase(i0 + 1, best_ell, best_src + 1))
            end = i0 + best_ell
            i0 += best_ell
        ends[n_ends] = end
        n_ends += 1
    return Parsing(tuple(phrases), "lz_end_greedy")


def lz_end_optimal(
    w: Text, node_budget: int = 10**6, ctx: SuffixContext | None = None
) -> tuple[Parsing, bool]:
    """Smallest end-aligned parsing; count = z_end(w).

    Shortcut: z(w) <= z_end(w) <= z_e(w), so when the greedy overlap
    parse and the greedy end-aligned parse have the same size the
    greedy end-aligned parsing is already optimal.  Otherwise a
    depth-first search over (position, boundary set) states runs with
    branch-and-bound pruning; per-position match arrays are memoized.
    Exactness is False when node_budget is exhausted (the best parsing
    found so far is returned).
    """
    if len(w) == 0:
        raise ValueError("cannot parse the empty text")
    if node_budget < 1:
        raise ValueError("node_budget must be positive")
    greedy = lz_end_greedy(w, ctx)
    base = lz_parse(w, ctx)
    if len(base) == len(greedy):
        return Parsing(greedy.phrases, "lz_end"), True

    s = w.symbols
    n = len(s)
    matcher = _SuffixMatcher(w, ctx)
    # Lower bound ignoring end-alignment: greedy jumps over the longest
    # earlier match are optimal for that relaxation.
    maxlen = [max(1, matcher.longest_earlier_match(i)[0]) for i in range(n)]
    lb = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lb[i] = 1 + lb[i + maxlen[i]]

    match_memo: dict[int, list[int]] = {}
    best_count = len(greedy)
    best_phrases = list(greedy.phrases)
    nodes = 0
    exhausted = False
    path: list[Phrase] = []
    ends: list[int] = []

    def dfs(i0: int, count: int) -> None:
        nonlocal nodes, exhausted, best_count, best_phrases
        if exhausted:
            return
        nodes += 1
        if nodes > node_budget:
            exhausted = True
            return
        if i0 == n:
            if count < best_count:
                best_count = count
                best_phrases = list(path)
            return
        if count + lb[i0] >= best_count:
            return
        if i0 not in match_memo:
            match_memo[i0] = _match_lengths(s, i0)
        cands = _end_aligned_candidates(match_memo[i0], ends, i0, n)
        moves = sorted(cands, reverse=True)
        if 1 not in cands:
            moves.append(1)
        for ell in moves:
            src0 = cands.get(ell)
            path.append(Phrase(i0 + 1, ell, None if src0 is None else src0 + 1))
            ends.append(i0 + ell)
            dfs(i0 + ell, count + 1)
            ends.pop()
            path.pop()
            if exhausted:
                return

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 200))
    try:
        dfs(0, 0)
    finally:
        sys.setrecursionlimit(old_limit)
    return Parsing(tuple(best_phrases), "lz_end"), not exhausted
