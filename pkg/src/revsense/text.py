"""Texts over integer-ranked alphabets, plus basic word combinatorics.

Symbols are plain non-negative ints and the integer order *is* the
alphabet order.  A Text couples the symbol sequence with an optional
rank -> display-name table so that synthetic alphabets (a_1 < ... <
a_s, interleaved marker symbols, ...) print readably.  All operations
here are pure functions on immutable values.

Positions reported by operations (rotation starts, occurrence starts)
are 1-based; Python-style indexing/slicing of a Text stays 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True, eq=False)
class Text:
    """Immutable symbol sequence with an optional display-name table."""

    symbols: tuple[int, ...]
    names: dict[int, str] | None = None

    def __post_init__(self) -> None:
        if any(r < 0 for r in self.symbols):
            raise ValueError("symbol ranks must be non-negative")
        if self.names is not None:
            vals = list(self.names.values())
            if len(set(vals)) != len(vals):
                raise ValueError("display names must be unique")

    # Equality and hashing ignore the name table: the same rank sequence
    # is the same text no matter how it is printed.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Text):
            return NotImplemented
        return self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Text(self.symbols[i], self.names)
        return self.symbols[i]

    def name_of(self, rank: int) -> str:
        if self.names and rank in self.names:
            return self.names[rank]
        if 33 <= rank < 127:
            return chr(rank)
        return f"<{rank}>"

    def display(self, sep: str | None = None) -> str:
        """Human-readable form; single-character alphabets concatenate,
        everything else joins tokens with a space."""
        parts = [self.name_of(r) for r in self.symbols]
        if sep is None:
            sep = "" if all(len(p) == 1 for p in parts) else " "
        return sep.join(parts)

    def __repr__(self) -> str:
        return f"Text({self.display()!r})"

    @classmethod
    def from_str(cls, s: str) -> "Text":
        """Text whose ranks are character ordinals, named by the characters."""
        return cls(tuple(ord(c) for c in s), {ord(c): c for c in set(s)})

    @classmethod
    def from_ranks(cls, ranks: Sequence[int], names: dict[int, str] | None = None) -> "Text":
        return cls(tuple(ranks), names)


def concat(*parts: Text) -> Text:
    """Concatenate texts, merging their name tables."""
    names: dict[int, str] = {}
    symbols: list[int] = []
    for p in parts:
        if p.names:
            names.update(p.names)
        symbols.extend(p.symbols)
    return Text(tuple(symbols), names or None)


def reverse(w: Text) -> Text:
    return Text(w.symbols[::-1], w.names)


def rotate(w: Text, i: int) -> Text:
    """Rotation starting at 1-based position i: w[i..n] w[1..i-1]."""
    if len(w) == 0:
        raise ValueError("cannot rotate the empty text")
    if not 1 <= i <= len(w):
        raise ValueError(f"rotation start {i} out of range [1, {len(w)}]")
    s = w.symbols
    return Text(s[i - 1:] + s[:i - 1], w.names)


@dataclass(frozen=True)
class RunLengthEncoding:
    """Maximal equal-symbol runs, as (symbol, count) pairs."""

    runs: tuple[tuple[int, int], ...]
    names: dict[int, str] | None = None

    def __len__(self) -> int:
        return len(self.runs)

    def expand(self) -> Text:
        symbols: list[int] = []
        for sym, cnt in self.runs:
            symbols.extend([sym] * cnt)
        return Text(tuple(symbols), self.names)

    def display(self) -> str:
        t = Text((), self.names)
        return " ".join(f"({t.name_of(s)},{c})" for s, c in self.runs)


def rle(w: Text) -> RunLengthEncoding:
    runs: list[tuple[int, int]] = []
    for sym in w.symbols:
        if runs and runs[-1][0] == sym:
            runs[-1] = (sym, runs[-1][1] + 1)
        else:
            runs.append((sym, 1))
    return RunLengthEncoding(tuple(runs), w.names)


def omega_compare(x: Text, y: Text) -> int:
    """Compare the infinite powers x^w and y^w lexicographically.

    Returns -1, 0 or 1.  Only the first |x|+|y| positions are examined:
    if x^w and y^w agree that far they agree everywhere (by Fine and
    Wilf both are then powers of a common primitive word), so the
    bounded scan is exact and 0 means x and y share a primitive root.
    """
    if len(x) == 0 or len(y) == 0:
        raise ValueError("omega order is defined for non-empty strings only")
    xs, ys = x.symbols, y.symbols
    nx, ny = len(xs), len(ys)
    for t in range(nx + ny):
        a, b = xs[t % nx], ys[t % ny]
        if a != b:
            return -1 if a < b else 1
    return 0


def omega_compare_symbols(xs: tuple[int, ...], ys: tuple[int, ...]) -> int:
    """omega_compare on raw symbol tuples (hot path for rotation sorting)."""
    nx, ny = len(xs), len(ys)
    for t in range(nx + ny):
        a, b = xs[t % nx], ys[t % ny]
        if a != b:
            return -1 if a < b else 1
    return 0


def is_lyndon(w: Text) -> bool:
    """True iff w is strictly smaller than all of its proper suffixes.

    Duval's test: the first factor of the Lyndon factorization spans w.
    Runs in O(n) time.
    """
    if len(w) == 0:
        raise ValueError("the empty text is not eligible for the Lyndon test")
    s = w.symbols
    n = len(s)
    j, k = 1, 0
    while j < n and s[k] <= s[j]:
        k = 0 if s[k] < s[j] else k + 1
        j += 1
    return j == n and k == 0


def lyndon_factorize(w: Text) -> list[Text]:
    """Unique factorization into non-increasing Lyndon factors (Duval)."""
    if len(w) == 0:
        raise ValueError("cannot factorize the empty text")
    s = w.symbols
    n = len(s)
    out: list[Text] = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and s[k] <= s[j]:
            k = i if s[k] < s[j] else k + 1
            j += 1
        step = j - k
        while i <= k:
            out.append(Text(s[i:i + step], w.names))
            i += step
    return out


def occurrences(pattern: Text, text: Text) -> list[int]:
    """All 1-based start positions of pattern in text (overlaps included), via KMP."""
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty")
    p, t = pattern.symbols, text.symbols
    m, n = len(p), len(t)
    if m > n:
        return []
    fail = [0] * m
    k = 0
    for i in range(1, m):
        while k and p[i] != p[k]:
            k = fail[k - 1]
        if p[i] == p[k]:
            k += 1
        fail[i] = k
    out: list[int] = []
    k = 0
    for i, c in enumerate(t):
        while k and c != p[k]:
            k = fail[k - 1]
        if c == p[k]:
            k += 1
            if k == m:
                out.append(i - m + 2)
                k = fail[k - 1]
    return out
