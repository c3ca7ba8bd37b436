"""Burrows-Wheeler transform variants and their run-count measures.

* bwt          -- last column of the sorted rotation matrix; r = run count.
* bwt_sentinel -- BWT of w extended with a symbol smaller than all of
                  w's symbols; r_dollar = run count.
* bbwt         -- bijective variant: last characters of all rotations of
                  all Lyndon factors, in omega-order; r_b = run count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .suffixes import cyclic_rotation_order
from .text import Text, lyndon_factorize, omega_compare_symbols, rle
from .textio import SENTINEL_NAME


@dataclass(frozen=True)
class TransformResult:
    output: Text
    run_count: int
    variant: str


def _result(output: Text, variant: str) -> TransformResult:
    return TransformResult(output=output, run_count=len(rle(output)), variant=variant)


def bwt(w: Text) -> TransformResult:
    """Plain BWT over the rotations of w itself (no sentinel)."""
    if len(w) == 0:
        raise ValueError("BWT requires a non-empty text")
    s = w.symbols
    n = len(s)
    order = cyclic_rotation_order(w)
    out = tuple(s[p - 2] for p in order)  # p-2 = cyclic predecessor, works for p=1 too
    return _result(Text(out, w.names), "plain")


def bwt_sentinel(w: Text) -> TransformResult:
    """BWT of w with an appended minimal sentinel.

    The output alphabet is shifted: every input rank r becomes r+1 and
    the sentinel is rank 0, displayed as "$".
    """
    if len(w) == 0:
        raise ValueError("BWT requires a non-empty text")
    if w.names and SENTINEL_NAME in w.names.values():
        raise ValueError("input already contains the sentinel symbol")
    names = {r + 1: name for r, name in (w.names or {}).items()}
    names[0] = SENTINEL_NAME
    shifted = Text(tuple(r + 1 for r in w.symbols) + (0,), names)
    res = bwt(shifted)
    return TransformResult(res.output, res.run_count, "sentinel")


# key materialization for the omega sort is skipped above this many cells
_BBWT_KEY_CELLS = 50_000_000


def bbwt(w: Text) -> TransformResult:
    """Bijective BWT: rotations of the Lyndon factors in omega-order.

    Rotations are compared as infinite periodic strings.  The fast path
    extends every rotation cyclically to twice the longest factor
    length; that covers |x|+|y| positions for every pair, which decides
    the omega order exactly, and plain tuple sorting applies.  Very long
    factors fall back to pairwise omega comparison to bound memory.

    Ties (equal rotations across duplicated factors) keep factor order
    then rotation index; within a factor rotations are distinct because
    Lyndon words are primitive.
    """
    if len(w) == 0:
        raise ValueError("BBWT requires a non-empty text")
    factors = lyndon_factorize(w)
    max_len = max(len(f) for f in factors)
    if len(w) * 2 * max_len <= _BBWT_KEY_CELLS:
        key_len = 2 * max_len
        keyed: list[tuple[tuple[int, ...], int]] = []
        for factor in factors:
            fs = factor.symbols
            m = len(fs)
            doubled = fs * (key_len // m + 2)
            for i in range(m):
                keyed.append((doubled[i:i + key_len], fs[i - 1]))
        keyed.sort(key=lambda pair: pair[0])
        out = tuple(last for _key, last in keyed)
    else:
        rotations: list[tuple[int, ...]] = []
        for factor in factors:
            fs = factor.symbols
            m = len(fs)
            for i in range(m):
                rotations.append(fs[i:] + fs[:i])
        rotations.sort(key=cmp_to_key(omega_compare_symbols))
        out = tuple(rot[-1] for rot in rotations)
    return _result(Text(out, w.names), "bijective")


def bwt_range(w: Text, prefix: Text) -> Text:
    """Slice of bwt(w) over the rotations that start with `prefix`.

    Empty when no rotation matches.  The matching rows are contiguous
    in rotation order by construction.
    """
    if len(w) == 0 or len(prefix) == 0:
        raise ValueError("bwt_range requires non-empty text and prefix")
    s = w.symbols
    n = len(s)
    p = prefix.symbols
    order = cyclic_rotation_order(w)
    out: list[int] = []
    in_block = False
    for start in order:
        matches = all(s[(start - 1 + t) % n] == p[t] for t in range(min(len(p), n)))
        matches = matches and len(p) <= n
        if matches:
            out.append(s[start - 2])
            in_block = True
        elif in_block:
            break
    return Text(tuple(out), w.names)
