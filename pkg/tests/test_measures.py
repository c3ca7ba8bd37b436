import random
from fractions import Fraction

import pytest

from revsense.families import FamilySpec, generate
from revsense.measures import (
    distinct_substring_counts,
    right_extension_count,
    right_extensions,
    substring_complexity,
)
from revsense.text import Text, reverse

from oracles import brute_delta, brute_right_extensions, random_symbols


def test_delta_examples():
    assert substring_complexity(Text.from_str("aaaa")) == Fraction(1)
    assert substring_complexity(Text.from_str("ab")) == Fraction(2)
    # maximum attained at k = 1 with five distinct symbols
    assert substring_complexity(Text.from_str("abracadabracabra")) == Fraction(5)
    assert brute_delta(Text.from_str("abracadabracabra").symbols) == Fraction(5)
    with pytest.raises(ValueError):
        substring_complexity(Text(()))


def test_distinct_substring_counts_small():
    # counts for "abab": length-1 -> 2, length-2 -> 2 (ab, ba), 3 -> 2, 4 -> 1
    assert distinct_substring_counts(Text.from_str("abab")) == [2, 2, 2, 1]


def test_delta_matches_brute_oracle():
    rng = random.Random(8)
    for _ in range(600):
        s = random_symbols(rng, 40)
        assert substring_complexity(Text(s)) == brute_delta(s)


def test_delta_reversal_invariant_sample():
    rng = random.Random(9)
    for _ in range(600):
        w = Text(random_symbols(rng, 48))
        assert substring_complexity(w) == substring_complexity(reverse(w))


def test_right_extensions_worked_examples():
    w = generate(FamilySpec("unary_plus", 6))       # a b^5
    ext = {t.display() for t in right_extensions(w)}
    assert ext == {"a", "b", "bb", "bbb", "bbbb", "bbbbb"}
    assert right_extension_count(w) == 6
    wr = reverse(w)                                  # b^5 a
    ext_r = {t.display() for t in right_extensions(wr)}
    assert ext_r == {"a", "ba", "bba", "bbba", "bbbba",
                     "b", "bb", "bbb", "bbbb", "bbbbb"}
    assert right_extension_count(wr) == 10
    assert {t.display() for t in right_extensions(Text.from_str("ab"))} == {"a", "b"}
    with pytest.raises(ValueError):
        right_extensions(Text(()))


def test_right_extensions_match_independent_oracle():
    rng = random.Random(10)
    for _ in range(400):
        s = random_symbols(rng, 24)
        got = {t.symbols for t in right_extensions(Text(s))}
        assert got == brute_right_extensions(s)


def test_right_extension_family_gap():
    for n in (2, 3, 10, 41):
        w = generate(FamilySpec("unary_plus", n))
        e_fwd = right_extension_count(w)
        e_rev = right_extension_count(reverse(w))
        assert e_fwd == n
        assert e_rev == 2 * (n - 1)
        assert e_rev - e_fwd == n - 2


def test_delta_lower_bounds_other_measures_on_families():
    # delta <= r, z, v on a reduced family grid
    from revsense.harness import _MeasureRunner
    grids = [("u_k", range(1, 16)), ("w_sigma", range(2, 41, 2)),
             ("T_p", range(1, 6)), ("fib_plus", range(8, 15, 2)),
             ("c_fib", range(9, 16, 2)), ("t55", [None])]
    for family, params in grids:
        for param in params:
            for fam in (family, family + "_rev"):
                w = generate(FamilySpec(fam, param))
                runner = _MeasureRunner(w)
                delta = runner.value("delta")[0]
                for m in ("r", "z", "v"):
                    assert delta <= runner.value(m)[0], (fam, param, m)
