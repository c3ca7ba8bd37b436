import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from revsense.bwt import bbwt, bwt, bwt_range, bwt_sentinel
from revsense.families import FamilySpec, generate, predict_transform
from revsense.suffixes import build_suffix_context
from revsense.text import Text, is_lyndon, lyndon_factorize, reverse

from oracles import random_symbols

nonempty_texts = st.lists(st.integers(0, 4), min_size=1, max_size=48).map(lambda s: Text(tuple(s)))


def test_worked_example():
    w = Text.from_str("baabaaba")
    res = bwt(w)
    assert res.output == Text.from_str("bbbaaaaa")
    assert res.run_count == 2
    assert res.variant == "plain"
    res_b = bbwt(w)
    assert res_b.output == Text.from_str("abbaaaab")
    assert res_b.run_count == 4


def test_u3_transforms():
    u3 = generate(FamilySpec("u_k", 3))
    assert bwt(u3).output == predict_transform(FamilySpec("u_k", 3), "plain")
    assert bwt(u3).run_count == 10
    assert bbwt(u3).output == predict_transform(FamilySpec("u_k", 3), "bijective")
    assert bbwt(u3).run_count == 11
    u3r = generate(FamilySpec("u_k_rev", 3))
    assert bwt(u3r).run_count == 13
    assert bbwt(u3r).run_count == 13


def test_sentinel_single_symbol():
    res = bwt_sentinel(Text.from_str("a"))
    assert res.output.display() == "a$"
    assert res.run_count == 2
    assert res.variant == "sentinel"


def test_sentinel_adds_one_run_on_block_family():
    for k in (1, 2, 5, 9):
        u = generate(FamilySpec("u_k", k))
        assert bwt_sentinel(u).run_count == bwt(u).run_count + 1
        ur = reverse(u)
        assert bwt_sentinel(ur).run_count == bwt(ur).run_count + 1


def test_sentinel_rejects_sentinel_in_input():
    w = Text((0,), {0: "$"})
    with pytest.raises(ValueError):
        bwt_sentinel(w)


@given(nonempty_texts)
def test_bwt_is_permutation(w):
    assert Counter(bwt(w).output.symbols) == Counter(w.symbols)
    assert Counter(bbwt(w).output.symbols) == Counter(w.symbols)
    shifted = Counter(r + 1 for r in w.symbols)
    shifted[0] += 1
    assert Counter(bwt_sentinel(w).output.symbols) == shifted


@given(nonempty_texts)
def test_bwt_matches_suffix_order_with_unique_terminal(w):
    ext = Text(tuple(r + 1 for r in w.symbols) + (0,))
    sa = build_suffix_context(ext).sa
    expected = tuple(ext.symbols[p - 2] for p in sa)
    assert bwt(ext).output.symbols == expected


def test_bbwt_equals_bwt_on_lyndon_words():
    rng = random.Random(41)
    seen = 0
    while seen < 300:
        w = Text(random_symbols(rng, 24))
        factors = lyndon_factorize(w)
        lyndon = factors[0]  # first factor is always Lyndon
        assert is_lyndon(lyndon)
        assert bbwt(lyndon).output == bwt(lyndon).output
        seen += 1


def test_bwt_range_examples():
    u3 = generate(FamilySpec("u_k", 3))
    names = u3.names
    a = Text((6,), names)   # rank of 'a' for k=3
    b = Text((7,), names)
    assert bwt_range(u3, a).display() == "b #_1 b #_2 b #_3"
    assert bwt_range(u3, b).display() == "&_3 &_1 &_2"
    u3r = generate(FamilySpec("u_k_rev", 3))
    assert bwt_range(u3r, b).display() == "aaa"
    assert bwt_range(u3, Text.from_str("zzz")) == Text(())
    with pytest.raises(ValueError):
        bwt_range(u3, Text(()))


@given(nonempty_texts)
def test_bwt_range_partition(w):
    chunks = []
    for c in sorted(set(w.symbols)):
        chunks.extend(bwt_range(w, Text((c,))).symbols)
    assert tuple(chunks) == bwt(w).output.symbols


def test_empty_rejected():
    for fn in (bwt, bbwt, bwt_sentinel):
        with pytest.raises(ValueError):
            fn(Text(()))
