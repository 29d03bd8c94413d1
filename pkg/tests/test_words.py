from math import comb

import pytest
from hypothesis import given, settings

from conftest import signed_words
from oracles import brute_pairing, iso_by_bijection, naive_count
from curvesci.words import (
    EMPTY,
    SignedWord,
    WordParseError,
    WordValidationError,
    are_isomorphic,
    canonical_form,
    count_words,
    enumerate_words,
    format_word,
    indicator,
    pairing,
    parse_word,
    subwords_of_size,
)


def W(s):
    return parse_word(s)


# --- parsing ------------------------------------------------------------------------


def test_parse_examples():
    assert parse_word("") == EMPTY
    assert parse_word("aBaB").letters == (1, -2, 1, -2)
    assert parse_word("a+ a+ b- b-").letters == (1, 1, -2, -2)
    with pytest.raises(WordValidationError):
        parse_word("aab")


@pytest.mark.parametrize("bad", ["a+ b", "a+ +", "a* a*", "0+ 0+", "a+ a+ b-- b--"])
def test_parse_errors(bad):
    with pytest.raises(WordParseError):
        parse_word(bad)


@pytest.mark.parametrize("bad", ["aA", "a+ a-", "1+ 1+ 1+", "abc"])
def test_validation_errors(bad):
    with pytest.raises(WordValidationError):
        parse_word(bad)


def test_token_names():
    w = parse_word("5- 2+ 2+ 5-")
    assert w.letters == (-5, 2, 2, -5)
    w = parse_word("x1+ y- x1+ y-")
    assert canonical_form(w) == W("aBaB")


@given(signed_words())
def test_format_round_trip(w):
    assert parse_word(format_word(w)) == w
    assert parse_word(format_word(w, "token")) == w


def test_token_output_above_26():
    w = SignedWord([27, 27])
    assert format_word(w) == "27+ 27+"
    assert parse_word(format_word(w)) == w


def test_direct_construction_validates():
    with pytest.raises(WordValidationError):
        SignedWord([1, -1])
    with pytest.raises(WordValidationError):
        SignedWord([1, 2, 1])


# --- canonical form and isomorphism --------------------------------------------------


def test_canonical_examples():
    assert canonical_form(SignedWord([-5, 2, 2, -5])) == SignedWord([-1, 2, 2, -1])
    assert canonical_form(EMPTY) == EMPTY
    assert canonical_form(SignedWord([2, 1, 1, 2])) == SignedWord([1, 2, 2, 1])


def test_isomorphism_examples():
    assert are_isomorphic(SignedWord([-1, 2, 2, -1]), SignedWord([-5, 2, 2, -5]))
    assert not are_isomorphic(SignedWord([-1, 2, 2, -1]), SignedWord([1, -2, -2, 1]))
    assert are_isomorphic(EMPTY, EMPTY)


@given(signed_words())
def test_canonical_idempotent(w):
    c = canonical_form(w)
    assert canonical_form(c) == c


@given(signed_words(max_n=4), signed_words(max_n=4))
@settings(max_examples=200)
def test_isomorphism_matches_bijection_search(u, v):
    assert are_isomorphic(u, v) == iso_by_bijection(u, v)


@given(signed_words(max_n=3), signed_words(max_n=3), signed_words(max_n=3))
def test_isomorphism_is_equivalence(a, b, c):
    assert are_isomorphic(a, a)
    assert are_isomorphic(a, b) == are_isomorphic(b, a)
    if are_isomorphic(a, b) and are_isomorphic(b, c):
        assert are_isomorphic(a, c)


def test_indicator_examples():
    assert indicator(W("aa"), SignedWord([5, 5])) == 1
    assert indicator(W("aa"), W("AA")) == 0
    assert indicator(EMPTY, EMPTY) == 1


# --- subwords and pairing ----------------------------------------------------------


def test_subword_examples():
    subs = [canonical_form(s) for s in subwords_of_size(W("AbAb"), 1)]
    assert subs == [W("AA"), W("aa")]
    assert subwords_of_size(W("abab"), 0) == [EMPTY]
    three = subwords_of_size(W("abcabc"), 2)
    assert len(three) == 3
    assert all(are_isomorphic(s, W("abab")) for s in three)
    assert subwords_of_size(W("aa"), 2) == []


@given(signed_words())
def test_subword_count_is_binomial(w):
    for k in range(w.n + 1):
        subs = subwords_of_size(w, k)
        assert len(subs) == comb(w.n, k)
        for s in subs:
            assert s.n == k
            assert [x for x in w.letters if abs(x) in {abs(y) for y in s.letters}] == list(s.letters)


def test_pairing_examples():
    assert pairing(W("aa"), W("AbbA")) == 1
    assert pairing(W("abab"), W("abcabc")) == 3
    assert pairing(EMPTY, W("aa")) == 1
    assert pairing(W("aa"), W("ABccBA")) == 1
    assert pairing(W("abab"), W("aa")) == 0


@given(signed_words())
def test_pairing_sums_to_binomial(w):
    for k in range(min(w.n, 3) + 1):
        assert sum(pairing(u, w) for u in enumerate_words(k)) == comb(w.n, k)


@given(signed_words())
def test_pairing_self(w):
    assert pairing(w, w) >= 1


@given(signed_words(max_n=3), signed_words(max_n=5))
@settings(max_examples=150)
def test_pairing_matches_brute_force(u, w):
    assert pairing(u, w) == brute_pairing(u, w)


# --- enumeration ---------------------------------------------------------------------


def test_enumeration_small():
    assert list(enumerate_words(0)) == [EMPTY]
    assert list(enumerate_words(1)) == [W("aa"), W("AA")]
    assert len(list(enumerate_words(2))) == 12


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_enumeration_matches_naive_count(n):
    words = list(enumerate_words(n))
    assert len(words) == naive_count(n) == count_words(n)
    assert len(set(words)) == len(words)
    assert all(canonical_form(w) == w for w in words)


def test_enumeration_order_is_sorted():
    words = list(enumerate_words(3))
    assert words == sorted(words, key=lambda w: w.sort_key())


def test_enumeration_is_a_stream():
    gen = enumerate_words(8)
    first = next(gen)
    assert first == W("aabbccddeeffgghh")
