from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from conftest import signed_words
from oracles import brute_pairing
from curvesci.cyclic import WordVector, enumerate_classes, normalized_class, nu_shift_raw, orbit
from curvesci.sci import (
    Functional,
    audit_word,
    compose_sci,
    double_count_coefficient,
    iota,
    iota_inv,
    printed_coefficient,
    relation_audit,
    sci,
    sci_linear,
)
from curvesci.words import EMPTY, parse_word

W = parse_word


def brute_sci(n, gamma):
    """<[v], gamma> for every class v, summing brute-force pairings."""
    return Functional(
        n,
        {c.key: sum(brute_pairing(u, gamma) for u in c.members) for c in enumerate_classes(n)},
    )


def test_sci_examples():
    assert sci(1, W("AbAb"))(W("aa")) == 2
    for n in (1, 2, 3):
        assert sci(n, EMPTY).is_zero()
    F = sci(2, W("AABB"))
    assert F(W("AABB")) == 1
    assert F(W("aaBB")) == 0
    assert F(W("aabb")) == 0


def test_sci_order_zero():
    assert sci(0, W("abab")).to_json() == {"order": 0, "values": {"∅": "1"}}


@given(signed_words(max_n=4))
@settings(max_examples=40, deadline=None)
def test_sci_matches_brute_force(w):
    for n in range(w.n + 1):
        assert sci(n, w) == brute_sci(n, w)


@given(signed_words(max_n=5))
def test_completeness_identity(w):
    for k in range(w.n + 1):
        assert sum(v for _, v in sci(k, w).items()) == comb(w.n, k)


@given(signed_words(max_n=4))
def test_base_point_independence(w):
    v = w
    for _ in range(len(w)):
        v = nu_shift_raw(v)
        for m in range(w.n + 1):
            assert sci(m, v) == sci(m, w)


@given(signed_words(min_n=1, max_n=5))
def test_self_detection(w):
    F = sci(w.n, w)
    assert F(w) >= 1
    for c in enumerate_classes(w.n) if w.n <= 3 else []:
        if w not in c:
            assert F(c.key) == 0
    assert [k for k, _ in F.items()] == [orbit(w).key]


def test_sci_linear_examples():
    w = W("AbAb")
    assert sci_linear(1, normalized_class(w)) == sci(1, w)
    assert sci_linear(1, 2 * normalized_class(w))(W("aa")) == 4
    assert sci_linear(2, WordVector()).is_zero()


def test_sci_linear_rejects_bad_vectors():
    with pytest.raises(ValueError):
        sci_linear(1, WordVector({W("aa"): 1}))
    with pytest.raises(ValueError):
        sci_linear(1, normalized_class(W("aa")) + normalized_class(W("abab")))


def test_iota_examples():
    for c in enumerate_classes(2):
        F = iota(2, normalized_class(c.key))
        for d in enumerate_classes(2):
            assert F(normalized_class(d.key)) == (1 if c == d else 0)
    assert iota(2, WordVector()).is_zero()


def test_iota_inverse_examples():
    c = W("aBBa")
    assert iota_inv(iota(2, normalized_class(c))) == normalized_class(c)
    assert iota_inv(sci(2, W("AbAb"))) == normalized_class(W("AbAb"))
    assert iota_inv(Functional.zero(3)) == WordVector()


@given(signed_words(max_n=4))
def test_iota_round_trip(w):
    for k in range(w.n + 1):
        F = sci(k, w)
        assert iota(k, iota_inv(F)) == F


def test_compose_examples():
    g = W("AbAb")
    assert compose_sci(1, 2, g) == sci(1, g)
    assert compose_sci(1, 2, g)(W("aa")) == 2
    assert compose_sci(0, 1, g)(EMPTY) == 2
    assert compose_sci(0, 1, EMPTY).is_zero()
    assert compose_sci(1, 3, EMPTY).is_zero()
    with pytest.raises(ValueError):
        compose_sci(2, 1, g)


@given(signed_words(min_n=1, max_n=4))
def test_proportionality(w):
    for k in range(1, w.n + 1):
        assert compose_sci(k - 1, k, w) == (w.n - k + 1) * sci(k - 1, w)


def test_coefficients():
    assert printed_coefficient(1, 3, 3) == Fraction(1, 2)
    assert double_count_coefficient(1, 3, 3) == 1
    assert printed_coefficient(1, 2, 3) == 2 == double_count_coefficient(1, 2, 3)
    assert printed_coefficient(3, 3, 3) is None
    for n in range(2, 7):
        for k in range(2, n + 1):
            assert printed_coefficient(k - 1, k, n) == n - k + 1 == double_count_coefficient(k - 1, k, n)


def test_audit_rows():
    row = audit_word(1, 3, W("abcabc"))
    assert row.proportional and row.measured_lambda == 1
    assert row.closed_form == Fraction(1, 2)
    assert row.matches_oracle and not row.matches_printed
    row = audit_word(1, 2, W("abcabc"))
    assert row.measured_lambda == 2 and row.matches_printed
    rows = relation_audit(2, 3, [("x", W("aBcaBc")), W("aabbcc")])
    assert [r.label for r in rows] == ["x", None]
    assert all(r.measured_lambda == 1 == r.oracle_coefficient for r in rows)


def test_audit_parallel_matches_serial():
    corpus = [W(s) for s in ("abcabc", "aBcaBc", "aabbcc", "abccba", "AbcbcA")]
    assert relation_audit(1, 2, corpus, workers=2) == relation_audit(1, 2, corpus)


def test_functional_json_round_trip():
    F = sci(2, W("aBcaBcdd")) * Fraction(1, 3)
    assert Functional.from_json(F.to_json()) == F
    assert F.to_json()["values"]
    assert all("/" in v or v.isdigit() for v in F.to_json()["values"].values())


def test_functional_rejects_wrong_order():
    with pytest.raises(ValueError):
        Functional(2, {W("aa"): 1})
