import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fusionkl.errors import BadQ, InvalidArgument, NonCoprime, UnsupportedP
from fusionkl.level import (
    STANDARD,
    BraidingVariant,
    Level,
    all_variants,
    classify_level,
    cocycle_sign,
    conformal_weight,
    level_representations,
    make_level,
    parity,
    parse_level,
)

from conftest import levels


def test_make_level_valid():
    lv = make_level(3, 1)
    assert (lv.p, lv.q) == (3, 1)
    assert lv.kappa == 3 and lv.k == 1


@pytest.mark.parametrize(
    "p, q, err",
    [(4, 2, NonCoprime), (1, 3, UnsupportedP), (3, 0, BadQ), (0, 1, UnsupportedP)],
)
def test_make_level_rejects(p, q, err):
    with pytest.raises(err):
        make_level(p, q)


def test_distinct_diagnostics():
    codes = set()
    for p, q in [(4, 2), (1, 3), (3, 0)]:
        try:
            make_level(p, q)
        except Exception as exc:
            codes.add(exc.code)
    assert len(codes) == 3


def test_conformal_weight_examples():
    assert conformal_weight(Level(3, 1), 2) == Fraction(1, 4)
    assert conformal_weight(Level(5, 2), 1) == 0
    assert conformal_weight(Level(2, 1), 4) == Fraction(15, 8)
    with pytest.raises(InvalidArgument):
        conformal_weight(Level(3, 1), 0)


@given(levels(), st.integers(1, 80), st.integers(1, 80))
def test_weight_differences_have_denominator_dividing_4p(lv, r, s):
    diff = conformal_weight(lv, r) - conformal_weight(lv, s)
    assert (4 * lv.p) % diff.denominator == 0


def test_parity_and_cocycle():
    assert [parity(w) for w in (0, 1, 6)] == [0, 1, 0]
    with pytest.raises(InvalidArgument):
        parity(-1)
    assert cocycle_sign(1, 1, 1) == -1
    assert cocycle_sign(0, 1, 1) == 1
    assert cocycle_sign(0, 0, 0) == 1
    with pytest.raises(InvalidArgument):
        cocycle_sign(2, 0, 0)


def test_eight_variants():
    vs = all_variants()
    assert len(set(vs)) == 8
    with pytest.raises(InvalidArgument):
        BraidingVariant("sideways", "+")


@pytest.mark.parametrize(
    "p, qp, q, flavor, sign",
    [
        (3, 7, 1, "twisted", "-"),
        (3, 2, 2, "standard", "+"),
        # 8 = -2 + 2*1*5, n = 1 odd with the minus sign
        (5, 8, 2, "twisted-reverse", "-"),
        (5, 12, 2, "twisted", "-"),
        (5, 18, 2, "reverse", "+"),
        (3, 13, 1, "standard", "+"),
    ],
)
def test_classify_examples(p, qp, q, flavor, sign):
    assert classify_level(p, qp) == (Level(p, q), BraidingVariant(flavor, sign))


def test_representation_unique_brute_force():
    for p in range(2, 12):
        for qp in range(1, 201):
            if math.gcd(p, qp) != 1:
                continue
            brute = [
                (q, n, s)
                for n in range(0, 60)
                for q in range(1, p)
                for s in "+-"
                if (s == "+" and qp == q + 2 * n * p) or (s == "-" and n >= 1 and qp == -q + 2 * n * p)
            ]
            assert len(brute) == 1
            assert level_representations(p, qp) == brute


@given(levels(max_p=11))
def test_classify_idempotent(lv):
    canon, _ = classify_level(lv.p, lv.q)
    assert classify_level(canon.p, canon.q) == (canon, STANDARD)


def test_parse_level():
    assert parse_level("5/2") == Level(5, 2)
    with pytest.raises(InvalidArgument):
        parse_level("five")
    with pytest.raises(NonCoprime):
        parse_level("6/4")
