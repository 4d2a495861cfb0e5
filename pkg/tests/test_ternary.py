from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cantor_bracket, digits_by_floor, gaps_to_depth, value_of
from pathcomp.errors import InvalidOrder, OutOfRange
from pathcomp.ternary import (
    CantorGap,
    CantorKind,
    TernaryExpansion,
    as_rational,
    cantor_function,
    cantor_preimage,
    classify,
    enumerate_gaps,
    gaps_between,
    ternary_expand,
)

unit_rationals = st.fractions(min_value=0, max_value=1, max_denominator=500)


def test_expand_known_values():
    assert ternary_expand(0) == TernaryExpansion((), ())
    assert ternary_expand(F(1, 3)) == TernaryExpansion((1,), ())
    assert ternary_expand(F(1, 3)).alternate() == TernaryExpansion((0,), (2,))
    assert ternary_expand(F(1, 4)) == TernaryExpansion((), (0, 2))
    assert ternary_expand(1) == TernaryExpansion((), (2,))


def test_expand_serialization():
    assert str(ternary_expand(F(1, 4))) == "0.(02)"
    assert str(ternary_expand(F(1, 3))) == "0.1"
    assert str(ternary_expand(0)) == "0.0"
    assert str(ternary_expand(F(5, 18))) == "0.02(1)"


@given(unit_rationals)
def test_expand_roundtrip_and_digits(x):
    exp = ternary_expand(x)
    assert value_of(exp.preperiod, exp.period, 3) == x
    if x < 1:
        stream = list(exp.preperiod) + list(exp.period) * 5
        k = min(len(stream), 30)
        padded = (stream + [0] * k)[:k]
        assert padded == digits_by_floor(x, 3, k)


def test_rational_literals():
    assert as_rational("3/6") == F(1, 2)
    assert as_rational(" 1 ") == 1
    with pytest.raises(OutOfRange):
        as_rational("4/3")
    with pytest.raises(OutOfRange):
        as_rational("one half")
    with pytest.raises(TypeError):
        as_rational(0.5)


@pytest.mark.parametrize(
    "x, kind, gap",
    [
        (F(1, 2), CantorKind.IN_GAP, (1, F(1, 3), F(2, 3))),
        (F(1, 3), CantorKind.LEFT_ENDPOINT, (1, F(1, 3), F(2, 3))),
        (F(2, 3), CantorKind.RIGHT_ENDPOINT, (1, F(1, 3), F(2, 3))),
        (F(0), CantorKind.INTERIOR, None),
        (F(1), CantorKind.INTERIOR, None),
        (F(1, 4), CantorKind.INTERIOR, None),
        (F(1, 6), CantorKind.IN_GAP, (2, F(1, 9), F(2, 9))),
        (F(7, 9), CantorKind.LEFT_ENDPOINT, (2, F(7, 9), F(8, 9))),
    ],
)
def test_classify_examples(x, kind, gap):
    cls = classify(x)
    assert cls.kind is kind
    if gap is None:
        assert cls.gap is None
    else:
        assert (cls.gap.level, cls.gap.left, cls.gap.right) == gap


def test_gap_parity():
    assert classify(F(1, 2)).gap.parity == "odd"
    assert classify(F(1, 6)).gap.parity == "even"


def test_classify_against_gap_enumeration():
    depth = 6
    gaps = gaps_to_depth(depth)
    grid = 3 ** (depth + 1)
    for i in range(grid + 1):
        x = F(i, grid)
        owners = [(k, a, b) for k, a, b in gaps if a <= x <= b]
        cls = classify(x)
        if owners:
            assert len(owners) == 1
            k, a, b = owners[0]
            assert (cls.gap.level, cls.gap.left, cls.gap.right) == (k, a, b)
            expected = (
                CantorKind.LEFT_ENDPOINT if x == a else CantorKind.RIGHT_ENDPOINT if x == b else CantorKind.IN_GAP
            )
            assert cls.kind is expected
        else:
            # not within a gap of level <= depth: either in C or in a deeper gap
            assert cls.kind is CantorKind.INTERIOR or cls.gap.level > depth


@given(unit_rationals)
def test_membership_matches_digit_criterion(x):
    in_c = any(stream.avoids_one() for stream in ternary_expand(x).streams())
    assert in_c == classify(x).in_cantor


@given(unit_rationals)
def test_classify_depends_on_value_only(x):
    scaled = F(x.numerator * 7, x.denominator * 7)
    assert classify(scaled) == classify(x)
    assert classify(str(x)) == classify(x)


def test_enumerated_gaps_are_consistent():
    gaps = list(enumerate_gaps(7))
    assert [(g.level, g.left, g.right) for g in gaps] == [
        (k, a, b) for k, a, b in sorted(gaps_to_depth(7), key=lambda t: (t[0], t[1]))
    ]
    for g in gaps:
        assert g.right - g.left == F(1, 3**g.level)
        assert classify(g.left).kind is CantorKind.LEFT_ENDPOINT and classify(g.left).gap == g
        assert classify(g.right).kind is CantorKind.RIGHT_ENDPOINT and classify(g.right).gap == g
        assert classify(g.midpoint).kind is CantorKind.IN_GAP


def test_malformed_gap_rejected():
    with pytest.raises(ValueError):
        CantorGap(1, F(1, 3), F(1, 2))


@pytest.mark.parametrize("x, value", [(0, 0), (1, 1), (F(1, 3), F(1, 2)), (F(2, 3), F(1, 2)), (F(1, 4), F(1, 3))])
def test_cantor_known_values(x, value):
    assert cantor_function(x) == value


@given(unit_rationals)
def test_cantor_within_bisection_bracket(x):
    lo, hi = cantor_bracket(x, 20)
    assert lo <= cantor_function(x) <= hi


@given(st.lists(unit_rationals, min_size=2, max_size=30))
def test_cantor_monotone(xs):
    values = [cantor_function(x) for x in sorted(xs)]
    assert values == sorted(values)


def test_cantor_collapses_gap_closures():
    for g in list(enumerate_gaps(7))[:100]:
        v = cantor_function(g.left)
        assert cantor_function(g.right) == v
        assert cantor_function(g.midpoint) == v
        assert cantor_function(g.left + (g.right - g.left) / 7) == v


@given(unit_rationals)
def test_cantor_preimage_inverts(t):
    pre = cantor_preimage(t)
    if isinstance(pre, CantorGap):
        assert cantor_function(pre.left) == t == cantor_function(pre.right)
    else:
        assert classify(pre).kind is CantorKind.INTERIOR
        assert cantor_function(pre) == t


def test_cantor_preimage_examples():
    assert cantor_preimage(F(1, 3)) == F(1, 4)
    assert cantor_preimage(F(1, 2)) == CantorGap(1, F(1, 3), F(2, 3))
    assert cantor_preimage(0) == 0 and cantor_preimage(1) == 1


def test_gaps_between_examples():
    assert gaps_between(0, 1, "odd", 1) == [CantorGap(1, F(1, 3), F(2, 3))]
    assert gaps_between(0, 1, "even", 1) == [CantorGap(2, F(1, 9), F(2, 9))]
    assert gaps_between(F(1, 3), F(2, 3), "any", 5) == []
    assert gaps_between(0, F(1, 4), "odd", 1) == [CantorGap(3, F(1, 27), F(2, 27))]
    with pytest.raises(InvalidOrder):
        gaps_between(F(1, 2), F(1, 2))


def test_gaps_between_matches_enumeration():
    pool = gaps_to_depth(12)
    for x, y in [(0, 1), (F(1, 5), F(4, 5)), (F(2, 3), F(3, 4)), (F(1, 10), F(1, 7))]:
        got = gaps_between(x, y, "any", 12)
        expected = sorted((k, a, b) for k, a, b in pool if x < a and b < y)[: len(got)]
        assert [(g.level, g.left, g.right) for g in got] == expected


@settings(max_examples=200)
@given(unit_rationals, unit_rationals, st.sampled_from(["odd", "even", "any"]))
def test_gaps_between_properties(x, y, parity):
    if x == y:
        return
    x, y = min(x, y), max(x, y)
    got = gaps_between(x, y, parity, 3)
    g = classify((x + y) / 2).gap
    inside_one_gap = g is not None and g.left <= x and y <= g.right
    assert (got == []) == inside_one_gap
    if got:
        assert len(got) == 3
    for gap in got:
        assert x < gap.left and gap.right < y
        assert parity == "any" or gap.parity == parity
    assert got == sorted(got, key=lambda g: (g.level, g.left))
