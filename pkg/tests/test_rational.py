from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mintough.rational import INFINITY, ZERO, ExtendedRational


def test_normalises_and_prints():
    assert str(ExtendedRational(2, 4)) == "1/2"
    assert str(ExtendedRational(3, 1)) == "3"
    assert str(INFINITY) == "inf"
    assert ExtendedRational(2, 4) == Fraction(1, 2)


def test_infinity_above_everything():
    assert INFINITY > ExtendedRational(10 ** 9)
    assert ZERO < ExtendedRational(1, 10 ** 9) < INFINITY
    assert INFINITY == ExtendedRational(infinite=True)


def test_json_forms():
    assert ExtendedRational(1, 3).to_json() == {"num": 1, "den": 3}
    assert INFINITY.to_json() == "inf"
    assert ExtendedRational.from_json(json.loads(json.dumps(INFINITY.to_json()))) == INFINITY


@given(st.integers(0, 50), st.integers(1, 50))
def test_json_round_trip(p, q):
    x = ExtendedRational(p, q)
    assert ExtendedRational.from_json(json.loads(json.dumps(x.to_json()))) == x


@given(st.fractions(min_value=0, max_value=10), st.fractions(min_value=0, max_value=10))
def test_order_matches_fraction(a, b):
    assert (ExtendedRational.of(a) < ExtendedRational.of(b)) == (a < b)


def test_infinite_has_no_fraction():
    with pytest.raises(ValueError):
        INFINITY.fraction
