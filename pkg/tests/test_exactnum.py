from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hankel_approx.errors import ParseError, ZeroDenominator
from hankel_approx.exactnum import (
    DEFAULT_DIGITS,
    DecimalString,
    binomial,
    format_rational,
    harmonic,
    make_rational,
    parse_decimal,
    parse_rational,
    rat_to_decimal,
)


def test_make_rational_canonicalizes():
    assert make_rational(2, 4) == Fraction(1, 2)
    assert make_rational(-6, 4) == Fraction(-3, 2)
    assert make_rational(3, -6) == Fraction(-1, 2)
    assert make_rational(0, 7) == 0
    assert make_rational(5) == 5


def test_make_rational_zero_denominator():
    with pytest.raises(ZeroDenominator):
        make_rational(1, 0)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("9/41", Fraction(9, 41)),
        ("-3", Fraction(-3)),
        ("0", Fraction(0)),
        ("12/8", Fraction(3, 2)),
        ("-10/4", Fraction(-5, 2)),
        ("  7/2  ", Fraction(7, 2)),
    ],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1.5", "1/2/3", "1/-2", "+3", "1 /2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse_rational("1/0")


def test_format_rational():
    assert format_rational(Fraction(9, 41)) == "9/41"
    assert format_rational(Fraction(-3)) == "-3"
    assert format_rational(Fraction(0)) == "0"


def test_parse_format_roundtrip_random():
    rng = random.Random(20240917)
    for _ in range(1000):
        r = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**9))
        assert parse_rational(format_rational(r)) == r


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0.5772156649", Fraction(5772156649, 10**10)),
        ("-1.25", Fraction(-5, 4)),
        ("2.0", Fraction(2)),
    ],
)
def test_parse_decimal(text, expected):
    assert parse_decimal(text) == expected


@pytest.mark.parametrize("text", ["5", ".5", "1.", "1e3", "1.2.3", ""])
def test_parse_decimal_rejects(text):
    with pytest.raises(ParseError):
        parse_decimal(text)


def test_rat_to_decimal_known_values():
    assert rat_to_decimal(Fraction(9, 41), 10).text == "0.2195121951"
    # 135/89 = 1.51685393258...; the 10th digit rounds the 9th up
    assert rat_to_decimal(Fraction(135, 89), 9).text == "1.516853933"
    assert rat_to_decimal(Fraction(135, 89), 9, mode="truncate").text == "1.516853932"
    assert rat_to_decimal(Fraction(1, 2), 1).text == "0.5"
    assert rat_to_decimal(Fraction(0), 3).text == "0.000"
    assert rat_to_decimal(Fraction(1234, 10), 2).text == "123.40"


def test_rat_to_decimal_half_rounds_away_from_zero():
    assert rat_to_decimal(Fraction(1, 20), 1).text == "0.1"
    assert rat_to_decimal(Fraction(-1, 20), 1).text == "-0.1"
    assert rat_to_decimal(Fraction(1, 20), 1, mode="truncate").text == "0.0"
    assert rat_to_decimal(Fraction(-1, 20), 1, mode="truncate").text == "-0.0"


def test_rat_to_decimal_rejects_bad_arguments():
    with pytest.raises(ValueError):
        rat_to_decimal(Fraction(1, 2), 0)
    with pytest.raises(ValueError):
        rat_to_decimal(Fraction(1, 2), 5, mode="banker")


def test_rat_to_decimal_default_digits():
    assert rat_to_decimal(Fraction(1, 3)).digits == DEFAULT_DIGITS


def test_decimal_string_roundtrip():
    d = rat_to_decimal(Fraction(41, 36), 6)
    assert isinstance(d, DecimalString)
    assert str(d) == d.text
    assert d.as_fraction() == parse_decimal(d.text)


def test_rendering_error_bound_random():
    # Both modes must land within one unit of the last printed digit.
    rng = random.Random(77003)
    for _ in range(1000):
        r = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        digits = rng.randint(1, 12)
        ulp = Fraction(1, 10**digits)
        rounded = rat_to_decimal(r, digits).as_fraction()
        assert abs(rounded - r) <= ulp / 2
        truncated = rat_to_decimal(r, digits, mode="truncate").as_fraction()
        assert abs(truncated - r) < ulp
        assert abs(truncated) <= abs(r)


def test_binomial():
    assert binomial(0, 0) == 1
    assert binomial(6, 2) == 15
    assert binomial(10, 10) == 1
    with pytest.raises(ValueError):
        binomial(5, 6)
    with pytest.raises(ValueError):
        binomial(5, -1)


def test_harmonic():
    assert harmonic(1) == 1
    assert harmonic(2) == Fraction(3, 2)
    assert harmonic(4) == Fraction(25, 12)
    with pytest.raises(ValueError):
        harmonic(0)


def test_huge_integers_render():
    # Determinants overflow CPython's default int<->str conversion cap;
    # importing the package must lift it.
    text = format_rational(Fraction(10**6000 + 1, 3))
    assert text.endswith("/3")
    assert parse_rational(text) == Fraction(10**6000 + 1, 3)
