from fractions import Fraction
from random import Random

import pytest

from foldef.scalars import (
    GaussianRational,
    make_scalar,
    render_scalar,
    scalar_parts,
    scalar_sqrt,
)
from foldef.expressions import parse_scalar


def test_make_scalar_collapses_real_values():
    assert make_scalar(3, 0) == Fraction(3)
    assert isinstance(make_scalar(3, 0), Fraction)
    assert isinstance(make_scalar(3, 1), GaussianRational)


def test_gaussian_with_zero_im_rejected():
    with pytest.raises(ValueError):
        GaussianRational(1, 0)


def test_arithmetic_collapses_to_fraction():
    i = make_scalar(0, 1)
    assert i * i == Fraction(-1)
    assert isinstance(i * i, Fraction)
    assert (1 + i) * (1 - i) == Fraction(2)
    assert i + (-i) == 0
    assert (1 + i) - (1 + i) == 0


def test_division():
    a = make_scalar(1, 1)
    assert a / a == 1
    assert 2 / a == make_scalar(1, -1)
    assert a / 2 == make_scalar(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(ZeroDivisionError):
        a / 0


def test_field_axioms_randomized():
    rng = Random(11)
    for _ in range(200):
        values = [
            make_scalar(Fraction(rng.randint(-5, 5), rng.randint(1, 3)),
                        Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
            for _ in range(3)
        ]
        a, b, c = values
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if a != 0:
            assert (b / a) * a == b


def test_equality_across_representations():
    assert make_scalar(Fraction(4, 2)) == 2
    assert make_scalar(1, 1) != 1
    assert make_scalar(1, 1) != Fraction(1)


def test_sqrt():
    assert scalar_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert scalar_sqrt(Fraction(2)) is None
    assert scalar_sqrt(Fraction(-4)) == make_scalar(0, 2)
    root = scalar_sqrt(make_scalar(0, 2))
    assert root is not None and root * root == make_scalar(0, 2)
    assert scalar_sqrt(make_scalar(3, 4)) == make_scalar(2, 1)


def test_render_parse_round_trip():
    rng = Random(5)
    for _ in range(100):
        value = make_scalar(
            Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
        )
        assert parse_scalar(render_scalar(value)) == value
    assert render_scalar(Fraction(-1, 2)) == "-1/2"
    assert render_scalar(make_scalar(0, 1)) == "i"
    assert render_scalar(make_scalar(1, -1)) == "1-i"


def test_parts():
    assert scalar_parts(Fraction(3, 2)) == (Fraction(3, 2), Fraction(0))
    assert scalar_parts(make_scalar(1, 2)) == (Fraction(1), Fraction(2))
