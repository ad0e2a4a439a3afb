from fractions import Fraction
from random import Random

import pytest

from foldef.poly import DEGREE_OF_ZERO, Poly, grlex_key, monomials_of_degree
from foldef.scalars import make_scalar

from gen import random_poly


def _vars(n=3):
    return tuple(Poly.variable(n, i) for i in range(n))


def test_addition_cancellation():
    x, y, _ = _vars()
    assert (x + y) + (-x) == y


def test_product():
    x, y, _ = _vars()
    assert x * y == Poly(3, {(1, 1, 0): 1})


def test_scale_by_zero_annihilates():
    x, _, _ = _vars()
    assert (x**2 * 0).is_zero()
    assert (x**2 * Fraction(0)).terms == {}


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError):
        Poly.variable(2, 0) + Poly.variable(3, 0)
    with pytest.raises(ValueError):
        Poly.variable(2, 0) * Poly.variable(3, 0)


def test_partial_derivative():
    x, y, z = _vars()
    assert (x**2 * y).diff(0) == 2 * x * y
    assert Poly.constant(3, 7).diff(0).is_zero()
    assert (x**3 + y**3 + z**3).diff(2) == 3 * z**2


def test_partial_derivative_index_range():
    with pytest.raises(IndexError):
        Poly.variable(3, 0).diff(3)
    with pytest.raises(IndexError):
        Poly.variable(3, 0).diff(-1)


def test_homogeneous_degree():
    x, y, _ = _vars()
    assert (x**2 * y).homogeneous_degree() == 3
    assert (x + y**2).homogeneous_degree() is None
    assert Poly.zero(3).homogeneous_degree() is DEGREE_OF_ZERO


def test_exact_divide():
    x, y, _ = _vars()
    assert (x * y).exact_div(x) == y
    assert (x**2 + x * y).exact_div(x) == x + y
    assert (x + y).exact_div(x) is None
    with pytest.raises(ZeroDivisionError):
        x.exact_div(Poly.zero(3))


def test_evaluate():
    x, y, z = _vars()
    assert (x**2 * y).evaluate([2, 3, 1]) == 12
    p = x**3 + 2 * y - 5
    assert p.evaluate([0, 0, 0]) == -5
    i = make_scalar(0, 1)
    q = x + y * i
    assert q.evaluate([1, 1, 0]) == make_scalar(1, 1)


def test_evaluate_length_mismatch():
    with pytest.raises(ValueError):
        Poly.variable(3, 0).evaluate([1, 2])


def test_ring_axioms_randomized():
    rng = Random(23)
    for _ in range(120):
        a = random_poly(rng, 3, 3)
        b = random_poly(rng, 3, 3)
        c = random_poly(rng, 3, 3)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_exact_divide_inverts_multiplication():
    rng = Random(31)
    for _ in range(80):
        q = random_poly(rng, 3, 2)
        den = random_poly(rng, 3, 2)
        if den.is_zero():
            continue
        assert (q * den).exact_div(den) == q


def test_homogeneous_degree_multiplicative():
    rng = Random(7)
    from gen import random_homogeneous_poly

    for _ in range(60):
        a = random_homogeneous_poly(rng, 3, rng.randint(1, 3))
        b = random_homogeneous_poly(rng, 3, rng.randint(1, 3))
        assert (a * b).homogeneous_degree() == a.homogeneous_degree() + b.homogeneous_degree()


def test_canonical_form_uniqueness():
    x, y, _ = _vars()
    a = (x + y) * (x - y)
    b = x**2 - y**2
    assert a == b
    assert a.terms == b.terms


def test_grlex_order():
    monos = monomials_of_degree(3, 2)
    assert monos == sorted(monos, key=grlex_key, reverse=True)
    assert monos[0] == (2, 0, 0)
    assert monos[-1] == (0, 0, 2)
    x, y, z = _vars()
    assert (x * z + y**2).leading_term()[0] == (1, 0, 1)


def test_lift_and_substitute():
    x, y, z = _vars()
    p = x * y + z**2
    lifted = p.lift(4)
    assert lifted.ambient_dim == 4
    assert lifted.substitute(3, 5) == lifted
    w_poly = Poly.variable(4, 3)
    q = lifted * w_poly
    assert q.substitute(3, 1).drop_last_variable() == p
    with pytest.raises(ValueError):
        q.drop_last_variable()


def test_power():
    x, y, _ = _vars()
    assert (x + y) ** 0 == Poly.constant(3, 1)
    assert (x + y) ** 3 == (x + y) * (x + y) * (x + y)
    with pytest.raises(ValueError):
        x ** -1
