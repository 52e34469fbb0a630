from __future__ import annotations

from fractions import Fraction

import pytest

from macweyl.algebra import (
    CharacterSeries,
    LaurentPolynomial,
    PoleError,
    monomial_scalar,
    q_factorial,
    q_power,
    qpoly_coefficients,
    scalar,
    series_divide,
)

u = monomial_scalar(1, 1, 0)
v = monomial_scalar(1, 0, 1)


def test_canonical_form_makes_equality_structural():
    a = (1 - v * v) / (1 - v)
    assert a == 1 + v
    assert hash(a) == hash(1 + v)
    assert (u * v) / (v * u) == 1
    assert (-1 + u) / (1 - u) == -1


def test_arithmetic_against_rational_evaluation():
    x = (1 - u ** 4 * v ** 2) / (1 - v ** 2)
    y = (u - v) / (1 + u * v)
    for pt in [(Fraction(1, 2), Fraction(1, 3)), (Fraction(2), Fraction(-3, 5))]:
        xv, yv = x.evaluate(*pt), y.evaluate(*pt)
        assert (x + y).evaluate(*pt) == xv + yv
        assert (x * y).evaluate(*pt) == xv * yv
        assert (x / y).evaluate(*pt) == xv / yv
        assert (x - y).evaluate(*pt) == xv - yv


@pytest.mark.parametrize("k", [-3, -1, 0, 2])
def test_negative_exponents(k):
    m = monomial_scalar(5, k, -k)
    assert m * monomial_scalar(1, -k, k) == 5
    assert (m ** 2).evaluate(2, 3) == Fraction(25) * Fraction(2) ** (2 * k) * Fraction(3) ** (-2 * k)


def test_zero_and_int_coercion():
    assert scalar(0).is_zero() and scalar(0).is_constant()
    assert scalar(Fraction(3, 4)).constant_value() == Fraction(3, 4)
    with pytest.raises(ZeroDivisionError):
        scalar(0).inverse()
    with pytest.raises(TypeError):
        scalar(1.5)


def test_star_and_invert_q():
    c = (1 - v ** 2) / (1 - u ** 4 * v ** 2)
    s = c.star()
    assert s == (1 - v ** -2) / (1 - u ** -4 * v ** -2)
    assert s.star() == c
    assert c.invert_q() == (1 - v ** 2) / (1 - u ** -4 * v ** 2)


def test_specialize_v():
    c = (1 - v ** 2) / (1 - u ** 4 * v ** 2)
    assert c.specialize_v(0) == 1
    # at v = infinity the ratio tends to 1/q
    assert c.specialize_v("inf") == monomial_scalar(1, -4, 0)
    assert (v / (1 + v ** 2)).specialize_v(0) == 0
    with pytest.raises(PoleError):
        (1 / v).specialize_v(0)
    with pytest.raises(PoleError):
        v.specialize_v("inf")
    with pytest.raises(ValueError):
        v.specialize_v(1)


def test_q_power():
    assert q_power(Fraction(1, 4), 2) == u
    with pytest.raises(ValueError):
        q_power(Fraction(1, 8), 2)


def test_laurent_ops():
    f = LaurentPolynomial({(1,): 1, (-1,): v})
    g = LaurentPolynomial({(1,): -1, (0,): 2})
    assert (f + g).support() == [(-1,), (0,)]
    assert (f * g).coeff((2,)) == -1
    assert (f * g).coeff((0,)) == -v
    assert f.shift((2,)).support() == [(1,), (3,)]
    assert f.star() == LaurentPolynomial({(-1,): 1, (1,): v ** -1})
    assert (f - f).is_zero()
    assert LaurentPolynomial([((0,), 1), ((0,), -1)]).is_zero()


def test_json_roundtrip():
    f = LaurentPolynomial({(1, -2): (1 - v ** 2) / (1 - u ** 4 * v ** 2), (0, 0): monomial_scalar(-3, 2, -1)})
    recs = f.to_json()
    assert [r["weight"] for r in recs] == [[0, 0], [1, -2]]
    assert LaurentPolynomial.from_json(recs) == f


def test_qpoly_coefficients():
    assert qpoly_coefficients(1 - u ** 4 + 2 * u ** 12, 2) == [1, -1, 0, 2]
    with pytest.raises(ValueError):
        qpoly_coefficients(u, 2)


@pytest.mark.parametrize("m, coeffs", [(0, [1]), (1, [1, -1]), (2, [1, -1, -1, 1]), (3, [1, -1, -1, 0, 1, 1, -1])])
def test_q_factorial(m, coeffs):
    assert q_factorial(m) == coeffs


def test_series_divide_geometric():
    s = series_divide([1], [1, -1], 6)
    assert [c.coeff((0,)).constant_value() for c in s.coeffs] == [1] * 7
    # 1/(q)_2 counts partitions into parts of size at most 2
    s = series_divide([1], q_factorial(2), 8)
    assert [c.coeff((0,)) for c in s.coeffs] == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    with pytest.raises(ZeroDivisionError):
        series_divide([1], [0, 1], 3)


def test_character_series_ops():
    f = LaurentPolynomial({(1,): 1 + u ** 4, (-1,): 1})
    s = CharacterSeries.from_laurent(f, 2, 3, 1)
    assert s.coeffs[1] == LaurentPolynomial({(1,): 1})
    t = s.shift_q(2)
    assert t.order == 5 and t.coeffs[3] == LaurentPolynomial({(1,): 1})
    assert (s - s) == CharacterSeries([], 3, 1)
    back = series_divide(s, [1, -1], 3).times_qpoly([1, -1])
    assert back == s
    with pytest.raises(ValueError):
        s.truncate(5)
    with pytest.raises(ValueError):
        s.shift_q(-1)
    with pytest.raises(ValueError):
        CharacterSeries([LaurentPolynomial({(0,): u})], 1, 1)
