from __future__ import annotations

import itertools
import random

import pytest

from conftest import V
from macweyl.algebra import LaurentPolynomial, monomial_scalar
from macweyl.hecke import (
    E_via_T,
    T_operator,
    apply_T,
    apply_T_word,
    apply_Y,
    y_eigenvalue,
)
from macweyl.macdonald import ram_yip
from macweyl.rootdata import build


def _random_poly(D, rng, terms=4):
    out = LaurentPolynomial()
    for _ in range(terms):
        lam = tuple(rng.randint(-2, 2) for _ in range(D.rank))
        c = monomial_scalar(rng.choice([-2, -1, 1, 3]), rng.randint(0, 3), rng.randint(-1, 1))
        out = out + LaurentPolynomial.monomial(lam, c)
    return out


def test_T_on_constants(A2):
    one = LaurentPolynomial.constant(1, 2)
    for i in range(3):
        assert apply_T(A2, i, one) == one.scale(V)


def test_a1_T_on_omega(A1):
    # the divided difference contributes -X^{-omega}, cancelling all but v^{-1}
    assert apply_T(A1, 1, LaurentPolynomial.monomial((1,))) == LaurentPolynomial.monomial((-1,), 1 / V)


@pytest.mark.parametrize("t, kind", [("A1", "u"), ("A2", "u"), ("C2", "d"), ("G2", "d")])
def test_quadratic_and_inverse(t, kind):
    D = build(t, kind)
    rng = random.Random(7)
    for _ in range(5):
        f = _random_poly(D, rng)
        for i in range(D.rank + 1):
            Tf = apply_T(D, i, f)
            assert apply_T(D, i, Tf) - Tf.scale(V) + Tf.scale(1 / V) - f == LaurentPolynomial()
            assert apply_T(D, i, Tf, -1) == f


def test_braid_a2(A2):
    rng = random.Random(3)
    for _ in range(5):
        f = _random_poly(A2, rng)
        assert apply_T_word(A2, (1, 2, 1), f) == apply_T_word(A2, (2, 1, 2), f)
        assert apply_T_word(A2, (0, 1, 0), f) == apply_T_word(A2, (1, 0, 1), f)
        assert apply_T_word(A2, (), f) == f


def test_operator_form_matches(A2):
    rng = random.Random(11)
    f = _random_poly(A2, rng)
    for i in range(3):
        assert T_operator(A2, i)(f) == apply_T(A2, i, f)


@pytest.mark.parametrize("t, kind", [("A1", "u"), ("A2", "u"), ("C2", "d")])
def test_y_eigenvalues(t, kind):
    D = build(t, kind)
    for lam in itertools.product(range(-1, 2), repeat=D.rank):
        E = ram_yip(D, lam).value
        for j in range(D.rank):
            mu = tuple(int(k == j) for k in range(D.rank))
            assert apply_Y(D, mu, E) == E.scale(y_eigenvalue(D, lam, mu))


def test_y_wrong_eigenvalue_fails(A1):
    E = ram_yip(A1, (-1,)).value
    wrong = y_eigenvalue(A1, (1,), (1,))
    assert apply_Y(A1, (1,), E) != E.scale(wrong)


def test_y_group_law(A2):
    f = _random_poly(A2, random.Random(5))
    assert apply_Y(A2, (0, 0), f) == f
    assert apply_Y(A2, (1, 0), apply_Y(A2, (-1, 1), f)) == apply_Y(A2, (0, 1), f)


@pytest.mark.parametrize("t, kind", [("A1", "u"), ("A2", "u"), ("C2", "d")])
def test_operator_route(t, kind):
    D = build(t, kind)
    for lam in itertools.product(range(-1, 2), repeat=D.rank):
        base = ram_yip(D, lam).value
        assert E_via_T(D, lam, 0, base) == base
        for s in range(D.W.order):
            assert E_via_T(D, lam, s, base) == ram_yip(D, lam, s).value


def test_bad_node(A1):
    with pytest.raises(ValueError):
        apply_T(A1, 2, LaurentPolynomial.constant(1, 1))
    with pytest.raises(ValueError):
        apply_T(A1, 1, LaurentPolynomial.constant(1, 1), 2)
