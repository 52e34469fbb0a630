from __future__ import annotations

import itertools

import pytest

from conftest import V, qq
from macweyl.algebra import LaurentPolynomial
from macweyl.macdonald import norm_squared, norm_v0_simple_product, ram_yip, ram_yip_bruteforce
from macweyl.rootdata import build


def X(k):
    return LaurentPolynomial.monomial((k,))


def test_a1_minus_omega(A1):
    E = ram_yip(A1, (-1,)).value
    c = (1 - V ** 2) / (1 - qq(1) * V ** 2)
    assert E == X(-1) + X(1).scale(c)


def test_a1_minus_omega_sigma_s(A1):
    s = A1.W.parse("s1")
    E = ram_yip(A1, (-1,), s).value
    c = qq(1) * (1 - V ** 2) / (1 - qq(1) * V ** 2)
    assert E == X(1) + X(-1).scale(c)


def test_a1_v0_minus_two_omega(A1):
    E = ram_yip(A1, (-2,), 0, "v0").value
    assert E == X(-2) + X(0).scale(1 + qq(1)) + X(2)
    assert E == ram_yip(A1, (-2,)).value.specialize_v(0)


def test_a1_positive_weight(A1):
    # E_omega = X^omega at v = 0 and E_0 = 1
    assert ram_yip(A1, (1,), 0, "v0").value == X(1)
    assert ram_yip(A1, (0,)).value == LaurentPolynomial.constant(1, 1)


@pytest.mark.parametrize("t, kind, bound", [("A1", "u", 3), ("A2", "u", 1), ("C2", "d", 1), ("C2", "u", 1)])
def test_dp_equals_bruteforce(t, kind, bound):
    D = build(t, kind)
    for lam in itertools.product(range(-bound, bound + 1), repeat=D.rank):
        for s in range(D.W.order):
            assert ram_yip(D, lam, s).value == ram_yip_bruteforce(D, lam, s)


@pytest.mark.parametrize("t, kind", [("A2", "u"), ("C2", "d"), ("G2", "d")])
def test_specializations(t, kind):
    D = build(t, kind)
    for lam in itertools.product(range(-1, 2), repeat=D.rank):
        for s in range(D.W.order):
            gen = ram_yip(D, lam, s).value
            assert ram_yip(D, lam, s, "v0").value == gen.specialize_v(0)
            assert ram_yip(D, lam, s, "vinf").value == gen.specialize_v("inf").invert_q()


def test_norms_a1(A1):
    # t = v^2
    n = norm_squared(A1, (-1,))
    assert n == (1 - qq(1)) * (1 - qq(1) * V ** 4) / ((1 - qq(1) * V ** 2) ** 2)
    assert norm_squared(A1, (-3,), "v0") == (1 - qq(1)) * (1 - qq(2)) * (1 - qq(3))
    assert norm_squared(A1, (-3,), "v0") == norm_v0_simple_product(A1, (-3,))


def test_errors(A1):
    with pytest.raises(ValueError):
        ram_yip(A1, (-1,), 0, "bogus")
    with pytest.raises(ValueError):
        ram_yip(A1, (-1, 0))
    with pytest.raises(ValueError):
        ram_yip(A1, (-30,), cap=5)
    with pytest.raises(ValueError):
        norm_squared(A1, (2,), "v0")


@pytest.mark.parametrize("t, kind", [("A2", "u"), ("C2", "u"), ("C2", "d"), ("G2", "d")])
def test_v0_norm_is_generic_limit(t, kind):
    D = build(t, kind)
    for lam in itertools.product(range(-2, 1), repeat=2):
        assert norm_squared(D, lam, "v0") == norm_squared(D, lam).specialize_v(0)
