from __future__ import annotations

from fractions import Fraction

import pytest

from macweyl.algebra import CharacterSeries, q_factorial
from macweyl.macdonald import ram_yip
from macweyl.rootdata import build
from macweyl.weyl_characters import global_char
from macweyl.whittaker import (
    ScopeError,
    ZSeries,
    a1_omega,
    a1_toda_apply,
    antidominant_weights,
    check_a1_eigen,
    omega_component,
    verify_rr,
)

ORDER = 8


def test_antidominant_weights(A1, A2):
    assert antidominant_weights(A1, 4) == [(0,), (-1,), (-2,), (-3,), (-4,)]
    ws = antidominant_weights(A2, 1)
    # (omega_1, omega_1) = 2/3, (rho, rho) = 2
    assert ws == [(0, 0), (0, -1), (-1, 0), (-1, -1)]


def test_zero_term(A2):
    for s in range(6):
        t = omega_component(A2, s, 1, ORDER).terms[(0, 0)]
        assert t.q_exp == 0 and t.z_exp == (0, 0)
        assert t.coeff == CharacterSeries.one(ORDER, 2)


def test_a1_identity_component(A1):
    comp = omega_component(A1, 0, 4, ORDER)
    for m in range(5):
        t = comp.terms[(-m,)]
        assert t.q_exp == Fraction(m * m, 4)
        assert t.z_exp == (m,)
        assert t.coeff == global_char(A1, 0, (-m,), ORDER)


def test_a1_s_component(A1):
    s = A1.W.parse("s1")
    comp = omega_component(A1, s, 4, ORDER)
    for m in range(1, 5):
        lhs = comp.terms[(-m,)].coeff.times_qpoly(q_factorial(m))
        a = ram_yip(A1, (-m,), 0, "v0").value
        b = ram_yip(A1, (m,), 0, "v0").value
        qm = [0] * m + [1]
        rhs = (CharacterSeries.from_laurent(a, A1.e, ORDER, 1).times_qpoly(qm)
               + CharacterSeries.from_laurent(b, A1.e, ORDER, 1).times_qpoly([1] + [0] * (m - 1) + [-1]))
        assert lhs == rhs


def test_scope():
    with pytest.raises(ScopeError):
        omega_component(build("C2", "u"), 0, 1, 4)
    assert omega_component(build("C2", "d"), 0, 1, 4).terms


def _const(value, zmax=0):
    return ZSeries({(0, 0, (0,)): Fraction(value)}, zmax)


def test_literal_operators():
    one = _const(1)
    y_id, y_s = a1_toda_apply("Y", one, one, gaussian=False)
    assert y_id == ZSeries() and y_s == one
    i_id, i_s = a1_toda_apply("Yinv", one, one, gaussian=False)
    zm2 = ZSeries({(-2, 0, (0,)): Fraction(1)})
    assert i_id == _const(2) - zm2
    assert i_s == one - zm2


def test_zero_input():
    z = ZSeries()
    for d in ("Y", "Yinv"):
        a, b = a1_toda_apply(d, z, z)
        assert not a.terms and not b.terms
    with pytest.raises(ValueError):
        a1_toda_apply("Z", z, z)


def test_eigen_equations():
    checks = check_a1_eigen(6, ORDER)
    assert [c.direction for c in checks] == ["Y", "Yinv"]
    assert all(c.ok for c in checks)
    # the truncation costs exactly one Z-degree
    assert all(c.validity[5] > 0 for c in checks)


def test_eigen_negative_control():
    f_id, f_s = a1_omega(6, ORDER)
    g_id, _ = a1_toda_apply("Y", f_id, f_s)
    assert g_id.mismatches(f_id.times_x((1,)))
    g_id, _ = a1_toda_apply("Y", f_id, f_s, gaussian=False)
    assert g_id.mismatches(f_id.times_x((-1,)))


def test_recurrences():
    rep = verify_rr(M=6, order=ORDER)
    assert rep.ok and not rep.failures()
    assert set(rep.results) == {(k, m) for k in range(1, 5) for m in range(7)}
