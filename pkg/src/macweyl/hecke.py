"""Demazure-Lusztig operators on L[X] and the Dunkl operators Y^mu.

The extended affine Weyl group W(X~) = Y x| W acts on monomials by

    (mu, sigma) . X^lambda = q^{-(sigma(lambda), mu)} X^{sigma(lambda)},

and every reflection, including s_0 and the length-zero elements pi, acts
through this one formula.  For i in {0, ..., n},

    T_i = v s_i + (v - v^{-1}) (s_i - 1) / (X^{alpha_i} - 1),

with X^{delta} = q.  The divided difference is evaluated monomialwise as a
finite geometric sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine_weyl import AffineWeylElement, AffineWeylGroup, affine_weyl_group
from .algebra import CoefficientScalar, LaurentPolynomial, monomial_scalar, scalar
from .macdonald import ram_yip
from .rootdata import RootDatum, Weight

__all__ = [
    "act_on_polynomial",
    "apply_s",
    "apply_T",
    "apply_T_word",
    "apply_affine",
    "apply_Y",
    "gamma_shift",
    "y_eigenvalue",
    "E_via_T",
    "DifferenceReflectionOperator",
    "T_operator",
]

_V = monomial_scalar(1, 0, 1)
_V_MINUS_VINV = monomial_scalar(1, 0, 1) - monomial_scalar(1, 0, -1)


def _group(datum: RootDatum) -> AffineWeylGroup:
    return affine_weyl_group(datum, "X")


def _q_exp(datum: RootDatum, k: Fraction | int) -> int:
    a = Fraction(k) * 2 * datum.e
    if a.denominator != 1:
        raise AssertionError(f"q^{k} is not an integral power of u")
    return int(a)


def act_on_polynomial(datum: RootDatum, w: AffineWeylElement, f: LaurentPolynomial) -> LaurentPolynomial:
    """The W(X~)-action on L[X]."""
    if w.tag != "X":
        raise ValueError("polynomials carry the action of W(X~)")
    out = {}
    W = datum.W
    for lam, c in f.items():
        img = W.act_x(w.direction, lam)
        k = -datum.pair(img, w.weight)
        out[img] = c * monomial_scalar(1, _q_exp(datum, k), 0) if k else c
    return LaurentPolynomial(out)


def apply_s(datum: RootDatum, i: int, f: LaurentPolynomial) -> LaurentPolynomial:
    return act_on_polynomial(datum, _group(datum).simple_reflections[i], f)


def gamma_shift(datum: RootDatum, mu: Sequence[int], f: LaurentPolynomial) -> LaurentPolynomial:
    """Gamma_mu . X^lambda = q^{(lambda, mu)} X^lambda."""
    return LaurentPolynomial(
        (lam, c * monomial_scalar(1, _q_exp(datum, datum.pair(lam, mu)), 0)) for lam, c in f.items()
    )


def _divided_difference(datum: RootDatum, i: int, f: LaurentPolynomial) -> LaurentPolynomial:
    """(s_i f - f) / (X^{alpha_i} - 1) for i in {0, ..., n}."""
    G = _group(datum)
    beta, d = G.aff.simple_root(i)
    X = datum.X
    qa = _q_exp(datum, d)
    acc: dict[Weight, CoefficientScalar] = {}

    def add(w, c):
        acc[w] = acc[w] + c if w in acc else c

    for lam, c in f.items():
        k = X.pair_coroot(beta, lam)
        if k > 0:
            for j in range(1, k + 1):
                add(tuple(a - j * b for a, b in zip(lam, beta)), -c * monomial_scalar(1, -j * qa, 0))
        elif k < 0:
            for j in range(0, -k):
                add(tuple(a + j * b for a, b in zip(lam, beta)), c * monomial_scalar(1, j * qa, 0))
    return LaurentPolynomial(acc)


def apply_T(datum: RootDatum, i: int, f: LaurentPolynomial, power: int = 1) -> LaurentPolynomial:
    """T_i f (power=1) or T_i^{-1} f = (T_i - v + v^{-1}) f (power=-1)."""
    if i < 0 or i > datum.rank:
        raise ValueError(f"node {i} is not in 0..{datum.rank}")
    out = apply_s(datum, i, f).scale(_V) + _divided_difference(datum, i, f).scale(_V_MINUS_VINV)
    if power == 1:
        return out
    if power == -1:
        return out - f.scale(_V_MINUS_VINV)
    raise ValueError("power must be +1 or -1")


def apply_T_word(datum: RootDatum, letters: Sequence[int], f: LaurentPolynomial, power: int = 1) -> LaurentPolynomial:
    """T_{i1} ... T_{il} f, or (T_{i1} ... T_{il})^{-1} f when power = -1."""
    if power == 1:
        for i in reversed(letters):
            f = apply_T(datum, i, f, 1)
    else:
        for i in letters:
            f = apply_T(datum, i, f, -1)
    return f


def apply_affine(datum: RootDatum, w: AffineWeylElement, f: LaurentPolynomial, power: int = 1) -> LaurentPolynomial:
    """T_w f for w in W(X~), with T_pi acting as pi."""
    G = _group(datum)
    rw = G.reduced_word(w)
    if power == 1:
        return act_on_polynomial(datum, rw.pi, apply_T_word(datum, rw.letters, f, 1))
    return apply_T_word(datum, rw.letters, act_on_polynomial(datum, G.inverse(rw.pi), f), -1)


def apply_Y(datum: RootDatum, mu: Sequence[int], f: LaurentPolynomial) -> LaurentPolynomial:
    """Y^mu = Y^{mu+} (Y^{mu-})^{-1}, with Y^nu = T_{t_nu} for dominant nu."""
    G = _group(datum)
    plus = tuple(max(c, 0) for c in mu)
    minus = tuple(max(-c, 0) for c in mu)
    if any(minus):
        f = apply_affine(datum, G.translation(minus), f, -1)
    if any(plus):
        f = apply_affine(datum, G.translation(plus), f, 1)
    return f


def y_eigenvalue(datum: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> CoefficientScalar:
    """q^{-(lambda, mu)} v^{2 <sigma_lambda^{-1} rho^{vee Y}, mu>}."""
    sl = affine_weyl_group(datum, "Y").sigma_lambda(lam)
    h = 2 * datum.rho_vee_y(datum.W.act_y(sl, mu))
    if h.denominator != 1:
        raise AssertionError("non-integral v-exponent in the eigenvalue")
    return monomial_scalar(1, _q_exp(datum, -datum.pair(lam, mu)), int(h))


def E_via_T(datum: RootDatum, lam: Sequence[int], sigma: int,
            base: LaurentPolynomial | None = None) -> LaurentPolynomial:
    """v^{-l(sigma sigma_lambda^{-1}) + l(sigma_lambda^{-1})} T_sigma E_lambda."""
    W = datum.W
    if base is None:
        base = ram_yip(datum, lam, 0, "generic").value
    sl = affine_weyl_group(datum, "Y").sigma_lambda(lam)
    sl_inv = W.inverse[sl]
    k = -W.length[W.mul(sigma, sl_inv)] + W.length[sl_inv]
    return apply_T_word(datum, W.words[sigma], base).scale(monomial_scalar(1, 0, k))


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Binomial:
    """c X^weight - 1 with c = u^u_exp."""

    weight: Weight
    u_exp: int


class DifferenceReflectionOperator:
    """Sum of terms  (num / prod of binomials) * Gamma_mu * sigma."""

    def __init__(self, datum: RootDatum, terms):
        self.datum = datum
        self.terms = list(terms)

    def __call__(self, f: LaurentPolynomial) -> LaurentPolynomial:
        # terms sharing a denominator are summed first: only the sum is divisible
        partial: dict[tuple, LaurentPolynomial] = {}
        for num, dens, mu, sigma in self.terms:
            g = act_on_polynomial(self.datum, sigma, f)
            if any(mu):
                g = gamma_shift(self.datum, mu, g)
            partial[dens] = partial.get(dens, LaurentPolynomial()) + num * g
        total = LaurentPolynomial()
        for dens, g in partial.items():
            total = total + _exact_quotient(g, dens)
        return total


def _exact_quotient(g: LaurentPolynomial, dens) -> LaurentPolynomial:
    for b in dens:
        g = _exact_divide(g, b)
    return g


def _exact_divide(g: LaurentPolynomial, b: Binomial) -> LaurentPolynomial:
    """Exact division checked by multiplying back."""
    beta = b.weight
    c = monomial_scalar(1, b.u_exp, 0)
    # solve h (c X^beta - 1) = g along each string lambda + Z beta
    strings: dict[tuple, dict[int, CoefficientScalar]] = {}
    nz = next(k for k, x in enumerate(beta) if x)
    for lam, a in g.items():
        t = lam[nz] // beta[nz]
        base = tuple(x - t * y for x, y in zip(lam, beta))
        strings.setdefault(base, {})[t] = a
    out: dict[Weight, CoefficientScalar] = {}
    for base, coeffs in strings.items():
        lo, hi = min(coeffs), max(coeffs)
        # h_t for t in [lo, hi-1]:  c h_{t-1} - h_t = g_t
        prev = scalar(0)
        for t in range(lo, hi):
            h = c * prev - coeffs.get(t, scalar(0))
            if not h.is_zero():
                out[tuple(x + t * y for x, y in zip(base, beta))] = h
            prev = h
        if c * prev != coeffs.get(hi, scalar(0)):
            raise ArithmeticError("division by a binomial is not exact")
    return LaurentPolynomial(out)


def T_operator(datum: RootDatum, i: int) -> DifferenceReflectionOperator:
    """T_i written as a difference-reflection operator with a rational multiplier."""
    G = _group(datum)
    beta, d = G.aff.simple_root(i)
    b = Binomial(beta, _q_exp(datum, d))
    zero = (0,) * datum.rank
    vv = LaurentPolynomial.constant(_V_MINUS_VINV, datum.rank)
    # v s_i + (v - v^{-1}) (s_i - 1)/(X^a - 1)
    return DifferenceReflectionOperator(datum, [
        (LaurentPolynomial.constant(_V, datum.rank), (), zero, G.simple_reflections[i]),
        (vv, (b,), zero, G.simple_reflections[i]),
        (-vv, (b,), zero, G.identity),
    ])
