"""Series part of the nonsymmetric q-Whittaker function and the sl2 q-Toda Dunkl operators.

The sigma-component of the series part is

    sum over antidominant lambda of  q^{(lambda,lambda)/2} Z^{-lambda} E_lambda^sigma(X; q, 0) / <E_lambda, E_lambda>_{v=0}.

The Gaussian factors gamma(Z), gamma(X) are never materialized.  For A1 the
operators act on pairs (f_id, f_s) of Z-series, and the formal factor q^{z^2}
is carried through its shift rule: an operator Gamma applied to q^{z^2} g
gives q^{z^2} u Z Gamma(g), u = q^{1/4}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import CharacterSeries, qpoly_coefficients, series_divide
from .macdonald import norm_squared, ram_yip
from .rootdata import RootDatum, Weight, build
from .weyl_characters import global_char

__all__ = [
    "ScopeError",
    "WhittakerComponent",
    "antidominant_weights",
    "omega_component",
    "ZSeries",
    "a1_omega",
    "a1_toda_apply",
    "EigenCheck",
    "check_a1_eigen",
    "RRReport",
    "verify_rr",
]


class ScopeError(ValueError):
    pass


def _norm2(datum: RootDatum, lam: Sequence[int]) -> Fraction:
    """(lambda, lambda) with X and Y identified coordinatewise."""
    return Fraction(datum.pair(lam, lam))


def antidominant_weights(datum: RootDatum, N: Fraction | int) -> list[Weight]:
    """All lambda in X_- with (lambda, lambda)/2 <= N, sorted by (norm, lambda)."""
    n = datum.rank
    bounds = []
    for i in range(n):
        w = datum.X.fundamental_weights[i]
        bounds.append(math.isqrt(int(2 * N / _norm2(datum, w))) + 1)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            lam = tuple(-c for c in prefix)
            if _norm2(datum, lam) / 2 <= N:
                out.append(lam)
            return
        for c in range(bounds[len(prefix)] + 1):
            rec(prefix + (c,))

    rec(())
    out.sort(key=lambda lam: (_norm2(datum, lam), tuple(-c for c in lam)))
    return out


@dataclass
class WhittakerTerm:
    lam: Weight
    q_exp: Fraction
    z_exp: Weight
    coeff: CharacterSeries


@dataclass
class WhittakerComponent:
    sigma: int
    N: Fraction
    q_order: int
    terms: dict[Weight, WhittakerTerm] = field(default_factory=dict)

    def to_json(self, datum: RootDatum) -> dict:
        return {
            "type": datum.cartan_type,
            "affinization": datum.kind,
            "sigma": datum.W.name(self.sigma),
            "N": str(self.N),
            "q_order": self.q_order,
            "terms": [
                {"lambda": list(t.lam), "q_exp": str(t.q_exp), "Z": list(t.z_exp), "coeff": t.coeff.to_json()}
                for t in self.terms.values()
            ],
        }


def _check_scope(datum: RootDatum) -> None:
    if not datum.simply_laced and datum.kind != "d":
        raise ScopeError(
            f"the Whittaker series is available for simply-laced or dual untwisted (kind d) data; "
            f"{datum.cartan_type} with kind {datum.kind!r} is out of scope"
        )


def omega_component(datum: RootDatum, sigma: int, N: Fraction | int, q_order: int) -> WhittakerComponent:
    """The sigma-component truncated to (lambda,lambda)/2 <= N and q-order q_order."""
    _check_scope(datum)
    N = Fraction(N)
    comp = WhittakerComponent(sigma, N, q_order)
    for lam in antidominant_weights(datum, N):
        E = ram_yip(datum, lam, sigma, "v0").value
        num = CharacterSeries.from_laurent(E, datum.e, q_order, datum.rank)
        den = qpoly_coefficients(norm_squared(datum, lam, "v0"), datum.e)
        coeff = series_divide(num, den, q_order, datum.rank)
        comp.terms[lam] = WhittakerTerm(lam, _norm2(datum, lam) / 2, tuple(-c for c in lam), coeff)
    return comp


# ---------------------------------------------------------------------------
class ZSeries:
    """Finite sum of Z^m u^a X^w with rational coefficients and explicit validity.

    Coefficients at Z^m with m > zmax are unknown.  For m <= zmax the
    coefficients at u^a are exact for a < bound(m); ``bounds`` stores the
    finite bounds, every other m being exact in all u-degrees.
    """

    __slots__ = ("terms", "zmax", "bounds")

    def __init__(self, terms=None, zmax: float = math.inf, bounds=None):
        self.terms: dict[tuple[int, int, Weight], Fraction] = {k: v for k, v in (terms or {}).items() if v}
        self.zmax = zmax
        self.bounds: dict[int, float] = dict(bounds or {})

    def bound(self, m: int) -> float:
        if m > self.zmax:
            return -math.inf
        return self.bounds.get(m, math.inf)

    def known(self, m: int, a: int) -> bool:
        return a < self.bound(m)

    def __add__(self, other: "ZSeries") -> "ZSeries":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        zmax = min(self.zmax, other.zmax)
        bounds = {}
        for m in set(self.bounds) | set(other.bounds):
            if m <= zmax:
                bounds[m] = min(self.bound(m), other.bound(m))
        return ZSeries(terms, zmax, bounds)

    def __neg__(self) -> "ZSeries":
        return ZSeries({k: -c for k, c in self.terms.items()}, self.zmax, self.bounds)

    def __sub__(self, other: "ZSeries") -> "ZSeries":
        return self + (-other)

    def shift_z(self, k: int) -> "ZSeries":
        return ZSeries({(m + k, a, w): c for (m, a, w), c in self.terms.items()},
                       self.zmax + k, {m + k: b for m, b in self.bounds.items()})

    def times_u(self, k: int) -> "ZSeries":
        return ZSeries({(m, a + k, w): c for (m, a, w), c in self.terms.items()},
                       self.zmax, {m: b + k for m, b in self.bounds.items()})

    def times_x(self, weight: Weight) -> "ZSeries":
        return ZSeries({(m, a, tuple(x + y for x, y in zip(w, weight))): c for (m, a, w), c in self.terms.items()},
                       self.zmax, self.bounds)

    def gamma(self, sign: int = 1) -> "ZSeries":
        """Gamma^{sign}: Z^m -> q^{sign m/2} Z^m = u^{2 sign m} Z^m."""
        return ZSeries({(m, a + 2 * sign * m, w): c for (m, a, w), c in self.terms.items()},
                       self.zmax, {m: b + 2 * sign * m for m, b in self.bounds.items()})

    def mismatches(self, other: "ZSeries") -> list[tuple[int, int, Weight]]:
        """Positions known in both series where the coefficients differ."""
        diff = self - other
        return sorted(k for k, c in diff.terms.items() if c and diff.known(k[0], k[1]))

    def validity(self, zmin: int = 0) -> dict[int, float]:
        """Exact u-degree bound for every Z-degree from zmin to zmax."""
        top = int(self.zmax) if self.zmax != math.inf else max((k[0] for k in self.terms), default=zmin)
        return {m: self.bound(m) for m in range(zmin, top + 1)}

    def coefficient(self, m: int) -> dict[tuple[int, Weight], Fraction]:
        return {(a, w): c for (mm, a, w), c in self.terms.items() if mm == m}

    def __iter__(self) -> Iterator:
        return iter(sorted(self.terms.items()))

    def __eq__(self, other) -> bool:
        return isinstance(other, ZSeries) and not self.mismatches(other)

    __hash__ = None


def _series_to_z(s: CharacterSeries, m: int, u_shift: int, e: int) -> ZSeries:
    """q^{u_shift/(2e)} Z^m s as a ZSeries (u = q^{1/(2e)})."""
    terms = {}
    for j, poly in enumerate(s.coeffs):
        for w, c in poly.items():
            terms[(m, u_shift + 2 * e * j, w)] = c.constant_value()
    return ZSeries(terms, math.inf, {m: u_shift + 2 * e * (s.order + 1)})


def a1_omega(M: int, q_order: int) -> tuple[ZSeries, ZSeries]:
    """(f_id, f_s) for A1 with the Gaussian factors stripped, Z-degrees 0..M."""
    datum = build("A1")
    e = datum.e
    comps = [omega_component(datum, s, Fraction(M * M, 4), q_order) for s in (0, 1)]
    out = []
    for comp in comps:
        acc = ZSeries(zmax=M)
        for lam, t in comp.terms.items():
            acc = acc + _series_to_z(t.coeff, t.z_exp[0], int(t.q_exp * 2 * e), e)
        acc.zmax = M
        out.append(acc)
    return out[0], out[1]


def a1_toda_apply(direction: str, f_id: ZSeries, f_s: ZSeries, gaussian: bool = True) -> tuple[ZSeries, ZSeries]:
    """Apply Y^hat_Z (direction 'Y') or its inverse ('Yinv') to a pair of components.

    With ``gaussian`` the pair stands for q^{z^2}(f_id, f_s), so each Gamma^{+-1}
    also multiplies by u Z^{+-1}.  Without it the displayed formulas are used
    verbatim on the given series.
    """
    def G(g: ZSeries) -> ZSeries:
        out = g.gamma(1)
        return out.shift_z(1).times_u(1) if gaussian else out

    def Ginv(g: ZSeries) -> ZSeries:
        out = g.gamma(-1)
        return out.shift_z(-1).times_u(1) if gaussian else out

    if direction == "Yinv":
        gi, gs = G(f_id), Ginv(f_s)
        return gi - gi.shift_z(-2) + gs, gs - gi.shift_z(-2)
    if direction == "Y":
        return Ginv(f_id - f_s), G(f_s) - G((f_s - f_id).shift_z(-2))
    raise ValueError(f"direction must be 'Y' or 'Yinv', got {direction!r}")


@dataclass
class EigenCheck:
    direction: str
    mismatches: list
    validity: dict[int, float]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_a1_eigen(M: int, q_order: int) -> list[EigenCheck]:
    """Y^hat Omega = X^{-1} Omega and Y^hat^{-1} Omega = X Omega on the truncation.

    Equality is asserted only where both sides are exact: Z-degree at most
    M - 1 (the inverse Gamma pulls Z^{m+1} down to Z^m) and u-degrees below the
    tracked bound.
    """
    f_id, f_s = a1_omega(M, q_order)
    out = []
    for direction, x in (("Y", (-1,)), ("Yinv", (1,))):
        g_id, g_s = a1_toda_apply(direction, f_id, f_s)
        bad = [("id",) + k for k in g_id.mismatches(f_id.times_x(x))]
        bad += [("s",) + k for k in g_s.mismatches(f_s.times_x(x))]
        validity = (g_id - f_id.times_x(x)).validity()
        out.append(EigenCheck(direction, bad, validity))
    return out


# ---------------------------------------------------------------------------
@dataclass
class RRReport:
    M: int
    order: int
    results: dict[tuple[int, int], bool]
    implied: dict[int, bool]

    @property
    def ok(self) -> bool:
        return all(self.results.values()) and all(self.implied.values())

    def failures(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.results.items() if not v)


def verify_rr(M: int = 8, order: int = 12) -> RRReport:
    """The four sl2 recurrences for 0 <= m <= M at q-order ``order``.

    Characters are indexed by Z-degree: c_id(m) = ch of the global module at
    -m omega, c_s(m) = the one at m omega (sigma = s), both 1 at m = 0 and 0
    for m < 0.
    """
    datum = build("A1")
    one = CharacterSeries.one(order, 1)
    zero = CharacterSeries([], order, 1)
    cache: dict[tuple[int, int], CharacterSeries] = {}

    def c(s: int, m: int) -> CharacterSeries:
        if m < 0:
            return zero
        if m == 0:
            return one
        if (s, m) not in cache:
            cache[(s, m)] = global_char(datum, s, (-m,), order + M + 2)
        return cache[(s, m)]

    X, Xinv = (1,), (-1,)

    def residuals(m: int) -> list[CharacterSeries]:
        r2 = c(1, m).times_x(X) - (c(1, m + 1) - c(0, m + 1).shift_q(m + 1))
        r3 = c(0, m).times_x(Xinv) - (c(0, m + 1) - c(1, m + 1))
        if m < 0:  # only (2) and (3) are needed one step below the range
            return [zero, r2.truncate(order), r3.truncate(order), zero]
        r1 = c(0, m).times_x(X) - (c(0, m - 1) - c(0, m + 1).shift_q(m + 1) + c(1, m + 1))
        r4 = c(1, m).times_x(Xinv) - (c(1, m - 1) - (c(1, m + 1) - c(0, m + 1)).shift_q(m))
        return [r.truncate(order) for r in (r1, r2, r3, r4)]

    def is_zero(s: CharacterSeries) -> bool:
        return all(p.is_zero() for p in s.coeffs)

    results = {}
    implied = {}
    res = {m: residuals(m) for m in range(-1, M + 1)}
    for m in range(M + 1):
        for k in range(4):
            results[(k + 1, m)] = is_zero(res[m][k])
        # (1) = (2) - X (3 at m-1) and (4) = q^m (3 at m) - X^{-1} (2 at m-1), as residuals
        a = res[m][0] - (res[m][1] - res[m - 1][2].times_x(X))
        b = res[m][3] - (res[m][2].shift_q(m) - res[m - 1][1].times_x(Xinv))
        implied[m] = is_zero(a.truncate(order)) and is_zero(b.truncate(order))
    return RRReport(M, order, results, implied)
