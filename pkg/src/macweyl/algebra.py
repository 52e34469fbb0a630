"""Exact coefficient arithmetic and Laurent polynomials in the X-variables.

Coefficients live in Q(u, v) where u = q^{1/(2e)} for the root datum at
hand.  Numerator and denominator are integer polynomials handled by
python-flint; every value is kept in a canonical form so that equality is
structural.

Weights are integer tuples in fundamental-weight coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence, Union

import flint

__all__ = [
    "RING",
    "CoefficientScalar",
    "LaurentPolynomial",
    "CharacterSeries",
    "PoleError",
    "ZERO",
    "ONE",
    "U",
    "V",
    "scalar",
    "monomial_scalar",
    "q_power",
    "series_divide",
    "q_factorial",
    "qpoly_coefficients",
]

_CTX = flint.fmpz_mpoly_ctx.get(("u", "v"), "lex")
RING = _CTX  # integer polynomials in (u, v)
_PZERO = _CTX.from_dict({})
_PONE = _CTX.from_dict({(0, 0): 1})

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates
Scalarish = Union["CoefficientScalar", int, Fraction]


class PoleError(ValueError):
    """Raised when a specialization hits a pole."""


def _poly_key(p) -> tuple:
    return tuple(sorted((k, int(c)) for k, c in p.to_dict().items()))


def _v_slices(p) -> dict[int, dict]:
    out: dict[int, dict] = {}
    for (a, b), c in p.to_dict().items():
        out.setdefault(b, {})[(a, 0)] = c
    return out


class CoefficientScalar:
    """Element of Q(u, v) stored as a reduced fraction of integer polynomials.

    Canonical form: numerator and denominator coprime over Z[u, v], the
    denominator's leading coefficient (lex order, u > v) positive.  Zero is
    0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _normalized: bool = False):
        if den is None:
            den = _PONE
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def from_dict(cls, terms: Mapping[tuple[int, int], int]) -> "CoefficientScalar":
        """Build from {(u_exp, v_exp): coef}; negative exponents allowed."""
        if not terms:
            return ZERO
        mu = min(0, min(a for a, _ in terms))
        mv = min(0, min(b for _, b in terms))
        num = _CTX.from_dict({(a - mu, b - mv): c for (a, b), c in terms.items() if c})
        den = _CTX.from_dict({(-mu, -mv): 1})
        return cls(num, den)

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        if self.num.is_zero():
            return True
        return self.num.degrees() == (0, 0) and self.den.degrees() == (0, 0)

    def is_v_free(self) -> bool:
        return self.num.degrees()[1] <= 0 and self.den.degrees()[1] <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        n = int(self.num.to_dict().get((0, 0), 0)) if not self.num.is_zero() else 0
        return Fraction(n, int(self.den.to_dict()[(0, 0)]))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: Scalarish) -> "CoefficientScalar":
        other = scalar(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_one() and other.den.is_one():
            return CoefficientScalar(self.num + other.num, _PONE, _normalized=True)
        if self.den == other.den:
            return CoefficientScalar(self.num + other.num, self.den)
        return CoefficientScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "CoefficientScalar":
        return CoefficientScalar(-self.num, self.den, _normalized=True)

    def __sub__(self, other: Scalarish) -> "CoefficientScalar":
        return self + (-scalar(other))

    def __rsub__(self, other: Scalarish) -> "CoefficientScalar":
        return scalar(other) + (-self)

    def __mul__(self, other: Scalarish) -> "CoefficientScalar":
        other = scalar(other)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return CoefficientScalar(self.num * other.num, _PONE, _normalized=True)
        # cross cancellation keeps the intermediate sizes small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        num = (self.num / g1) * (other.num / g2)
        den = (self.den / g2) * (other.den / g1)
        return CoefficientScalar(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "CoefficientScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero CoefficientScalar")
        return CoefficientScalar(self.den, self.num)

    def __truediv__(self, other: Scalarish) -> "CoefficientScalar":
        return self * scalar(other).inverse()

    def __rtruediv__(self, other: Scalarish) -> "CoefficientScalar":
        return scalar(other) * self.inverse()

    def __pow__(self, k: int) -> "CoefficientScalar":
        if k < 0:
            return self.inverse() ** (-k)
        return CoefficientScalar(self.num ** k, self.den ** k, _normalized=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = scalar(other)
        if not isinstance(other, CoefficientScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((_poly_key(self.num), _poly_key(self.den)))
        return self._hash

    # involutions and specializations --------------------------------------
    def star(self) -> "CoefficientScalar":
        """u -> 1/u, v -> 1/v."""
        return self._reverse(reverse_u=True, reverse_v=True)

    def invert_q(self) -> "CoefficientScalar":
        """u -> 1/u, i.e. q -> 1/q."""
        return self._reverse(reverse_u=True, reverse_v=False)

    def _reverse(self, reverse_u: bool, reverse_v: bool) -> "CoefficientScalar":
        if self.num.is_zero():
            return self
        du = max(self.num.degrees()[0], self.den.degrees()[0]) if reverse_u else 0
        dv = max(self.num.degrees()[1], self.den.degrees()[1]) if reverse_v else 0

        def flip(p):
            return _CTX.from_dict({
                ((du - a) if reverse_u else a, (dv - b) if reverse_v else b): c
                for (a, b), c in p.to_dict().items()
            })

        return CoefficientScalar(flip(self.num), flip(self.den))

    def specialize_v(self, point) -> "CoefficientScalar":
        """Value at v = 0 (point=0) or v = infinity (point='inf')."""
        if self.num.is_zero():
            return self
        ns, ds = _v_slices(self.num), _v_slices(self.den)
        if point == 0:
            a, b = min(ns), min(ds)
            if a < b:
                raise PoleError(f"pole at v=0 in coefficient {self}")
        elif point in ("inf", float("inf")):
            a, b = max(ns), max(ds)
            if a > b:
                raise PoleError(f"pole at v=inf in coefficient {self}")
        else:
            raise ValueError(f"unsupported specialization point {point!r}")
        if a != b:
            return ZERO
        return CoefficientScalar(_CTX.from_dict(ns[a]), _CTX.from_dict(ds[b]))

    def evaluate(self, u: Fraction | int, v: Fraction | int) -> Fraction:
        """Numerical value at rational (u, v)."""
        n = _eval_poly(self.num, Fraction(u), Fraction(v))
        d = _eval_poly(self.den, Fraction(u), Fraction(v))
        if d == 0:
            raise PoleError(f"pole at (u, v) = ({u}, {v}) in coefficient {self}")
        return n / d

    def u_series(self) -> dict[int, Fraction]:
        """Expansion {u_exp: coef} of a v-free Laurent monomial-denominator scalar."""
        if not self.is_v_free():
            raise ValueError(f"{self} depends on v")
        dd = self.den.to_dict()
        if len(dd) != 1:
            raise ValueError(f"{self} is not a Laurent polynomial in u")
        ((shift, _), c), = dd.items()
        return {a - shift: Fraction(int(k), int(c)) for (a, _), k in self.num.to_dict().items()}

    # serialization ----------------------------------------------------------
    def terms_json(self) -> tuple[list, list]:
        def enc(p):
            return [[int(c), int(a), int(b)] for (a, b), c in sorted(p.to_dict().items(), reverse=True)]

        return enc(self.num), enc(self.den)

    def __repr__(self) -> str:
        n = str(self.num)
        if self.den.is_one():
            return n
        return f"({n})/({self.den})"


def _normalize(num, den):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in CoefficientScalar")
    if num.is_zero():
        return _PZERO, _PONE
    if not den.is_one():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
    return num, den


def _eval_poly(p, u: Fraction, v: Fraction) -> Fraction:
    total = Fraction(0)
    for (a, b), c in p.to_dict().items():
        total += int(c) * u ** int(a) * v ** int(b)
    return total


ZERO = CoefficientScalar(_PZERO, _PONE, _normalized=True)
ONE = CoefficientScalar(_PONE, _PONE, _normalized=True)
U = CoefficientScalar(_CTX.from_dict({(1, 0): 1}), _PONE, _normalized=True)
V = CoefficientScalar(_CTX.from_dict({(0, 1): 1}), _PONE, _normalized=True)

_INT_CACHE: dict[int, CoefficientScalar] = {}


def scalar(x: Scalarish) -> CoefficientScalar:
    """Coerce an int, Fraction or CoefficientScalar."""
    if isinstance(x, CoefficientScalar):
        return x
    if isinstance(x, int):
        c = _INT_CACHE.get(x)
        if c is None:
            c = CoefficientScalar(_CTX.from_dict({(0, 0): x}) if x else _PZERO, _PONE, _normalized=True)
            if -64 <= x <= 64:
                _INT_CACHE[x] = c
        return c
    if isinstance(x, Fraction):
        return CoefficientScalar(_CTX.from_dict({(0, 0): x.numerator}), _CTX.from_dict({(0, 0): x.denominator}))
    raise TypeError(f"cannot coerce {type(x).__name__} to CoefficientScalar")


def monomial_scalar(coef: int, u_exp: int = 0, v_exp: int = 0) -> CoefficientScalar:
    """coef * u^u_exp * v^v_exp with exponents of either sign."""
    return CoefficientScalar.from_dict({(u_exp, v_exp): coef})


def q_power(k: Fraction | int, e: int) -> CoefficientScalar:
    """q^k as a power of u = q^{1/(2e)}."""
    a = Fraction(k) * 2 * e
    if a.denominator != 1:
        raise ValueError(f"q^{k} is not a power of q^(1/{2 * e})")
    return monomial_scalar(1, int(a), 0)


# --------------------------------------------------------------------------
class LaurentPolynomial:
    """Finite sum of c_λ X^λ with CoefficientScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, Scalarish] | Iterable[tuple[Weight, Scalarish]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, CoefficientScalar] = {}
        for w, c in items:
            w = tuple(w)
            c = scalar(c)
            if w in acc:
                c = acc[w] + c
            acc[w] = c
        self.terms = {w: c for w, c in acc.items() if not c.is_zero()}

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPolynomial":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, weight: Weight, coef: Scalarish = 1) -> "LaurentPolynomial":
        return cls({tuple(weight): coef})

    @classmethod
    def constant(cls, coef: Scalarish, rank: int) -> "LaurentPolynomial":
        return cls({(0,) * rank: coef})

    def __iter__(self) -> Iterator[tuple[Weight, CoefficientScalar]]:
        return iter(sorted(self.terms.items()))

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> list[Weight]:
        return sorted(self.terms)

    def coeff(self, weight: Weight) -> CoefficientScalar:
        return self.terms.get(tuple(weight), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        if not other.terms:
            return self
        acc = dict(self.terms)
        for w, c in other.terms.items():
            if w in acc:
                s = acc[w] + c
                if s.is_zero():
                    del acc[w]
                else:
                    acc[w] = s
            else:
                acc[w] = c
        return LaurentPolynomial._raw(acc)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def scale(self, c: Scalarish) -> "LaurentPolynomial":
        c = scalar(c)
        if c.is_zero():
            return LaurentPolynomial()
        if c.is_one():
            return self
        return LaurentPolynomial._raw({w: a * c for w, a in self.terms.items()})

    def __mul__(self, other) -> "LaurentPolynomial":
        if not isinstance(other, LaurentPolynomial):
            return self.scale(other)
        acc: dict[Weight, CoefficientScalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                c = c1 * c2
                acc[w] = acc[w] + c if w in acc else c
        return LaurentPolynomial._raw({w: c for w, c in acc.items() if not c.is_zero()})

    def __rmul__(self, other) -> "LaurentPolynomial":
        return self.scale(other)

    def shift(self, weight: Weight) -> "LaurentPolynomial":
        """Multiply by X^weight."""
        return LaurentPolynomial._raw({tuple(a + b for a, b in zip(w, weight)): c for w, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def map_coefficients(self, f: Callable[[CoefficientScalar], CoefficientScalar]) -> "LaurentPolynomial":
        return LaurentPolynomial((w, f(c)) for w, c in self.terms.items())

    def map_weights(self, f: Callable[[Weight], Weight]) -> "LaurentPolynomial":
        return LaurentPolynomial((f(w), c) for w, c in self.terms.items())

    def star(self) -> "LaurentPolynomial":
        """X^λ -> X^{-λ}, u -> 1/u, v -> 1/v."""
        return LaurentPolynomial._raw({tuple(-a for a in w): c.star() for w, c in self.terms.items()})

    def invert_q(self) -> "LaurentPolynomial":
        return self.map_coefficients(CoefficientScalar.invert_q)

    def specialize_v(self, point) -> "LaurentPolynomial":
        out = {}
        for w, c in self.terms.items():
            try:
                out[w] = c.specialize_v(point)
            except PoleError as exc:
                raise PoleError(f"coefficient of X^{w}: {exc}") from None
        return LaurentPolynomial(out)

    def evaluate_coefficients(self, u, v) -> dict[Weight, Fraction]:
        return {w: c.evaluate(u, v) for w, c in self.terms.items()}

    def to_json(self) -> list[dict]:
        out = []
        for w in sorted(self.terms):
            num, den = self.terms[w].terms_json()
            out.append({"weight": list(w), "num": num, "den": den})
        return out

    @classmethod
    def from_json(cls, records: Sequence[Mapping]) -> "LaurentPolynomial":
        terms = {}
        for rec in records:
            num = _CTX.from_dict({(a, b): c for c, a, b in rec["num"]})
            den = _CTX.from_dict({(a, b): c for c, a, b in rec["den"]})
            terms[tuple(rec["weight"])] = CoefficientScalar(num, den)
        return cls(terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*X^{list(w)}" for w, c in sorted(self.terms.items()))


# --------------------------------------------------------------------------
def qpoly_coefficients(c: CoefficientScalar, e: int) -> list[int]:
    """Dense coefficient list of a q-polynomial given as a u-polynomial."""
    ser = c.u_series()
    if any(a < 0 or a % (2 * e) for a in ser) or any(x.denominator != 1 for x in ser.values()):
        raise ValueError(f"{c} is not an integer polynomial in q = u^{2 * e}")
    if not ser:
        return [0]
    out = [0] * (max(ser) // (2 * e) + 1)
    for a, x in ser.items():
        out[a // (2 * e)] = int(x)
    return out


def q_factorial(m: int) -> list[int]:
    """Coefficients of (q)_m = (1-q)(1-q^2)...(1-q^m)."""
    out = [1]
    for j in range(1, m + 1):
        nxt = out + [0] * j
        for k, c in enumerate(out):
            nxt[k + j] -= c
        out = nxt
    return out


class CharacterSeries:
    """Power series sum_{j<=N} q^j c_j with c_j an X-polynomial with constant coefficients.

    Coefficients of q^j for j > N are unknown; every operation returns a
    series whose coefficients are exact up to the order it reports.
    """

    __slots__ = ("order", "coeffs", "rank")

    def __init__(self, coeffs: Sequence[LaurentPolynomial], order: int, rank: int):
        coeffs = list(coeffs)[: order + 1]
        coeffs += [LaurentPolynomial()] * (order + 1 - len(coeffs))
        for j, c in enumerate(coeffs):
            for w, a in c.items():
                if not a.is_constant():
                    raise ValueError(f"coefficient of q^{j} X^{w} is not constant: {a}")
        self.coeffs = coeffs
        self.order = order
        self.rank = rank

    @classmethod
    def from_laurent(cls, f: LaurentPolynomial, e: int, order: int, rank: int) -> "CharacterSeries":
        """Read a polynomial with q-polynomial coefficients (u = q^{1/(2e)}) as a series."""
        buckets: list[dict] = [dict() for _ in range(order + 1)]
        for w, c in f.items():
            for j, a in enumerate(qpoly_coefficients(c, e)):
                if a and j <= order:
                    buckets[j][w] = a
        return cls([LaurentPolynomial(b) for b in buckets], order, rank)

    @classmethod
    def one(cls, order: int, rank: int) -> "CharacterSeries":
        return cls([LaurentPolynomial.constant(1, rank)], order, rank)

    def truncate(self, order: int) -> "CharacterSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return CharacterSeries(self.coeffs[: order + 1], order, self.rank)

    def _common(self, other: "CharacterSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "CharacterSeries") -> "CharacterSeries":
        n = self._common(other)
        return CharacterSeries([self.coeffs[j] + other.coeffs[j] for j in range(n + 1)], n, self.rank)

    def __neg__(self) -> "CharacterSeries":
        return CharacterSeries([-c for c in self.coeffs], self.order, self.rank)

    def __sub__(self, other: "CharacterSeries") -> "CharacterSeries":
        return self + (-other)

    def shift_q(self, k: int) -> "CharacterSeries":
        """Multiply by q^k (k >= 0); the known order grows by k."""
        if k < 0:
            raise ValueError("negative q-shift would lose exactness")
        return CharacterSeries([LaurentPolynomial()] * k + self.coeffs, self.order + k, self.rank)

    def times_x(self, weight: Weight) -> "CharacterSeries":
        return CharacterSeries([c.shift(weight) for c in self.coeffs], self.order, self.rank)

    def times_qpoly(self, p: Sequence[int]) -> "CharacterSeries":
        out = []
        for n in range(self.order + 1):
            acc = LaurentPolynomial()
            for k in range(min(n, len(p) - 1) + 1):
                if p[k]:
                    acc = acc + self.coeffs[n - k].scale(p[k])
            out.append(acc)
        return CharacterSeries(out, self.order, self.rank)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterSeries):
            return NotImplemented
        n = self._common(other)
        return all(self.coeffs[j] == other.coeffs[j] for j in range(n + 1))

    __hash__ = None

    def to_json(self) -> list[list[dict]]:
        return [c.to_json() for c in self.coeffs]

    def __repr__(self) -> str:
        parts = [f"q^{j}*[{c}]" for j, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts or ["0"]) + f" + O(q^{self.order + 1})"


def series_divide(num: CharacterSeries | Sequence[int], den: Sequence[int], order: int,
                  rank: int = 1) -> CharacterSeries:
    """Quotient num/den as a series exact through q^order.

    ``den`` is a dense q-coefficient list with nonzero constant term; ``num``
    is a CharacterSeries or a dense q-coefficient list of constants.
    """
    den = list(den)
    if not den or den[0] == 0:
        raise ZeroDivisionError("series_divide needs a denominator with nonzero constant term")
    if not isinstance(num, CharacterSeries):
        num = CharacterSeries([LaurentPolynomial.constant(a, rank) for a in num], order, rank)
    if num.order < order:
        raise ValueError(f"numerator known only to order {num.order} < {order}")
    inv0 = Fraction(1, den[0])
    out: list[LaurentPolynomial] = []
    for n in range(order + 1):
        acc = num.coeffs[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            if den[k]:
                acc = acc - out[n - k].scale(den[k])
        out.append(acc.scale(inv0))
    return CharacterSeries(out, order, num.rank)
