"""Graded characters of generalized Weyl modules.

Characters are LaurentPolynomials in X whose coefficients are polynomials
in q = u^{2e}.  The module W_{sigma(lambda)} has its cyclic vector in weight
sigma(lambda) and degree 0.

The recursion follows the chain of quotients

    W_{sigma(lambda)} = W(0) -> W(1) -> ... -> W(r) = W_{sigma(lambda + omega_i)}

attached to a fixed reduced word of t_{-omega_i} with coroots beta_1..beta_r.
The map W(m) -> W(m+1) has a kernel exactly when sigma -> sigma s_gamma is an
edge of the quantum Bruhat graph, gamma = -Re beta_{m+1}; the kernel is a
shifted copy of W_{sigma s_gamma(lambda)}(m+1).

Only simply-laced types are handled: there alpha and alpha^vee are the same
vector in fundamental coordinates.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine_weyl import ReducedWord, affine_weyl_group
from .algebra import (
    CharacterSeries,
    LaurentPolynomial,
    monomial_scalar,
    q_factorial,
    series_divide,
)
from .macdonald import ram_yip, norm_squared
from .qbg import FiltrationPath, build_qbg
from .rootdata import AffineRoot, RootDatum, Weight, hat_sigma

__all__ = [
    "WeylModuleSpec",
    "FundamentalChain",
    "fundamental_chain",
    "local_char",
    "local_char_recursion",
    "local_char_macdonald",
    "global_char",
    "q_lambda",
    "verify_m1_lemma",
    "filtration_report",
    "dimension",
    "is_positive_character",
    "UnsupportedTypeError",
    "norm_matches_q_lambda",
    "M1Report",
    "Leaf",
    "FiltrationReport",
]


class UnsupportedTypeError(ValueError):
    """The Weyl-module reading of E is only available in simply-laced types."""


def _require_simply_laced(datum: RootDatum) -> None:
    if not datum.simply_laced:
        raise UnsupportedTypeError(
            f"Weyl-module characters are available for simply-laced types only, not {datum.cartan_type}; "
            "use the raw E-polynomial computation (macweyl E --mode v0) instead"
        )


def _add(a: Sequence[int], b: Sequence[int], k: int = 1) -> Weight:
    return tuple(x + k * y for x, y in zip(a, b))


def _q(datum: RootDatum, k: int):
    return monomial_scalar(1, 2 * datum.e * k, 0)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class FundamentalChain:
    """A reduced word of t_{-omega_i} and its coroot sequence."""

    i: int
    word: ReducedWord
    betas: tuple[AffineRoot, ...]

    @property
    def r(self) -> int:
        return len(self.betas)

    def label(self, m: int) -> Weight:
        """gamma = -Re beta_{m+1}, a positive root."""
        return tuple(-c for c in self.betas[m].finite)


_chains: dict[tuple, FundamentalChain] = {}


def fundamental_chain(datum: RootDatum, i: int) -> FundamentalChain:
    key = (datum.cartan_type, datum.kind, i)
    hit = _chains.get(key)
    if hit is not None:
        return hit
    if not 1 <= i <= datum.rank:
        raise ValueError(f"node {i} is not in 1..{datum.rank}")
    G = affine_weyl_group(datum, "Y")
    omega = tuple(-int(j == i - 1) for j in range(datum.rank))
    word = G.reduced_word(G.translation(omega))
    betas = G.beta_sequence(word)
    first = tuple(-c for c in datum.Y.simple_roots[i - 1])
    if betas[0].finite != first:
        raise AssertionError(f"Re beta_1 = {betas[0].finite}, expected -alpha_{i}^vee")
    out = FundamentalChain(i, word, betas)
    _chains[key] = out
    return out


@dataclass(frozen=True)
class WeylModuleSpec:
    """W^nu_{sigma(lambda)}(m) for the chain of node i.

    ``shift`` is the affine weight (finite part, q-degree) of the cyclic
    vector; ``None`` means (sigma(lambda), 0).
    """

    sigma: int
    lam: Weight
    i: int | None = None
    m: int = 0
    shift: tuple[Weight, int] | None = None

    def validate(self, datum: RootDatum) -> None:
        lam = tuple(self.lam)
        if len(lam) != datum.rank:
            raise ValueError(f"weight {lam} has the wrong rank")
        if not datum.X.is_antidominant(lam):
            raise ValueError(f"lambda = {lam} is not antidominant")
        if not 0 <= self.sigma < datum.W.order:
            raise ValueError(f"sigma index {self.sigma} out of range")
        if self.m == 0:
            return
        if self.i is None:
            raise ValueError("a characteristic m > 0 needs a node i")
        r = fundamental_chain(datum, self.i).r
        if not 0 <= self.m <= r:
            raise ValueError(f"m = {self.m} is outside 0..{r}")
        if lam[self.i - 1] >= 0:
            raise ValueError(f"m > 0 needs <alpha_{self.i}^vee, lambda> < 0")


class _Engine:
    """Memo table shared by all computations of one root datum.

    The stored values are deterministic, so concurrent inserts of the same
    key are harmless; the lock only keeps the dict consistent.
    """

    def __init__(self, datum: RootDatum):
        _require_simply_laced(datum)
        self.datum = datum
        self.W = datum.W
        self.qbg = build_qbg(datum)
        self.memo: dict[tuple, LaurentPolynomial] = {}
        self.lock = threading.Lock()

    def _store(self, key, value):
        with self.lock:
            return self.memo.setdefault(key, value)

    def local(self, sigma: int, lam: Weight) -> LaurentPolynomial:
        if not any(lam):
            return LaurentPolynomial.constant(1, self.datum.rank)
        i = next(k for k, c in enumerate(lam, start=1) if c < 0)
        return self.chain(sigma, lam, i, 0)

    def kernel_shift(self, sigma: int, lam: Weight, ch: FundamentalChain, m: int) -> tuple[Weight, int]:
        """l_{alpha,m} * sigma^(alpha) for alpha = -Re beta_{m+1}."""
        gamma = ch.label(m)
        alpha = self.datum.y_root_to_x(gamma)
        count = sum(1 for b in ch.betas[: m] if b.finite == tuple(-c for c in gamma))
        ell = -self.datum.X.pair_coroot(alpha, lam) - count
        img = hat_sigma(self.datum, sigma, AffineRoot(alpha, 0))
        return tuple(ell * c for c in img.finite), ell * img.degree

    def chain(self, sigma: int, lam: Weight, i: int, m: int) -> LaurentPolynomial:
        """Character of W_{sigma(lambda)}(m), cyclic vector at weight sigma(lambda) in degree 0."""
        key = (sigma, lam, i, m)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        W = self.W
        ch = fundamental_chain(self.datum, i)
        here = W.act_x(sigma, lam)
        if m == ch.r:
            up = _add(lam, self.datum.X.fundamental_weights[i - 1])
            out = self.local(sigma, up).shift(_add(here, W.act_x(sigma, up), -1))
            return self._store(key, out)
        out = self.chain(sigma, lam, i, m + 1)
        gamma = ch.label(m)
        if self.qbg.has_edge(sigma, gamma) is not None:
            s1 = W.mul(sigma, W.reflection_y(gamma))
            fin, deg = self.kernel_shift(sigma, lam, ch, m)
            target = _add(here, fin)
            kern = self.chain(s1, lam, i, m + 1).shift(_add(target, W.act_x(s1, lam), -1))
            out = out + (kern.scale(_q(self.datum, deg)) if deg else kern)
        return self._store(key, out)


_engines: dict[tuple, _Engine] = {}
_engines_lock = threading.Lock()


def _engine(datum: RootDatum) -> _Engine:
    key = (datum.cartan_type, datum.kind)
    with _engines_lock:
        eng = _engines.get(key)
        if eng is None:
            eng = _engines[key] = _Engine(datum)
    return eng


# ---------------------------------------------------------------------------
def local_char_recursion(datum: RootDatum, spec: WeylModuleSpec) -> LaurentPolynomial:
    """Character of W^nu_{sigma(lambda)}(m) from the QBG recursion."""
    spec.validate(datum)
    eng = _engine(datum)
    lam = tuple(spec.lam)
    if spec.m == 0:
        out = eng.local(spec.sigma, lam)
    else:
        out = eng.chain(spec.sigma, lam, spec.i, spec.m)
    if spec.shift is not None:
        fin, deg = spec.shift
        out = out.shift(_add(fin, datum.W.act_x(spec.sigma, lam), -1))
        if deg:
            out = out.scale(_q(datum, deg))
    return out


def local_char(datum: RootDatum, sigma: int, lam: Sequence[int]) -> LaurentPolynomial:
    return local_char_recursion(datum, WeylModuleSpec(sigma, tuple(lam)))


def local_char_macdonald(datum: RootDatum, sigma: int, lam: Sequence[int]) -> LaurentPolynomial:
    """E_lambda^sigma(X; q, 0) read as the character of W_{sigma(lambda)}."""
    _require_simply_laced(datum)
    lam = tuple(lam)
    if not datum.X.is_antidominant(lam):
        raise ValueError(f"lambda = {lam} is not antidominant")
    return ram_yip(datum, lam, sigma, "v0").value


def q_lambda(lam: Sequence[int]) -> list[int]:
    """Dense coefficients of (q)_{w0 lambda} = prod_i (q)_{m_i}, lambda = -sum m_i omega_i."""
    out = [1]
    for c in lam:
        f = q_factorial(-c)
        nxt = [0] * (len(out) + len(f) - 1)
        for a, x in enumerate(out):
            for b, y in enumerate(f):
                nxt[a + b] += x * y
        out = nxt
    return out


def global_char(datum: RootDatum, sigma: int, lam: Sequence[int], order: int) -> CharacterSeries:
    """ch of the global module as a q-series through q^order."""
    lam = tuple(lam)
    loc = local_char(datum, sigma, lam)
    num = CharacterSeries.from_laurent(loc, datum.e, order, datum.rank)
    return series_divide(num, q_lambda(lam), order, datum.rank)


def dimension(f: LaurentPolynomial) -> Fraction:
    """Value at q = 1, X = 1."""
    return sum((c.evaluate(1, 1) for _, c in f.items()), Fraction(0))


def is_positive_character(datum: RootDatum, f: LaurentPolynomial) -> bool:
    """Every coefficient is a q-polynomial with nonnegative integer coefficients."""
    step = 2 * datum.e
    for _, c in f.items():
        if not c.is_polynomial():
            return False
        for a, x in c.u_series().items():
            if a < 0 or a % step or x < 0 or x.denominator != 1:
                return False
    return True


# ---------------------------------------------------------------------------
@dataclass
class M1Report:
    sigma: int
    lam: Weight
    i: int
    case: str  # "negative" or "positive": the sign of sigma(Re beta_1)
    holds: bool
    other_holds: bool


def verify_m1_lemma(datum: RootDatum, sigma: int, lam: Sequence[int], i: int) -> M1Report:
    """Check the m = 1 identity selected by the sign of sigma(Re beta_1^i).

    negative:  ch W_{s(l)} = (1 - q^{m_i}) ch W_{s(l)}(1) + ch W_{s s_i(l)}
    positive:  ch W_{s(l)} = (1 - q^{m_i}) ch W_{s(l)}(1) + q^{m_i} ch W_{s s_i(l)}
    """
    lam = tuple(lam)
    mi = -lam[i - 1]
    if mi <= 0:
        raise ValueError(f"need <alpha_{i}^vee, lambda> < 0, got {lam}")
    W = datum.W
    ch = fundamental_chain(datum, i)
    img = W.act_y(sigma, ch.betas[0].finite)
    case = "positive" if datum.Y.is_positive_root(img) else "negative"
    s1 = W.mul(sigma, W.simple[i - 1])
    full = local_char(datum, sigma, lam)
    one = local_char_recursion(datum, WeylModuleSpec(sigma, lam, i, 1))
    other = local_char(datum, s1, lam)
    base = one.scale(1 - _q(datum, mi))
    neg = base + other
    pos = base + other.scale(_q(datum, mi))
    holds, other_holds = (full == neg, full == pos) if case == "negative" else (full == pos, full == neg)
    return M1Report(sigma, lam, i, case, holds, other_holds)


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Leaf:
    path: FiltrationPath
    tau: int
    shift: tuple[Weight, int]

    def character(self, datum: RootDatum, lam_up: Weight) -> LaurentPolynomial:
        return local_char_recursion(datum, WeylModuleSpec(self.tau, lam_up, shift=self.shift))


@dataclass
class FiltrationReport:
    sigma: int
    lam: Weight
    i: int
    word: ReducedWord
    leaves: list[Leaf] = field(default_factory=list)
    reconciles: bool = False


def filtration_report(datum: RootDatum, sigma: int, lam: Sequence[int], i: int) -> FiltrationReport:
    """Leaves (tau, nu) of the filtration of the cokernel, one per QBG path.

    The character identity checked is

        ch W_{sigma(lambda)} = sum over leaves of ch W^nu_{tau(lambda + omega_i)},

    which after division by (q)_{w0 lambda} is the statement that the global
    module minus its q^{m_i}-shifted copy is filtered by the leaf modules.
    """
    lam = tuple(lam)
    if lam[i - 1] >= 0:
        raise ValueError(f"need <alpha_{i}^vee, lambda> < 0, got {lam}")
    eng = _engine(datum)
    W = datum.W
    ch = fundamental_chain(datum, i)
    labels = [ch.label(m) for m in range(ch.r)]
    up = _add(lam, datum.X.fundamental_weights[i - 1])
    report = FiltrationReport(sigma, lam, i, ch.word)
    for path in eng.qbg.filtration_paths(sigma, labels):
        fin, deg = W.act_x(sigma, lam), 0
        for pos, vert in zip(path.steps, path.vertices):
            dfin, ddeg = eng.kernel_shift(vert, lam, ch, pos)
            fin, deg = _add(fin, dfin), deg + ddeg
        report.leaves.append(Leaf(path, path.end, (fin, deg)))
    total = LaurentPolynomial()
    for leaf in report.leaves:
        total = total + leaf.character(datum, up)
    report.reconciles = total == local_char(datum, sigma, lam)
    return report


def norm_matches_q_lambda(datum: RootDatum, lam: Sequence[int]) -> bool:
    """(q)_{w0 lambda} against the v = 0 norm."""
    c = norm_squared(datum, tuple(lam), "v0")
    want = q_lambda(lam)
    got = [0] * len(want)
    for a, x in c.u_series().items():
        if a % (2 * datum.e) or a // (2 * datum.e) >= len(got):
            return False
        got[a // (2 * datum.e)] = x
    return c.is_polynomial() and got == want
