"""Nonsymmetric Macdonald polynomials E_lambda^sigma from alcove walks.

Three modes:

* ``generic``: the Ram-Yip sum over all walks of type m_lambda starting at
  sigma, as an exact polynomial with coefficients in Q(u, v);
* ``v0``: the sum of q^{deg qwt(p)} X^{wt(p)} over quantum Bruhat walks;
* ``vinf``: the sum of q^{deg qwt*(p)} X^{wt(p)} over reverse quantum Bruhat
  walks.  This equals E at (q^{-1}, v = infinity).

The generic sum is evaluated by dynamic programming over prefix states of
the walk: walks that reach the same element of W(Y~) after j steps share
all later factors, so they are merged.  Each partial sum is kept as a
polynomial numerator over the common denominator v^l prod_j (1 - xi_j).

Normalization: each term carries v^{l(dir p)}, and the sum is multiplied by
v^{-l(sigma sigma_lambda^{-1})} = v^{-l(dir p_empty)}.  This makes the
coefficient of X^{sigma(lambda)} equal to 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine_weyl import AffineWeylGroup, ReducedWord, affine_weyl_group
from .algebra import RING, CoefficientScalar, LaurentPolynomial, monomial_scalar, scalar
from .qbg import build_qbg
from .rootdata import AffineRoot, RootDatum, Weight
from .walks import WalkType, enumerate_walks

__all__ = [
    "MacdonaldResult",
    "ram_yip",
    "ram_yip_bruteforce",
    "norm_squared",
    "norm_v0_simple_product",
    "DEFAULT_WALK_CAP",
]

DEFAULT_WALK_CAP = 20
MODES = ("generic", "v0", "vinf")


@dataclass(frozen=True)
class MacdonaldResult:
    lam: Weight
    sigma: int
    mode: str
    value: LaurentPolynomial
    word: ReducedWord


def _word_for(G: AffineWeylGroup, lam: Sequence[int], word: ReducedWord | None) -> ReducedWord:
    m, _ = G.minimal_rep(lam)
    if word is None:
        return G.reduced_word(m)
    if G.evaluate(word) != m or len(word.letters) != G.length(m):
        raise ValueError("supplied word is not a reduced expression of m_lambda")
    return word


def _xi_exponents(datum: RootDatum, beta: AffineRoot) -> tuple[int, int]:
    """(u, v) exponents of xi = q^{deg beta} v^{-<2 rho^{vee Y}, Re beta>}."""
    v_exp = -2 * datum.rho_vee_y(beta.finite)
    if v_exp.denominator != 1:
        raise AssertionError(f"non-integral v-exponent for {beta}")
    return 2 * datum.e * beta.degree, int(v_exp)


def ram_yip(datum: RootDatum, lam: Sequence[int], sigma: int = 0, mode: str = "generic",
            word: ReducedWord | None = None, cap: int = DEFAULT_WALK_CAP) -> MacdonaldResult:
    """E_lambda^sigma in the requested mode."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    lam = tuple(lam)
    if len(lam) != datum.rank:
        raise ValueError(f"weight {lam} has the wrong rank for {datum.cartan_type}")
    G = affine_weyl_group(datum, "Y")
    word = _word_for(G, lam, word)
    wt = WalkType(datum, word)
    if mode == "generic":
        if len(word.letters) > cap:
            raise ValueError(f"l(m_lambda) = {len(word.letters)} exceeds the walk cap {cap}; "
                             "use a smaller lambda or the v0/vinf modes")
        value = _generic(datum, G, wt, sigma)
    else:
        reverse = mode == "vinf"
        acc: dict[Weight, dict[tuple[int, int], int]] = {}
        for p in wt.pruned(sigma, build_qbg(datum), reverse=reverse):
            deg = p.qwt_star[1] if reverse else p.qwt[1]
            slot = acc.setdefault(p.wt, {})
            key = (2 * datum.e * deg, 0)
            slot[key] = slot.get(key, 0) + 1
        value = LaurentPolynomial({w: CoefficientScalar.from_dict(t) for w, t in acc.items()})
    return MacdonaldResult(lam, sigma, mode, value, word)


def _generic(datum: RootDatum, G: AffineWeylGroup, wt: WalkType, sigma: int) -> LaurentPolynomial:
    one = RING.from_dict({(0, 0): 1})
    v = RING.from_dict({(0, 1): 1})
    one_minus_t = RING.from_dict({(0, 0): 1, (0, 2): -1})
    xis = []
    for b in wt.betas:
        a, c = _xi_exponents(datum, b)
        if c < 0:
            raise AssertionError(f"Re beta = {b.finite} is not a negative root; xi would not be polynomial")
        xis.append(RING.from_dict({(a, c): 1}))
    states = {wt.start_state(sigma): one}
    for j, letter in enumerate(wt.word.letters, start=1):
        xi = xis[j - 1]
        cross = v * (one - xi)
        fold_pos = one_minus_t
        fold_neg = one_minus_t * xi
        s = G.simple_reflections[letter]
        nxt: dict = {}
        for state, c in states.items():
            t = G.mul(state, s)
            add = c * cross
            nxt[t] = nxt[t] + add if t in nxt else add
            add = c * (fold_pos if wt.fold_sign(state, j) > 0 else fold_neg)
            nxt[state] = nxt[state] + add if state in nxt else add
        states = nxt
    ell = len(xis)
    den = RING.from_dict({(0, ell): 1})
    for xi in xis:
        den = den * (one - xi)
    pref = -datum.W.length[G.mul(G.finite(sigma), wt.element).direction]
    sums: dict[Weight, object] = {}
    # v^{l(dir) + pref} differs between endpoints; bring everything to a common v-power
    low = min(datum.W.length[e.direction] for e in states) + pref
    for e, c in states.items():
        k = datum.W.length[e.direction] + pref - low
        term = c * RING.from_dict({(0, k): 1})
        sums[e.weight] = sums[e.weight] + term if e.weight in sums else term
    vlow = RING.from_dict({(0, max(low, 0)): 1})
    den_low = den * RING.from_dict({(0, max(-low, 0)): 1})
    out = {}
    for w, num in sums.items():
        if not num.is_zero():
            out[w] = CoefficientScalar(num * vlow, den_low)
    return LaurentPolynomial(out)


def ram_yip_bruteforce(datum: RootDatum, lam: Sequence[int], sigma: int = 0) -> LaurentPolynomial:
    """Walk-by-walk evaluation of the Ram-Yip sum (independent of the merging above)."""
    G = affine_weyl_group(datum, "Y")
    word = _word_for(G, tuple(lam), None)
    v = monomial_scalar(1, 0, 1)
    vinv = monomial_scalar(1, 0, -1)
    xis = [monomial_scalar(1, *_xi_exponents(datum, b)) for b in G.beta_sequence(word)]
    total = LaurentPolynomial()
    pref = None
    for p in enumerate_walks(datum, sigma, word):
        if pref is None:  # the first walk in counter order is p_empty
            pref = -datum.W.length[p.dir]
        c = v ** (datum.W.length[p.dir] + pref)
        for j, eps in zip(p.J, p.signs):
            c = c * (vinv - v) / (1 - xis[j - 1])
            if eps < 0:
                c = c * xis[j - 1]
        total = total + LaurentPolynomial.monomial(p.wt, c)
    return total


def norm_squared(datum: RootDatum, lam: Sequence[int], mode: str = "generic") -> CoefficientScalar:
    """<E_lambda, E_lambda> as a product over Inv(m_lambda), with t = v^2.

    ``mode='v0'`` returns the v = 0 value, the product of (1 - q^m) over
    inversions whose real part is a negative simple root; it requires lambda
    antidominant.
    """
    lam = tuple(lam)
    G = affine_weyl_group(datum, "Y")
    m, _ = G.minimal_rep(lam)
    inv = G.inversion_set(m)
    e = datum.e
    if mode == "v0":
        if not datum.X.is_antidominant(lam):
            raise ValueError(f"v0 norm requires an antidominant weight, got {lam}")
        simple = {tuple(-c for c in a) for a in datum.Y.simple_roots}
        out = scalar(1)
        for b in inv:
            if b.finite in simple:
                out = out * (1 - monomial_scalar(1, 2 * e * b.degree, 0))
        return out
    if mode != "generic":
        raise ValueError(f"norm mode must be 'generic' or 'v0', got {mode!r}")
    out = scalar(1)
    for b in inv:
        h = datum.rho_vee_y(b.finite)
        if h.denominator != 1:
            raise AssertionError(f"non-integral height for {b}")
        h = int(h)
        qm = 2 * e * b.degree

        def factor(k: int) -> CoefficientScalar:
            return 1 - monomial_scalar(1, qm, 2 * k)

        out = out * factor(-h - 1) * factor(-h + 1) / (factor(-h) * factor(-h))
    return out


def norm_v0_simple_product(datum: RootDatum, lam: Sequence[int]) -> CoefficientScalar:
    """prod_i prod_{j=1}^{-(lambda, alpha_i^Y)} (1 - q^j) for antidominant lambda."""
    if not datum.X.is_antidominant(lam):
        raise ValueError(f"requires an antidominant weight, got {lam}")
    out = scalar(1)
    for a in datum.Y.simple_roots:
        k = -datum.pair(lam, a)
        if Fraction(k).denominator != 1:
            raise AssertionError("non-integral pairing with a simple root")
        for j in range(1, int(k) + 1):
            out = out * (1 - monomial_scalar(1, 2 * datum.e * j, 0))
    return out
