"""Named verification suites over fixed grids.

Each suite returns a SuiteResult listing every failed identity with the
data needed to reproduce it.  The grids are the ones used by the acceptance
tests; ``types`` narrows a suite to the given (type, kind) pairs.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .affine_weyl import affine_weyl_group
from .algebra import CharacterSeries, LaurentPolynomial, monomial_scalar
from .hecke import E_via_T, apply_T, apply_Y, y_eigenvalue
from .macdonald import ram_yip
from .rootdata import RootDatum, build
from .weyl_characters import (
    dimension,
    filtration_report,
    global_char,
    is_positive_character,
    local_char,
    local_char_macdonald,
    norm_matches_q_lambda,
    q_lambda,
    verify_m1_lemma,
)
from .whittaker import check_a1_eigen, verify_rr

__all__ = ["Failure", "SuiteResult", "SUITES", "run_suite", "weight_grid"]


@dataclass(frozen=True)
class Failure:
    identity: str
    cartan_type: str
    kind: str
    lam: tuple = ()
    sigma: str = ""
    detail: str = ""

    def sort_key(self):
        return (sum(abs(c) for c in self.lam), len(self.sigma), self.cartan_type, self.lam, self.sigma)

    def line(self) -> str:
        out = f"{self.identity}: type={self.cartan_type}({self.kind}) lambda={list(self.lam)} sigma={self.sigma or '-'}"
        return out + (f" ({self.detail})" if self.detail else "")


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, failure: Failure) -> None:
        self.checks += 1
        if not cond:
            self.failures.append(failure)

    def minimal(self) -> Failure | None:
        return min(self.failures, key=Failure.sort_key) if self.failures else None

    def summary(self) -> str:
        state = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {state} ({self.checks} checks, {len(self.failures)} failures)"

    def merge(self, other: "SuiteResult") -> None:
        self.checks += other.checks
        self.failures.extend(other.failures)


def weight_grid(rank: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(lo, hi + 1), repeat=rank))


# (type, kind, coordinate bound) for the E-polynomial grids
ROUTE_GRID = [("A1", "u", 2), ("A2", "u", 2), ("A3", "u", 1), ("C2", "d", 1)]
EIGEN_GRID = [("A1", "u", 1), ("A2", "u", 1), ("C2", "d", 1)]
WEYL_GRID = [("A1", "u", 6), ("A2", "u", 2)]
BRAID_TYPES = [("A2", "u"), ("C2", "d")]


def _select(grid, types):
    if not types:
        return grid
    keep = {(t, k) for t, k in types}
    return [g for g in grid if (g[0], g[1]) in keep]


def _antidominant_grid(datum: RootDatum, bound: int):
    if datum.rank == 1:
        return [(-m,) for m in range(bound + 1)]
    return weight_grid(datum.rank, -bound, 0)


# ---------------------------------------------------------------------------
def suite_route(types=None) -> SuiteResult:
    """Ram-Yip sum = normalized T_sigma E_lambda."""
    res = SuiteResult("route")
    for t, k, b in _select(ROUTE_GRID, types):
        D = build(t, k)
        for lam in weight_grid(D.rank, -b, b):
            base = ram_yip(D, lam, 0).value
            for s in range(D.W.order):
                res.check(ram_yip(D, lam, s).value == E_via_T(D, lam, s, base=base),
                          Failure("ram_yip = E_via_T", t, k, lam, D.W.name(s)))
    return res


def suite_special(types=None) -> SuiteResult:
    """v = 0 and v = infinity limits against the QB and reverse-QB walk sums."""
    res = SuiteResult("special")
    for t, k, b in _select(ROUTE_GRID, types):
        D = build(t, k)
        for lam in weight_grid(D.rank, -b, b):
            for s in range(D.W.order):
                g = ram_yip(D, lam, s).value
                name = D.W.name(s)
                res.check(g.specialize_v(0) == ram_yip(D, lam, s, "v0").value,
                          Failure("generic|v=0 = QB walk sum", t, k, lam, name))
                res.check(g.specialize_v("inf").invert_q() == ram_yip(D, lam, s, "vinf").value,
                          Failure("generic|v=inf = reverse QB walk sum", t, k, lam, name))
    return res


def suite_weyl(types=None) -> SuiteResult:
    """QBG recursion = E(q, 0), positivity, sigma-independent dimension, m = 1 lemma."""
    res = SuiteResult("weyl")
    for t, k, b in _select(WEYL_GRID, types):
        D = build(t, k)
        for lam in _antidominant_grid(D, b):
            dims = set()
            for s in range(D.W.order):
                name = D.W.name(s)
                rec = local_char(D, s, lam)
                res.check(rec == local_char_macdonald(D, s, lam), Failure("recursion = E(q,0)", t, k, lam, name))
                res.check(is_positive_character(D, rec), Failure("character positivity", t, k, lam, name))
                dims.add(dimension(rec))
                for i in range(1, D.rank + 1):
                    if lam[i - 1] < 0:
                        rep = verify_m1_lemma(D, s, lam, i)
                        res.check(rep.holds, Failure(f"m=1 lemma ({rep.case} case)", t, k, lam, name, f"i={i}"))
            res.check(len(dims) == 1, Failure("dimension independent of sigma", t, k, lam, "", str(sorted(dims))))
    return res


def suite_norm(types=None, order: int = 12) -> SuiteResult:
    """(q)_{w0 lambda} = v = 0 norm and global * (q)_{w0 lambda} = local."""
    res = SuiteResult("norm")
    for t, k, b in _select(WEYL_GRID, types):
        D = build(t, k)
        for lam in _antidominant_grid(D, b):
            res.check(norm_matches_q_lambda(D, lam), Failure("(q)_{w0 lambda} = norm at v=0", t, k, lam))
            ql = q_lambda(lam)
            for s in range(D.W.order):
                glob = global_char(D, s, lam, order)
                loc = CharacterSeries.from_laurent(local_char(D, s, lam), D.e, order, D.rank)
                res.check(glob.times_qpoly(ql) == loc, Failure("global * (q)_lambda = local", t, k, lam, D.W.name(s)))
        if t == "A1":
            # ch W_{-m omega} = X^{-1} ch W_{(-m+1) omega} + ch W_{m omega}
            for m in range(1, b + 1):
                lhs = global_char(D, 0, (-m,), order)
                rhs = global_char(D, 0, (-m + 1,), order).times_x((-1,)) + global_char(D, 1, (-m,), order)
                res.check(lhs == rhs, Failure("A1 decomposition", t, k, (-m,)))
    return res


def suite_eigen(types=None) -> SuiteResult:
    """Y^{omega_j} E_lambda = eigenvalue * E_lambda."""
    res = SuiteResult("eigen")
    for t, k, b in _select(EIGEN_GRID, types):
        D = build(t, k)
        for lam in weight_grid(D.rank, -b, b):
            E = ram_yip(D, lam, 0).value
            for j in range(D.rank):
                mu = tuple(int(i == j) for i in range(D.rank))
                ok = apply_Y(D, mu, E) == E.scale(y_eigenvalue(D, lam, mu))
                res.check(ok, Failure("Y eigen-equation", t, k, lam, "id", f"mu=omega_{j + 1}"))
    return res


def suite_rr(types=None, M: int = 8, order: int = 12) -> SuiteResult:
    """sl2 recurrences and the q-Toda Dunkl eigen-equations on the truncated Omega."""
    res = SuiteResult("rr")
    if types and ("A1", "u") not in set(types):
        return res
    rep = verify_rr(M, order)
    for (eq, m), ok in sorted(rep.results.items()):
        res.check(ok, Failure(f"recurrence ({eq})", "A1", "u", (-m,), "", f"m={m}"))
    for m, ok in sorted(rep.implied.items()):
        res.check(ok, Failure("(2),(3) imply (1),(4)", "A1", "u", (-m,), "", f"m={m}"))
    for chk in check_a1_eigen(M, order):
        detail = f"first mismatch {chk.mismatches[0]}" if chk.mismatches else ""
        res.check(chk.ok, Failure(f"{chk.direction} eigen-equation on Omega", "A1", "u", (), "", detail))
    return res


FILTRATION_CASES = [("A1", "u"), ("A2", "u")]


def suite_filtration(types=None) -> SuiteResult:
    """Leaf count = dim W(omega_i), independent of sigma; leaf characters add up."""
    res = SuiteResult("filtration")
    for t, k in _select(FILTRATION_CASES, types):
        D = build(t, k)
        for i in range(1, D.rank + 1):
            wi = tuple(-int(j == i - 1) for j in range(D.rank))
            dim = dimension(local_char(D, 0, wi))
            lams = [wi, tuple(2 * c for c in wi), tuple(-1 for _ in range(D.rank))]
            for lam in lams:
                for s in range(D.W.order):
                    rep = filtration_report(D, s, lam, i)
                    name = D.W.name(s)
                    res.check(len(rep.leaves) == dim,
                              Failure("leaf count = dim W(omega_i)", t, k, lam, name, f"i={i}, {len(rep.leaves)} vs {dim}"))
                    res.check(rep.reconciles, Failure("leaf characters sum to ch W", t, k, lam, name, f"i={i}"))
    return res


def _is_monic_triangular(D: RootDatum, lam, s: int, E: LaurentPolynomial) -> tuple[bool, str]:
    G = affine_weyl_group(D, "Y")
    top = D.W.act_x(s, lam)
    if not E.coeff(top).is_one():
        return False, f"coefficient of X^{top} is {E.coeff(top)}"
    lam_plus = D.W.act_x(D.W.longest, G.antidominant(lam))
    for mu, _ in E.items():
        mu_plus = D.W.act_x(D.W.longest, G.antidominant(mu))
        diff = D.X.root_coordinates(tuple(a - b for a, b in zip(lam_plus, mu_plus)))
        if any(c < 0 or c.denominator != 1 for c in diff):
            return False, f"X^{mu} is not below lambda in dominance order"
        if s == 0 and mu_plus == lam_plus and mu != lam:
            if D.W.length[G.sigma_lambda(mu)] <= D.W.length[G.sigma_lambda(lam)]:
                return False, f"X^{mu} in the orbit is not below lambda"
    return True, ""


def _random_poly(D: RootDatum, rng: random.Random) -> LaurentPolynomial:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        w = tuple(rng.randint(-2, 2) for _ in range(D.rank))
        c = monomial_scalar(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(-2, 2), rng.randint(-2, 2))
        terms[w] = terms[w] + c if w in terms else c
    return LaurentPolynomial(terms)


def _braid_order(G, i: int, j: int) -> int:
    w = G.mul(G.simple_reflections[i], G.simple_reflections[j])
    cur = w
    for m in range(1, 13):
        if cur == G.identity:
            return m
        cur = G.mul(cur, w)
    raise AssertionError(f"s_{i} s_{j} has infinite or large order")


def suite_struct(types=None, seed: int = 0, samples: int = 100, words: int = 3) -> SuiteResult:
    """Monic triangularity, reduced-word independence, Hecke relations, star duality."""
    res = SuiteResult("struct")
    for t, k, b in _select(ROUTE_GRID, types):
        D = build(t, k)
        W = D.W
        G = affine_weyl_group(D, "Y")
        for lam in weight_grid(D.rank, -b, b):
            for s in range(W.order):
                E = ram_yip(D, lam, s).value
                ok, why = _is_monic_triangular(D, lam, s, E)
                res.check(ok, Failure("monic and triangular", t, k, lam, W.name(s), why))
            m, _ = G.minimal_rep(lam)
            base = ram_yip(D, lam, 0).value
            for rw in G.all_reduced_words(m, limit=words)[1:]:
                res.check(ram_yip(D, lam, 0, word=rw).value == base,
                          Failure("reduced-word independence", t, k, lam, "id", G.format_word(rw)))
            dual = tuple(-c for c in W.act_x(W.longest, lam))
            res.check(ram_yip(D, lam, W.longest).value == ram_yip(D, dual, 0).value.star(),
                      Failure("E^{w0}_lambda = (E_{-w0 lambda})^*", t, k, lam, "w0"))
    rng = random.Random(seed)
    for t, k in [tk for tk in BRAID_TYPES if not types or tk in set(types)]:
        D = build(t, k)
        G = affine_weyl_group(D, "X")
        v = monomial_scalar(1, 0, 1)
        vinv = monomial_scalar(1, 0, -1)
        n = D.rank
        for _ in range(samples):
            f = _random_poly(D, rng)
            for i in range(n + 1):
                Tf = apply_T(D, i, f)
                quad = apply_T(D, i, Tf) - Tf.scale(v - vinv) - f
                res.check(quad.is_zero(), Failure("quadratic relation", t, k, (), "", f"i={i}, f={f}"))
                res.check(apply_T(D, i, Tf, -1) == f, Failure("T_i^{-1} T_i = 1", t, k, (), "", f"i={i}"))
            for i, j in itertools.combinations(range(n + 1), 2):
                mij = _braid_order(G, i, j)
                a, c = f, f
                for step in range(mij):
                    a = apply_T(D, (i, j)[step % 2], a)
                    c = apply_T(D, (j, i)[step % 2], c)
                res.check(a == c, Failure("braid relation", t, k, (), "", f"i={i}, j={j}, m={mij}"))
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "route": suite_route,
    "special": suite_special,
    "weyl": suite_weyl,
    "norm": suite_norm,
    "eigen": suite_eigen,
    "rr": suite_rr,
    "filtration": suite_filtration,
    "struct": suite_struct,
}


def run_suite(name: str, types: Iterable[tuple[str, str]] | None = None, **opts) -> list[SuiteResult]:
    """Run one suite, or all of them for name == 'all'."""
    types = list(types) if types else None
    if name == "all":
        return [run_suite(n, types, **opts)[0] for n in SUITES]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    fn = SUITES[name]
    accepted = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    return [fn(types, **{k: v for k, v in opts.items() if k in accepted and v is not None})]
