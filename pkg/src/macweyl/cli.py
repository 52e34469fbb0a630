"""Command-line entry point ``macweyl``.

Exit codes: 0 on success, 1 when a verification finds a failed identity,
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .affine_weyl import affine_weyl_group
from .hecke import apply_Y, y_eigenvalue
from .macdonald import DEFAULT_WALK_CAP, MODES, ram_yip
from .qbg import build_qbg
from .rootdata import CARTAN_MATRICES, RootDatum, build
from .verify import SUITES, run_suite
from .walks import enumerate_walks, filter_qb, filter_reverse_qb
from .weyl_characters import WeylModuleSpec, global_char, local_char_recursion
from .whittaker import omega_component

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(",") if c.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _datum(args) -> RootDatum:
    try:
        return build(args.type, args.affinization)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight(args, datum: RootDatum) -> tuple[int, ...]:
    lam = _ints(args.lam)
    if len(lam) != datum.rank:
        raise UsageError(f"--lambda needs {datum.rank} coordinates for {datum.cartan_type}, got {len(lam)}")
    return lam


def _sigma(args, datum: RootDatum) -> int:
    try:
        return datum.W.parse(args.sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(obj, out: str, text: str) -> None:
    if out == "json":
        sys.stdout.write(json.dumps(obj, indent=1) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _header(datum: RootDatum) -> dict:
    return {"type": datum.cartan_type, "affinization": datum.kind, "e": datum.e}


# ---------------------------------------------------------------------------
def cmd_E(args) -> int:
    datum = _datum(args)
    lam, sigma = _weight(args, datum), _sigma(args, datum)
    try:
        res = ram_yip(datum, lam, sigma, args.mode, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    G = affine_weyl_group(datum, "Y")
    obj = dict(_header(datum), **{
        "lambda": list(lam), "sigma": datum.W.name(sigma), "mode": args.mode,
        "word": G.format_word(res.word), "terms": res.value.to_json(),
    })
    _emit(obj, args.out, repr(res.value))
    return 0


def cmd_weyl_char(args) -> int:
    datum = _datum(args)
    lam, sigma = _weight(args, datum), _sigma(args, datum)
    i, m = (None, 0)
    if args.char:
        ch = _ints(args.char)
        if len(ch) != 2:
            raise UsageError("--char expects i,m")
        i, m = ch
    try:
        local = local_char_recursion(datum, WeylModuleSpec(sigma, lam, i, m))
        series = global_char(datum, sigma, lam, args.order) if args.glob else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    obj = dict(_header(datum), **{"lambda": list(lam), "sigma": datum.W.name(sigma), "char": [i, m] if i else None,
                                  "local": local.to_json()})
    text = f"local: {local!r}"
    if series is not None:
        obj["global"] = {"order": args.order, "coeffs": series.to_json()}
        text += f"\nglobal: {series!r}"
    _emit(obj, args.out, text)
    return 0


def cmd_qbg(args) -> int:
    datum = _datum(args)
    g = build_qbg(datum)
    W = datum.W
    if args.out == "dot":
        sys.stdout.write(g.to_dot())
        return 0
    edges = [{"from": W.name(s), "to": W.name(t), "label": list(a), "kind": k} for s, a, t, k in g.edges()]
    text = "\n".join(f"{e['from']} -> {e['to']} [{','.join(map(str, e['label']))}] {e['kind']}" for e in edges)
    _emit(dict(_header(datum), vertices=[W.name(w) for w in g.vertex_order()], edges=edges), args.out, text)
    return 0


def cmd_walks(args) -> int:
    datum = _datum(args)
    lam, sigma = _weight(args, datum), _sigma(args, datum)
    G = affine_weyl_group(datum, "Y")
    m, _ = G.minimal_rep(lam)
    word = G.reduced_word(m)
    if len(word.letters) > args.cap:
        raise UsageError(f"l(m_lambda) = {len(word.letters)} exceeds --cap {args.cap}")
    walks = list(enumerate_walks(datum, sigma, word))
    if args.filter == "qb":
        walks = filter_qb(datum, walks)
    elif args.filter == "rqb":
        walks = filter_reverse_qb(datum, walks)
    records = [p.to_json(datum) for p in walks]
    text = "\n".join(f"J={r['J']} wt={r['wt']} dir={r['dir']} J-={r['Jminus']} deg={r['qwt_deg']}" for r in records)
    _emit(dict(_header(datum), word=G.format_word(word), walks=records), args.out, text)
    return 0


def cmd_whittaker(args) -> int:
    datum = _datum(args)
    sigma = _sigma(args, datum)
    try:
        comp = omega_component(datum, sigma, Fraction(args.N), args.q_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"lambda={list(t.lam)} q^{t.q_exp} Z^{list(t.z_exp)}: {t.coeff!r}" for t in comp.terms.values()]
    _emit(comp.to_json(datum), args.out, "\n".join(lines))
    return 0


def cmd_check_eigen(args) -> int:
    datum = _datum(args)
    lam = _weight(args, datum)
    E = ram_yip(datum, lam, 0, "generic").value
    mus = [_ints(args.mu)] if args.mu else [tuple(int(i == j) for i in range(datum.rank)) for j in range(datum.rank)]
    status = 0
    rows = []
    for mu in mus:
        if len(mu) != datum.rank:
            raise UsageError("--mu has the wrong rank")
        ok = apply_Y(datum, mu, E) == E.scale(y_eigenvalue(datum, lam, mu))
        rows.append({"mu": list(mu), "ok": ok})
        if not ok:
            status = 1
    text = "\n".join(f"Y^{r['mu']} E_{list(lam)}: {'ok' if r['ok'] else 'FAILED'}" for r in rows)
    _emit(dict(_header(datum), **{"lambda": list(lam), "checks": rows}), args.out, text)
    return status


def cmd_verify(args) -> int:
    types = None
    if args.type:
        types = [(args.type, args.affinization)]
    opts = {"M": args.M, "order": args.order, "seed": args.seed, "samples": args.samples}
    try:
        results = run_suite(args.suite, types, **opts)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = 0
    records = []
    for r in results:
        rec = {"suite": r.name, "ok": r.ok, "checks": r.checks, "failures": len(r.failures)}
        if not r.ok:
            status = 1
            rec["counterexample"] = r.minimal().line()
        records.append(rec)
    text = []
    for r, rec in zip(results, records):
        text.append(r.summary())
        if not r.ok:
            text.append(f"  counterexample: {rec['counterexample']}")
    _emit({"results": records}, args.out, "\n".join(text))
    return status


# ---------------------------------------------------------------------------
def _common(p: argparse.ArgumentParser, outs=("json", "text"), default="text", lam=True, sigma=True) -> None:
    p.add_argument("--type", required=True, choices=sorted(CARTAN_MATRICES))
    p.add_argument("--affinization", default="u", choices=("u", "d"))
    if lam:
        p.add_argument("--lambda", dest="lam", required=True, help="weight in fundamental coordinates, e.g. --lambda=-1,0")
    if sigma:
        p.add_argument("--sigma", default="id", help="Weyl group element: id, w0, s1s2, ...")
    p.add_argument("--out", choices=outs, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="macweyl", description="Nonsymmetric Macdonald polynomials and Weyl modules")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("E", help="E_lambda^sigma via alcove walks")
    _common(p)
    p.add_argument("--mode", choices=MODES, default="generic")
    p.add_argument("--cap", type=int, default=DEFAULT_WALK_CAP, help="maximal walk length in generic mode")
    p.set_defaults(func=cmd_E)

    p = sub.add_parser("weyl-char", help="graded characters of generalized Weyl modules")
    _common(p)
    p.add_argument("--global", dest="glob", action="store_true", help="also print the global character")
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--char", help="characteristic i,m")
    p.set_defaults(func=cmd_weyl_char)

    p = sub.add_parser("qbg", help="the quantum Bruhat graph")
    _common(p, outs=("dot", "json", "text"), default="dot", lam=False, sigma=False)
    p.set_defaults(func=cmd_qbg)

    p = sub.add_parser("walks", help="alcove walks of type m_lambda")
    _common(p)
    p.add_argument("--filter", choices=("all", "qb", "rqb"), default="all")
    p.add_argument("--cap", type=int, default=16)
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("whittaker", help="series part of the q-Whittaker function")
    _common(p, default="json", lam=False)
    p.add_argument("--N", required=True, help="bound on (lambda,lambda)/2")
    p.add_argument("--q-order", dest="q_order", type=int, default=12)
    p.set_defaults(func=cmd_whittaker)

    p = sub.add_parser("check-eigen", help="Y-eigenvalue equation for E_lambda")
    _common(p, sigma=False)
    p.add_argument("--mu", help="coweight (default: every fundamental coweight)")
    p.set_defaults(func=cmd_check_eigen)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--type", choices=sorted(CARTAN_MATRICES))
    p.add_argument("--affinization", default="u", choices=("u", "d"))
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--out", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"macweyl: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
