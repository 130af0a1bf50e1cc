"""Batch command line front end.

Subcommands compute tables and certificates, cross-check independent routes,
and emit JSON, CSV, or LaTeX.  Identical argument vectors produce
byte-identical output.

Exit codes: 0 success, 1 invalid arguments, 2 enumeration budget exceeded,
3 verification failure (an identity that should hold did not; treat the
emitted artifact as a bug certificate).
"""

import argparse
import json
import sys

from . import verification
from .budgets import EnumerationBudgetError
from .invariants import (beta_t, principal_specialization, rank_W_t_q,
                         rank_alpha_beta, w_t, W_t_q)
from .multisym import S_BASIS, Z_BASIS, phi_t
from .permutations import RankSet
from .posets import (boolean_lattice, chain_census, fixture, mobius,
                     rank_select, read_poset, segre_power, subspace_lattice,
                     verify_el, write_poset)
from .qpoly import QRatNF
from .symfunc import schur_to_h

OK, USAGE_ERROR, BUDGET_ERROR, VERIFICATION_FAILURE = 0, 1, 2, 3


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CLIError(message)


def _parse_rank_set(raw, n: int) -> RankSet:
    if raw is None or raw == "none":
        return RankSet.of(n, ())
    try:
        elems = tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError as exc:
        raise CLIError(f"bad rank set {raw!r}: {exc}") from None
    return RankSet.of(n, elems)


def _parse_partition(raw) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in raw.split(",") if x.strip())
    except ValueError as exc:
        raise CLIError(f"bad partition {raw!r}: {exc}") from None
    return parts


def _latex_table(rows) -> str:
    ncols = len(rows[0])
    out = ["\\begin{tabular}{|" + "c|" * ncols + "}", "\\hline"]
    for i, row in enumerate(rows):
        out.append(" & ".join(row) + r" \\")
        if i == 0:
            out.append("\\hline")
    out.append("\\hline")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


def _render(fmt: str, payload: dict, rows) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        return "\n".join(",".join(str(c) for c in row) for row in rows) + "\n"
    if fmt == "latex":
        return _latex_table([[str(c) for c in row] for row in rows])
    raise CLIError(f"unknown format {fmt!r}")


def _emit(text: str, path) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _msf_rows(F):
    rows = [["mus", "coeff"]]
    for term in F.to_payload()["terms"]:
        mus = ";".join(".".join(str(p) for p in mu) if mu else "-" for mu in term["mus"])
        rows.append([mus, term["coeff"]])
    return rows


def _poly_rows(coeffs):
    rows = [["power", "coeff"]]
    for k, c in enumerate(coeffs):
        rows.append([str(k), str(c)])
    return rows


# ---------------------------------------------------------------------------
# subcommands

def _cmd_wtable(args) -> int:
    values = []
    for t in range(1, args.tmax + 1):
        row = [str(w_t(n, t, route=args.route)) for n in range(args.nmax + 1)]
        values.append({"t": t, "values": row})
    payload = {"command": "wtable", "nmax": args.nmax, "tmax": args.tmax,
               "route": args.route, "rows": values}
    corner = "$t\\backslash n$" if args.format == "latex" else "t\\n"
    rows = [[corner] + [str(n) for n in range(args.nmax + 1)]]
    rows += [[str(r["t"])] + r["values"] for r in values]
    _emit(_render(args.format, payload, rows), args.output)
    return OK


def _cmd_wq(args) -> int:
    if args.rank_set is None:
        poly = W_t_q(args.n, args.t, route=args.route, budget=args.budget)
        ranks = None
    else:
        J = _parse_rank_set(args.rank_set, args.n)
        poly = rank_W_t_q(args.n, args.t, J, route=args.route, budget=args.budget)
        ranks = list(J)
    payload = {"command": "wq", "n": args.n, "t": args.t, "rank_set": ranks,
               "route": args.route, "coeffs": poly.coeff_strings(),
               "at_q_1": str(poly(1))}
    _emit(_render(args.format, payload, _poly_rows(poly.coeff_strings())), args.output)
    return OK


def _cmd_beta(args) -> int:
    if args.rank_set is None:
        F = beta_t(args.n, args.t, route=args.route)
        ranks = None
    else:
        J = _parse_rank_set(args.rank_set, args.n)
        route = args.route if args.route in ("syt", "recurrence", "inclusion-exclusion") else "recurrence"
        F = rank_alpha_beta(args.n, args.t, J, route=route)[1]
        ranks = list(J)
    F = F.to_basis(S_BASIS if args.basis == "S" else Z_BASIS)
    payload = {"command": "beta", "n": args.n, "t": args.t, "rank_set": ranks}
    payload.update(F.to_payload())
    _emit(_render(args.format, payload, _msf_rows(F)), args.output)
    return OK


def _cmd_phi(args) -> int:
    lam = _parse_partition(args.schur)
    F = phi_t(schur_to_h(lam), args.t).to_basis(S_BASIS)
    negative = any(c < 0 for _, c in F.items())
    payload = {"command": "phi", "schur": list(lam), "t": args.t,
               "not_all_nonnegative": negative}
    payload.update(F.to_payload())
    _emit(_render(args.format, payload, _msf_rows(F)), args.output)
    return OK


def _cmd_ps(args) -> int:
    J = _parse_rank_set(args.rank_set, args.n)
    if len(J) == 0 and args.rank_set is None:
        F = beta_t(args.n, args.t)
        qside = W_t_q(args.n, args.t)
        ranks = None
    else:
        F = rank_alpha_beta(args.n, args.t, J, route="recurrence")[1]
        qside = rank_W_t_q(args.n, args.t, J)
        ranks = list(J)
    ps = principal_specialization(F)
    equal = ps == QRatNF(qside, args.n, args.t)
    payload = {"command": "ps", "n": args.n, "t": args.t, "rank_set": ranks,
               "ps_numerator": ps.numerator.coeff_strings(),
               "qside_numerator": qside.coeff_strings(),
               "denominator": {"n": args.n, "t": args.t},
               "equal": equal}
    rows = [["series"] + [f"q^{k}" for k in range(max(len(ps.numerator.coeffs),
                                                      len(qside.coeffs), 1))]]
    rows.append(["ps"] + ps.numerator.coeff_strings())
    rows.append(["qside"] + qside.coeff_strings())
    rows.append(["equal", str(equal)])
    _emit(_render(args.format, payload, rows), args.output)
    return OK if equal else VERIFICATION_FAILURE


def _load_poset(args):
    sources = [s for s in (args.fixture, args.boolean, args.subspace, args.input) if s is not None]
    if len(sources) != 1:
        raise CLIError("choose exactly one of --fixture, --boolean, --subspace, --input")
    if args.fixture is not None:
        P = fixture(args.fixture)
    elif args.boolean is not None:
        P = boolean_lattice(args.boolean)
    elif args.subspace is not None:
        n, q = args.subspace
        P = subspace_lattice(n, q, budget=args.budget)
    else:
        with open(args.input) as fh:
            P = read_poset(fh.read())
    if args.power != 1:
        P = segre_power(P, args.power, budget=args.budget)
    return P


def _cmd_poset(args) -> int:
    P = _load_poset(args)
    if args.action == "build":
        _emit(write_poset(P), args.output)
        return OK
    if args.action == "verify-el":
        report = verify_el(P, budget=args.budget)
        decreasing = chain_census(P, budget=args.budget).decreasing if report.passed else None
        payload = {"command": "poset verify-el", "poset": P.name or "poset",
                   "passed": report.passed,
                   "witness": repr(report.witness) if report.witness else None,
                   "detail": report.detail or None,
                   "decreasing_chains": decreasing}
        rows = [["field", "value"]] + [[k, str(v)] for k, v in payload.items() if k != "command"]
        _emit(_render(args.format, payload, rows), args.output)
        return OK if report.passed else VERIFICATION_FAILURE
    if args.action == "mobius":
        Q = P
        ranks = None
        if args.rank_set is not None:
            J = _parse_rank_set(args.rank_set, P.rank)
            Q = rank_select(P, J)
            ranks = list(J)
        mu = mobius(Q)
        payload = {"command": "poset mobius", "poset": P.name or "poset",
                   "rank_set": ranks, "mobius": str(mu)}
        rows = [["field", "value"], ["mobius", str(mu)]]
        _emit(_render(args.format, payload, rows), args.output)
        return OK
    if args.action == "census":
        census = chain_census(P, budget=args.budget)
        words = [{"word": [list(l) for l in word], "count": c}
                 for word, c in sorted(census.word_counts.items())]
        descents = [{"set": sorted(D), "count": c}
                    for D, c in sorted(census.descent_counts().items(),
                                       key=lambda kv: sorted(kv[0]))]
        payload = {"command": "poset census", "poset": P.name or "poset",
                   "length": census.length, "total": census.total,
                   "decreasing": census.decreasing,
                   "words": words, "descent_sets": descents}
        rows = [["word", "count"]]
        rows += [[" ".join(",".join(str(v) for v in l) for l in w["word"]), str(w["count"])]
                 for w in words]
        _emit(_render(args.format, payload, rows), args.output)
        return OK
    raise CLIError(f"unknown poset action {args.action!r}")


def _cmd_verify(args) -> int:
    lines: list[str] = []
    results = verification.run_suite(args.suite, echo=lines.append)
    ok = all(r["ok"] for r in results)
    if args.format == "json":
        payload = {"command": "verify", "suite": args.suite, "passed": ok,
                   "results": [{"name": r["name"], "ok": r["ok"],
                                "problems": r["problems"]} for r in results]}
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        _emit("\n".join(lines) + "\n", args.output)
    return OK if ok else VERIFICATION_FAILURE


# ---------------------------------------------------------------------------
# parser

def build_parser() -> _Parser:
    parser = _Parser(prog="segrelat", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        if fmt:
            p.add_argument("--format", choices=("json", "csv", "latex"), default="json")
        p.add_argument("--output", help="write to this path instead of stdout")
        p.add_argument("--budget", type=int, default=None,
                       help="override enumeration budgets (also: SEGRELAT_BUDGET)")

    p = sub.add_parser("wtable", help="table of no-common-ascent tuple counts")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--tmax", type=int, required=True)
    p.add_argument("--route", choices=("recurrence", "brute", "dimension", "genfun"),
                   default="recurrence")
    common(p)
    p.set_defaults(func=_cmd_wtable)

    p = sub.add_parser("wq", help="inversion-weighted polynomials, optionally rank-selected")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rank-set", default=None, help="comma-separated ranks, or 'none'")
    p.add_argument("--route", choices=("recurrence", "brute"), default="recurrence")
    common(p)
    p.set_defaults(func=_cmd_wq)

    p = sub.add_parser("beta", help="homology characteristics, optionally rank-selected")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--basis", choices=("Z", "S"), default="Z")
    p.add_argument("--rank-set", default=None)
    p.add_argument("--route", default="recurrence")
    common(p)
    p.set_defaults(func=_cmd_beta)

    p = sub.add_parser("phi", help="diagonal image of a Schur function, with negativity flag")
    p.add_argument("--schur", required=True, help="partition, e.g. 3,2,2")
    p.add_argument("--t", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("ps", help="principal-specialization identity certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--rank-set", default=None)
    common(p)
    p.set_defaults(func=_cmd_ps)

    p = sub.add_parser("poset", help="explicit poset oracle commands")
    p.add_argument("action", choices=("build", "verify-el", "mobius", "census"))
    p.add_argument("--fixture", default=None)
    p.add_argument("--boolean", type=int, default=None, metavar="N")
    p.add_argument("--subspace", type=int, nargs=2, default=None, metavar=("N", "Q"))
    p.add_argument("--input", default=None, help="poset v1 file")
    p.add_argument("--power", type=int, default=1, help="Segre power to apply")
    p.add_argument("--rank-set", default=None)
    common(p)
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("verify", help="route-agreement battery")
    p.add_argument("--suite", choices=("small", "full"), default="small")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except EnumerationBudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
