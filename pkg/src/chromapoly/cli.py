"""Command-line entry point.

Subcommands: poly, eval, gadget (emit|certify), identity (run|run-all),
audit, cocircuits.  All numeric JSON fields are decimal strings; output is
deterministic given the inputs and seed, regardless of worker count.

Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 identity or
certification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import counting, gadgets, identities
from .cnf import parse_cnf
from .counting import (
    brute_count_at, chi_polynomial, convex_fast, harmonious_fast,
    polynomiality_audit,
)
from .errors import BudgetExceededError, NotPolynomialError
from .graphs import enumerate_cocircuits, fingerprint
from .graphio import emit_graph6, label_comment_lines, load_graph
from .polynomials import BINOMIAL, MONOMIAL
from .properties import parse_property

OK, INPUT_ERROR, BUDGET_ERROR, CHECK_FAILED = 0, 2, 3, 4

BUDGET_ENV = "CHROMAPOLY_BUDGET"


@dataclass(frozen=True)
class Config:
    enumeration_budget: int = counting.DEFAULT_BUDGET
    worker_count: int = 1
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self):
        if self.enumeration_budget < 10 ** 4:
            raise ValueError("enumeration budget must be at least 10^4")
        if self.worker_count < 1:
            raise ValueError("worker count must be at least 1")
        if self.output_format not in ("json", "text"):
            raise ValueError(f"unknown output format: {self.output_format!r}")


def _emit(payload: dict, config: Config) -> None:
    if config.output_format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for key in sorted(payload):
            print(f"{key}: {payload[key]}")


def _fail(message: str, config: Config, code: int) -> int:
    kind = {INPUT_ERROR: "input", BUDGET_ERROR: "budget",
            CHECK_FAILED: "mismatch"}[code]
    _emit({"error": {"code": kind, "message": message}}, config)
    return code


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_poly(args, config: Config) -> int:
    g = load_graph(args.graph)
    prop = parse_property(args.prop)
    payload = {"graph": fingerprint(g), "property": prop.name}
    try:
        poly = chi_polynomial(g, prop, config.enumeration_budget,
                              config.worker_count)
    except NotPolynomialError as exc:
        payload["audit"] = _audit_payload(exc.report)
        payload["counts_at"] = _counts_at(g, prop, config)
        _emit(payload, config)
        return OK
    poly = poly.in_basis(args.basis)
    payload.update(poly.to_json_dict())
    payload["counts_at"] = {}
    cross_checked = True
    for k in range(4):
        payload["counts_at"][str(k)] = str(int(poly.eval(k)))
        try:
            direct = brute_count_at(g, prop, k, config.enumeration_budget)
        except BudgetExceededError:
            cross_checked = False
            continue
        if direct != int(poly.eval(k)):
            return _fail(f"internal cross-check failed at k={k}", config,
                         CHECK_FAILED)
    payload["cross_checked"] = cross_checked
    _emit(payload, config)
    return OK


def _counts_at(g, prop, config: Config) -> dict:
    out = {}
    for k in range(4):
        try:
            out[str(k)] = str(brute_count_at(g, prop, k,
                                             config.enumeration_budget))
        except BudgetExceededError:
            break
    return out


def _cmd_eval(args, config: Config) -> int:
    g = load_graph(args.graph)
    prop = parse_property(args.prop)
    point = Fraction(args.point)
    payload = {"graph": fingerprint(g), "property": prop.name,
               "point": str(point), "fast": None}
    fast_value = None
    if point.denominator == 1 and point >= 0:
        k = int(point)
        if prop.family == "harmonious":
            fast_value = harmonious_fast(g, k, config.enumeration_budget)
            payload["fast"] = "T(k)"
        elif prop.family == "convex" and k <= 2:
            fast_value = convex_fast(g, k)
            payload["fast"] = "cocircuit"
    try:
        poly = chi_polynomial(g, prop, config.enumeration_budget,
                              config.worker_count)
        value = poly.eval(point)
    except NotPolynomialError as exc:
        if point.denominator != 1 or point < 0:
            return _fail("property is not a polynomial on this graph; "
                         "only integer palettes are countable", config,
                         INPUT_ERROR)
        value = Fraction(brute_count_at(g, prop, int(point),
                                        config.enumeration_budget))
        payload["audit"] = _audit_payload(exc.report)
    except BudgetExceededError:
        if fast_value is None:
            raise
        value = Fraction(fast_value)
    if fast_value is not None and Fraction(fast_value) != value:
        return _fail("fast path disagrees with the polynomial", config,
                     CHECK_FAILED)
    payload["value"] = str(value)
    _emit(payload, config)
    return OK


def _cmd_cocircuits(args, config: Config) -> int:
    g = load_graph(args.graph)
    summary = enumerate_cocircuits(g)
    payload = {"graph": fingerprint(g), "total": str(summary.total),
               "by_size": {str(k): str(v) for k, v in summary.by_size.items()}}
    _emit(payload, config)
    return OK


def _audit_payload(report) -> dict:
    return {
        "condition_A": "ok" if report.condition_a_ok else "violated",
        "condition_B": "ok" if report.condition_b_ok else "violated",
    }


def _cmd_audit(args, config: Config) -> int:
    g = load_graph(args.graph)
    prop = parse_property(args.prop)
    report = polynomiality_audit(g, prop, args.kmax, config.enumeration_budget)
    payload = {"graph": fingerprint(g), "property": prop.name,
               "k_max": str(args.kmax)}
    payload.update(_audit_payload(report))
    _emit(payload, config)
    return OK


_GADGET_KINDS = ("nae_mcc", "alpha_du", "monotone_maxcut", "maxcut_cocirc")


def _build_gadget(kind: str, args):
    if kind == "maxcut_cocirc":
        if args.graph is None or args.k is None:
            raise ValueError("maxcut_cocirc needs --graph and --k")
        g = load_graph(args.graph)
        return gadgets.maxcut_to_cocircuits(g, args.k)
    if args.cnf is None:
        raise ValueError(f"{kind} needs --cnf")
    with open(args.cnf, "r", encoding="utf-8") as fh:
        cnf = parse_cnf(fh.read())
    if kind == "nae_mcc":
        return gadgets.nae_to_mcc(cnf, args.t), None
    if kind == "alpha_du":
        return gadgets.alpha_sat_to_du(cnf), None
    return gadgets.monotone2sat_to_maxcut(cnf)


def _cmd_gadget_emit(args, config: Config) -> int:
    graph, target = _build_gadget(args.kind, args)
    text = emit_graph6(graph) + "\n"
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    sidecar = args.out + ".labels"
    with open(sidecar, "w", encoding="utf-8") as fh:
        fh.write("\n".join(label_comment_lines(graph)) + "\n")
    payload = {"graph": fingerprint(graph), "n": str(graph.n),
               "m": str(graph.edge_count), "out": args.out,
               "labels": sidecar}
    if target is not None:
        payload["target_size"] = str(target)
    _emit(payload, config)
    return OK


def _cmd_gadget_certify(args, config: Config) -> int:
    budget = config.enumeration_budget
    if args.kind == "maxcut_cocirc":
        if args.graph is None or args.k is None:
            raise ValueError("maxcut_cocirc needs --graph and --k")
        cert = gadgets.certify_maxcut_cocircuits(load_graph(args.graph),
                                                 args.k, budget)
    else:
        if args.cnf is None:
            raise ValueError(f"{args.kind} needs --cnf")
        with open(args.cnf, "r", encoding="utf-8") as fh:
            cnf = parse_cnf(fh.read())
        if args.kind == "nae_mcc":
            cert = gadgets.certify_nae_mcc(cnf, args.t, budget)
        elif args.kind == "alpha_du":
            cert = gadgets.certify_alpha_du(cnf, budget)
        else:
            cert = gadgets.certify_monotone_maxcut(cnf, budget)
    _emit(cert.as_json_dict(), config)
    return OK if cert.match else CHECK_FAILED


def _bounds_from_args(args) -> identities.Bounds:
    return identities.Bounds(
        max_n=args.max_n, max_e=args.max_e, max_join=args.max_join,
        max_l=args.max_l, max_m=args.max_m, k_max=args.k_max,
        samples=args.samples)


def _identity_payload(result) -> dict:
    return result.as_json_dict()


def _cmd_identity_run(args, config: Config) -> int:
    result = identities.run_identity(args.name, _bounds_from_args(args),
                                     config.seed)
    _emit(_identity_payload(result), config)
    return OK if result.passed else CHECK_FAILED


def _cmd_identity_run_all(args, config: Config) -> int:
    results = identities.run_all(_bounds_from_args(args), config.seed,
                                 config.worker_count)
    payload = {"identities": [_identity_payload(r) for r in results],
               "passed": all(r.passed for r in results)}
    _emit(payload, config)
    return OK if payload["passed"] else CHECK_FAILED


# ---------------------------------------------------------------------------
# parser

def _add_bounds(parser: argparse.ArgumentParser):
    parser.add_argument("--max-n", type=int, default=4, dest="max_n")
    parser.add_argument("--max-e", type=int, default=None, dest="max_e")
    parser.add_argument("--max-join", type=int, default=2, dest="max_join")
    parser.add_argument("--max-l", type=int, default=3, dest="max_l")
    parser.add_argument("--max-m", type=int, default=5, dest="max_m")
    parser.add_argument("--k-max", type=int, default=3, dest="k_max")
    parser.add_argument("--samples", type=int, default=12)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help=f"enumeration budget (or env {BUDGET_ENV})")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--json", action="store_const", const="json",
                        dest="format", help="shorthand for --format json")

    parser = argparse.ArgumentParser(
        prog="chromapoly", parents=[common],
        description="Exact counting polynomials for graph coloring properties")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", parents=[common],
                       help="counting polynomial of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--prop", required=True)
    p.add_argument("--basis", choices=(BINOMIAL, MONOMIAL), default=BINOMIAL)
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate the counting polynomial")
    p.add_argument("--graph", required=True)
    p.add_argument("--prop", required=True)
    p.add_argument("--point", required=True,
                   help="exact rational, e.g. 3, -1 or 7/2")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("gadget", help="reduction constructions")
    gsub = p.add_subparsers(dest="gadget_command", required=True)
    for name, handler in (("emit", _cmd_gadget_emit),
                          ("certify", _cmd_gadget_certify)):
        q = gsub.add_parser(name, parents=[common])
        q.add_argument("kind", choices=_GADGET_KINDS)
        q.add_argument("--cnf")
        q.add_argument("--graph")
        q.add_argument("--k", type=int)
        q.add_argument("--t", type=int, default=None)
        if name == "emit":
            q.add_argument("--out", required=True)
        q.set_defaults(handler=handler)

    p = sub.add_parser("identity", help="exact identity checks")
    isub = p.add_subparsers(dest="identity_command", required=True)
    q = isub.add_parser("run", parents=[common])
    q.add_argument("--name", required=True)
    _add_bounds(q)
    q.set_defaults(handler=_cmd_identity_run)
    q = isub.add_parser("run-all", parents=[common])
    _add_bounds(q)
    q.set_defaults(handler=_cmd_identity_run_all)

    p = sub.add_parser("audit", parents=[common],
                       help="polynomiality audit of a property")
    p.add_argument("--graph", required=True)
    p.add_argument("--prop", required=True)
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("cocircuits", parents=[common],
                       help="enumerate cocircuits")
    p.add_argument("--graph", required=True)
    p.set_defaults(handler=_cmd_cocircuits)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    if budget is None and os.environ.get(BUDGET_ENV):
        budget = int(os.environ[BUDGET_ENV])
    if budget is None:
        budget = counting.DEFAULT_BUDGET
    try:
        config = Config(budget, args.workers, args.format, args.seed)
    except ValueError as exc:
        print(json.dumps({"error": {"code": "input", "message": str(exc)}},
                         sort_keys=True, separators=(",", ":")))
        return INPUT_ERROR
    try:
        return args.handler(args, config)
    except BudgetExceededError as exc:
        return _fail(str(exc), config, BUDGET_ERROR)
    except (ValueError, OSError) as exc:
        return _fail(str(exc), config, INPUT_ERROR)


if __name__ == "__main__":
    sys.exit(main())
