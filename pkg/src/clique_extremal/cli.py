"""Command-line entry point.

Exit codes: 0 success, 1 verification failure or failed precondition,
2 usage or input-format error, 3 size guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import (
    boundt_value,
    case1_exponent,
    case1_supremum,
    case2_exponent,
    case2_supremum,
    g_recursion_check,
    optimize_constant,
)
from .cliques import count_cliques_oracle, count_cliques_peeling
from .constructions import (
    disjoint_union_matching_complements,
    immersion_tightness,
    matching_complement,
    random_graph,
    star_of_clique,
)
from .embed import (
    certificate_dumps,
    certificate_loads,
    immerse_dense,
    sigma_exhaustive,
    subdivide_dense,
    verify_immersion,
    verify_subdivision,
)
from .errors import FormatError, GuardExceeded, PreconditionViolation
from .formats import load_graph, write_edge_list, write_graph6
from .limits import SIGMA_MAX_N, SUBSET_MAX_N, effective_guard
from .params import min_tset_missing, t_param, tset_missing_upper_estimate
from .suite import report_to_csv, report_to_json, run_suite

_FORMATS = ("edgelist", "graph6")


def _parse_terminals(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"terminals must be comma-separated integers, got {raw!r}") from exc


def _parse_params(raw: str, names: tuple[str, ...]) -> dict[str, int]:
    parts = [p for p in raw.split(",") if p.strip() != ""]
    if len(parts) != len(names):
        raise ValueError(f"--params expects {','.join(names)}, got {raw!r}")
    try:
        return {name: int(part) for name, part in zip(names, parts)}
    except ValueError as exc:
        raise ValueError(f"--params must be integers, got {raw!r}") from exc


def _emit(data: dict, as_json: bool, human_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------


def _cmd_count(args: argparse.Namespace) -> int:
    g = load_graph(args.input, args.format)
    results = {}
    if args.method in ("oracle", "both"):
        results["oracle"] = count_cliques_oracle(g, args.limit_n)
    if args.method in ("peeling", "both"):
        results["peeling"] = count_cliques_peeling(g)[0]
    if args.method == "both" and results["oracle"] != results["peeling"]:
        print(
            f"COUNT MISMATCH: oracle {results['oracle']} vs peeling {results['peeling']}",
            file=sys.stderr,
        )
        return 1
    stats = results.get("peeling") or results["oracle"]
    data = {
        "n": g.n,
        "method": args.method,
        "count_including_empty": stats.count_including_empty,
        "count_nonempty": stats.count_nonempty,
        "clique_number": stats.clique_number,
    }
    _emit(
        data,
        args.json,
        [
            f"cliques including empty: {stats.count_including_empty}",
            f"cliques non-empty:      {stats.count_nonempty}",
            f"clique number:          {stats.clique_number}",
        ],
    )
    return 0


def _cmd_sigma(args: argparse.Namespace) -> int:
    g = load_graph(args.input, args.format)
    sigma = sigma_exhaustive(g, args.limit_n)
    _emit({"n": g.n, "sigma": sigma}, args.json, [f"sigma = {sigma}"])
    return 0


def _cmd_params(args: argparse.Namespace) -> int:
    g = load_graph(args.input, args.format)
    if args.approx and g.n > effective_guard(SUBSET_MAX_N, args.limit_n):
        return _cmd_params_approx(g, args)
    report = t_param(g, args.limit_n)
    data = {
        "n": g.n,
        "t_param": report.t_param,
        "witness": sorted(report.witness),
        "delta": report.delta,
        "sigma_lower": report.sigma_lower,
        "sigma_upper": report.sigma_upper,
    }
    lines = [
        f"t(G) = {report.t_param}  witness {sorted(report.witness)}",
        f"max missing degree = {report.delta}",
        f"sigma sandwich: {report.sigma_lower} <= sigma <= {report.sigma_upper}",
    ]
    if g.n <= effective_guard(SIGMA_MAX_N):
        sigma = sigma_exhaustive(g)
        data["sigma"] = sigma
        lines.append(f"sigma (exhaustive) = {sigma}")
    if args.t is not None:
        value, witness = min_tset_missing(g, args.t, args.limit_n)
        data["t"] = args.t
        data["min_tset_missing"] = value
        data["tset_witness"] = sorted(witness)
        lines.append(f"min missing edges over {args.t}-sets = {value}  witness {sorted(witness)}")
    _emit(data, args.json, lines)
    return 0


def _cmd_params_approx(g, args: argparse.Namespace) -> int:
    """Averaging certificates only: an upper bound on the minimum missing
    count per t and hence a lower bound on the t parameter. Never exact."""
    t_lower = max(t for t in range(1, g.n + 1) if tset_missing_upper_estimate(g, t) <= g.n - t)
    data = {
        "n": g.n,
        "exact": False,
        "t_param_lower_bound": t_lower,
        "delta": g.max_missing_degree(),
    }
    lines = [
        "approximate report (averaging certificates, not exact)",
        f"t(G) >= {t_lower}",
        f"max missing degree = {data['delta']}",
    ]
    if args.t is not None:
        estimate = tset_missing_upper_estimate(g, args.t)
        data["t"] = args.t
        data["min_tset_missing_upper_bound"] = estimate
        lines.append(f"min missing edges over {args.t}-sets <= {estimate}")
    _emit(data, args.json, lines)
    return 0


def _cmd_embed(args: argparse.Namespace) -> int:
    g = load_graph(args.input, args.format)
    terminals = _parse_terminals(args.terminals)
    if args.lemma == "immersion":
        cert = immerse_dense(g, terminals)
    else:
        cert = subdivide_dense(g, terminals)
    text = certificate_dumps(cert)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args.input, args.format)
    with open(args.certificate, "r", encoding="ascii") as fh:
        cert = certificate_loads(fh.read())
    mode = args.mode
    if mode is None:
        mode = {"strong_immersion": "strong", "weak_immersion": "weak", "subdivision": "subdivision"}[
            cert.kind
        ]
    if mode == "subdivision":
        result = verify_subdivision(g, cert)
    else:
        result = verify_immersion(g, cert, mode)
    data = {"valid": result.ok, "mode": mode, "violations": list(result.violations)}
    lines = [f"certificate {'VALID' if result.ok else 'INVALID'} ({mode})"]
    lines.extend(f"  violation: {v}" for v in result.violations)
    _emit(data, args.json, lines)
    return 0 if result.ok else 1


def _cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    if family in ("star", "union", "tightness") and args.t is None:
        raise ValueError(f"--t is required for the {family} family")
    if family == "star":
        g = star_of_clique(args.n, args.t)
    elif family == "matching":
        g = matching_complement(args.n)
    elif family == "union":
        g = disjoint_union_matching_complements(args.n, args.t)
    elif family == "tightness":
        g, terminals = immersion_tightness(args.n, args.t)
        if args.output_format == "edgelist":
            print(f"# designated terminals: {','.join(str(v) for v in sorted(terminals))}")
    else:
        if args.p is None:
            raise ValueError("--p is required for the random family")
        g = random_graph(args.n, args.p, args.seed)
    if args.output_format == "edgelist":
        print(write_edge_list(g), end="")
    else:
        print(write_graph6(g))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    mode = args.mode
    if mode == "boundt":
        if args.params is None:
            raise ValueError("--params t,x,D is required for boundt")
        p = _parse_params(args.params, ("t", "x", "D"))
        value = boundt_value(p["t"], p["x"], p["D"])
        data = {
            "mode": mode,
            "log2_cliques": value.log2_cliques,
            "clique_number_bound": str(value.clique_number_bound),
        }
        _emit(data, args.json, [
            f"log2 clique bound = {value.log2_cliques:.6f}",
            f"clique number bound = {value.clique_number_bound}",
        ])
        return 0
    if mode == "recursion-check":
        if args.params is None:
            raise ValueError("--params m,x,t,d is required for recursion-check")
        p = _parse_params(args.params, ("m", "x", "t", "d"))
        check = g_recursion_check(p["m"], p["x"], p["t"], p["d"])
        data = {"mode": mode, "passed": check.passed, "failures": list(check.failures)}
        lines = [f"recursion check {'PASS' if check.passed else 'FAIL'}"]
        lines.extend(f"  {f}" for f in check.failures)
        _emit(data, args.json, lines)
        return 0 if check.passed else 1
    if mode == "case1":
        if args.c is not None:
            d = args.d if args.d is not None else max(1, int(2 * args.c * (args.c - 1)) + 1)
            value = case1_exponent(args.c, d)
            result_c, result_d = args.c, d
        else:
            sup = case1_supremum()
            value, result_c, result_d = sup.log2_bound, sup.c_value, sup.d_value
        data = {"mode": mode, "constant": value, "C": result_c, "D": result_d}
    elif mode == "case2":
        if args.c is not None:
            value, result_c, result_d = case2_exponent(args.c), args.c, None
        else:
            sup = case2_supremum()
            value, result_c, result_d = sup.log2_bound, sup.c_value, None
        data = {"mode": mode, "constant": value, "C": result_c, "D": result_d}
    else:
        result = optimize_constant(mode)
        data = {"mode": mode, "constant": result.log2_bound, "C": result.c_value, "D": result.d_value}
    _emit(data, args.json, [
        f"constant = {data['constant']:.6f}",
        f"maximizer C = {data['C']}, D = {data['D']}",
    ])
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    report = run_suite(seed=args.seed, quick=args.quick, threads=args.threads)
    if args.json:
        print(report_to_json(report), end="")
    elif args.csv:
        print(report_to_csv(report), end="")
    else:
        width = max(len(r.name) for r in report.results)
        for r in report.results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.name:<{width}}  {status}  {r.seconds:7.2f}s  {r.summary}")
        overall = "PASS" if report.passed else "FAIL"
        print(f"overall: {overall}")
    return 0 if report.passed else 1


# -- parser --------------------------------------------------------------------


def _add_graph_input(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="path to the graph file")
    sub.add_argument("--format", choices=_FORMATS, default="edgelist")
    sub.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clique-extremal")
    subs = parser.add_subparsers(dest="command", required=True)

    count = subs.add_parser("count", help="count cliques exactly")
    _add_graph_input(count)
    count.add_argument("--method", choices=("peeling", "oracle", "both"), default="both")
    count.add_argument("--limit-n", type=int, default=None, dest="limit_n")
    count.set_defaults(handler=_cmd_count)

    sigma = subs.add_parser("sigma", help="exact clique subdivision number")
    _add_graph_input(sigma)
    sigma.add_argument("--limit-n", type=int, default=None, dest="limit_n")
    sigma.set_defaults(handler=_cmd_sigma)

    params = subs.add_parser("params", help="t parameter, witness, and sigma sandwich")
    _add_graph_input(params)
    params.add_argument("--t", type=int, default=None)
    params.add_argument("--limit-n", type=int, default=None, dest="limit_n")
    params.add_argument(
        "--approx",
        action="store_true",
        help="beyond the subset guard, report averaging certificates instead of exact values",
    )
    params.set_defaults(handler=_cmd_params)

    embed = subs.add_parser("embed", help="construct an embedding certificate")
    _add_graph_input(embed)
    embed.add_argument("--lemma", choices=("immersion", "subdivision"), required=True)
    embed.add_argument("--terminals", required=True, help="comma-separated vertex list")
    embed.add_argument("--output", default=None, help="write the certificate JSON here")
    embed.set_defaults(handler=_cmd_embed)

    verify = subs.add_parser("verify", help="check a certificate against a graph")
    _add_graph_input(verify)
    verify.add_argument("--certificate", required=True)
    verify.add_argument("--mode", choices=("weak", "strong", "subdivision"), default=None)
    verify.set_defaults(handler=_cmd_verify)

    construct = subs.add_parser("construct", help="emit a generator graph")
    construct.add_argument("--family", choices=("star", "matching", "union", "tightness", "random"), required=True)
    construct.add_argument("--n", type=int, required=True)
    construct.add_argument("--t", type=int, default=None)
    construct.add_argument("--p", type=float, default=None)
    construct.add_argument("--seed", type=int, default=0)
    construct.add_argument("--output-format", choices=_FORMATS, default="edgelist", dest="output_format")
    construct.set_defaults(handler=_cmd_construct)

    bounds = subs.add_parser("bounds", help="bound evaluators and constants")
    bounds.add_argument(
        "--mode",
        choices=("boundt", "case1", "case2", "coarse", "refined", "recursion-check"),
        required=True,
    )
    bounds.add_argument(
        "--params",
        default=None,
        help="comma-separated integers: t,x,D for boundt; m,x,t,d for recursion-check",
    )
    bounds.add_argument("--c", type=float, default=None)
    bounds.add_argument("--d", type=int, default=None)
    bounds.add_argument("--json", action="store_true")
    bounds.set_defaults(handler=_cmd_bounds)

    paper = subs.add_parser("verify-paper", help="run the full verification suite")
    paper.add_argument("--seed", type=int, default=0)
    paper.add_argument("--quick", action="store_true")
    paper.add_argument("--threads", type=int, default=1)
    paper.add_argument("--json", action="store_true")
    paper.add_argument("--csv", action="store_true")
    paper.set_defaults(handler=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except PreconditionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
