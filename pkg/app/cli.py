"""
Command-line frontend for the Grundy toolkit.

Subcommands: grundy, reduce, verify, gen, eds, total, ec, serve.
Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or input error.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from app.config import configure_logging, get_limits
from app.errors import GrundyError, ParseError
from app.extended_clique import max_extended_clique
from app.graph_core import random_bipartite, random_bipartite_bounded, total_graph
from app.graph_io import (
    format_edge_set,
    format_extended_clique,
    read_graph,
    read_graph_with_budget,
    write_edge_list,
    write_graph,
)
from app.matching_domination import min_edge_dominating_exact, min_maximal_matching_exact
from app.oracles import max_independent_set_exact
from app.reduction import reduce_eds_to_grundy, verify_reduction
from app.reports import grundy_report
from app.schemas import EdsInstance, RunReport
from app.verification import run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# (report, exit status)
Outcome = Tuple[Optional[RunReport], int]


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1], got {value}")
    return value


# ============================================
# Subcommands
# ============================================

def cmd_grundy(args: argparse.Namespace) -> Outcome:
    return grundy_report(read_graph(args.path), args.method), EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> Outcome:
    path = Path(args.path)
    b, file_budget = read_graph_with_budget(path)
    if args.k is not None and file_budget is not None and args.k != file_budget:
        raise ParseError(f"budget {args.k} conflicts with the file's 'k {file_budget}' line", str(path))
    k = args.k if args.k is not None else file_budget
    if k is None:
        raise ParseError("no budget: pass k or end the edge list with a 'k <integer>' line", str(path))
    instance = EdsInstance(graph=b, budget=k)
    target = reduce_eds_to_grundy(instance)
    output = Path(args.output) if args.output else path.with_name(f"{path.stem}.complement.el")
    write_graph(target.graph, output)
    logger.info("[reduce] wrote %s (n=%d, m=%d)", output, target.graph.n, target.graph.m)

    results = {}
    status = EXIT_OK
    if args.check:
        check = verify_reduction(instance)
        results = {"gamma_prime": check.gamma_prime, "Gamma": check.gamma, "verdict": check.verdict}
        status = EXIT_OK if check.verdict == "PASS" else EXIT_FAIL

    report = RunReport(
        command="reduce",
        n=b.n,
        m=b.m,
        results=results,
        parameters={"k": k, "threshold": target.threshold, "output": str(output)},
    )
    return report, status


def cmd_verify(args: argparse.Namespace) -> Outcome:
    workers = args.workers if args.workers is not None else get_limits().workers
    result = run_suite(
        max_n=args.max_n,
        count=args.count,
        seeds=args.seeds,
        workers=workers,
        lemma_trials=args.lemma_trials,
    )
    report = RunReport(
        command="verify",
        results={"verdict": result.verdict},
        parameters={
            "max_n": result.max_n,
            "count": result.count,
            "seeds": result.seeds,
            "lemma_trials": result.lemma_trials,
        },
        identities=result.identities,
    )
    return report, EXIT_OK if result.verdict == "PASS" else EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> Outcome:
    if args.max_degree is not None:
        retries = get_limits().gen_retries
        b, _ = random_bipartite_bounded(args.n1, args.n2, args.p, args.seed, args.max_degree, retries)
    else:
        b, _ = random_bipartite(args.n1, args.n2, args.p, args.seed)
    output = Path(args.output) if args.output else Path(f"bipartite-{args.n1}-{args.n2}-{args.seed}.el")
    write_edge_list(b, output)

    parameters = {"n1": args.n1, "n2": args.n2, "p": args.p, "seed": args.seed, "output": str(output)}
    if args.max_degree is not None:
        parameters["max_degree"] = args.max_degree
    return RunReport(command="gen", n=b.n, m=b.m, parameters=parameters), EXIT_OK


def cmd_eds(args: argparse.Namespace) -> Outcome:
    g = read_graph(args.path)
    eds = min_edge_dominating_exact(g)
    mmm = min_maximal_matching_exact(g)
    witness = "EDS:\n" + format_edge_set(eds.edges) + "MATCHING:\n" + format_edge_set(mmm.edges)
    report = RunReport(command="eds", n=g.n, m=g.m, results={"gamma_prime": mmm.size}, witness=witness)
    return report, EXIT_OK


def cmd_total(args: argparse.Namespace) -> Outcome:
    path = Path(args.path)
    g = read_graph(path)
    total, origin = total_graph(g)
    output = Path(args.output) if args.output else path.with_name(f"{path.stem}.total.el")
    write_graph(total, output)

    results = {}
    if args.alpha:
        results["alpha_total"] = len(max_independent_set_exact(total))
    report = RunReport(
        command="total",
        n=g.n,
        m=g.m,
        results=results,
        parameters={"total_n": total.n, "total_m": total.m, "output": str(output)},
        witness="".join(f"{index} {node.label()}\n" for index, node in enumerate(origin.origin)),
    )
    return report, EXIT_OK


def cmd_ec(args: argparse.Namespace) -> Outcome:
    b = read_graph(args.path)
    ec = max_extended_clique(b)
    report = RunReport(
        command="ec",
        n=b.n,
        m=b.m,
        results={"Gamma": ec.size, "gamma_prime": b.n - ec.size},
        witness=format_extended_clique(ec),
    )
    return report, EXIT_OK


def cmd_serve(args: argparse.Namespace) -> Outcome:
    import uvicorn

    uvicorn.run("app.main:app", host=args.host, port=args.port)
    return None, EXIT_OK


# ============================================
# Output
# ============================================

def render_text(report: RunReport) -> str:
    lines = [f"command: {report.command}"]
    if report.n is not None:
        lines.append(f"n={report.n} m={report.m}")
    for key in sorted(report.parameters):
        lines.append(f"{key}: {report.parameters[key]}")
    for key in sorted(report.results):
        lines.append(f"{key}: {report.results[key]}")
    for identity in report.identities or []:
        status = "PASS" if identity.ok else "FAIL"
        lines.append(f"  {identity.name}: {identity.passed}/{identity.checked} {status}")
        for failure in identity.failures:
            lines.append(f"    {failure}")
    if report.witness:
        lines.append("witness:")
        lines.append(report.witness.rstrip("\n"))
    if report.elapsed_ms is not None:
        lines.append(f"elapsed_ms: {report.elapsed_ms:.3f}")
    return "\n".join(lines)


def render_json(report: RunReport) -> str:
    return json.dumps(report.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2)


# ============================================
# Parser
# ============================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grundy",
        description="Grundy numbers of complements of bipartite graphs, the EDS reduction and its verification suite.",
    )
    parser.add_argument("--json", action="store_true", help="print one JSON document instead of text")
    parser.add_argument("--timing", action="store_true", help="report elapsed milliseconds")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    grundy = sub.add_parser("grundy", help="Grundy number of a graph or of a bipartite graph's complement")
    grundy.add_argument("path")
    method = grundy.add_mutually_exclusive_group()
    method.add_argument("--exact", dest="method", action="store_const", const="exact",
                        help="exact search on the given graph")
    method.add_argument("--structural", dest="method", action="store_const", const="structural",
                        help="n - gamma'(b) for the complement of the bipartite input (default)")
    method.add_argument("--approx", dest="method", action="store_const", const="approx",
                        help="bounds chi <= Gamma <= 3 chi / 2 for the complement of the bipartite input")
    grundy.set_defaults(method="structural", handler=cmd_grundy)

    reduce = sub.add_parser("reduce", help="map an EDS instance (b, k) to the Grundy instance (complement(b), n - k)")
    reduce.add_argument("path")
    reduce.add_argument("k", type=_non_negative, nargs="?", default=None,
                        help="EDS budget (default: the file's trailing 'k <integer>' line)")
    reduce.add_argument("-o", "--output", help="complement file (default <stem>.complement.el)")
    reduce.add_argument("--check", action="store_true", help="also verify the equivalence on this instance")
    reduce.set_defaults(handler=cmd_reduce)

    verify = sub.add_parser("verify", help="run the identity suite")
    verify.add_argument("--max-n", type=_non_negative, default=6, help="exhaustive corpus bound")
    verify.add_argument("--count", type=_non_negative, default=500, help="random instances per seed")
    verify.add_argument("--seeds", type=int, nargs="+", default=[0])
    verify.add_argument("--workers", type=int, default=None, help="process pool size (default GRUNDY_WORKERS)")
    verify.add_argument("--lemma-trials", type=_non_negative, default=None,
                        help="random edge dominating sets per seed (default 2 * count)")
    verify.set_defaults(handler=cmd_verify)

    gen = sub.add_parser("gen", help="write a random bipartite graph")
    gen.add_argument("n1", type=_non_negative)
    gen.add_argument("n2", type=_non_negative)
    gen.add_argument("p", type=_probability)
    gen.add_argument("seed", type=int)
    gen.add_argument("--max-degree", type=_non_negative, default=None)
    gen.add_argument("-o", "--output")
    gen.set_defaults(handler=cmd_gen)

    eds = sub.add_parser("eds", help="minimum edge dominating set and minimum maximal matching")
    eds.add_argument("path")
    eds.set_defaults(handler=cmd_eds)

    total = sub.add_parser("total", help="write the total graph")
    total.add_argument("path")
    total.add_argument("-o", "--output", help="total graph file (default <stem>.total.el)")
    total.add_argument("--alpha", action="store_true", help="also report its independence number")
    total.set_defaults(handler=cmd_total)

    ec = sub.add_parser("ec", help="maximum extended clique of the complement of a bipartite graph")
    ec.add_argument("path")
    ec.set_defaults(handler=cmd_ec)

    serve = sub.add_parser("serve", help="run the HTTP API")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=cmd_serve)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], Outcome] = args.handler
    started = time.perf_counter()
    try:
        report, status = handler(args)
    except GrundyError as e:
        print(f"grundy {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"grundy {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if report is None:
        return status
    if args.timing:
        report = report.model_copy(update={"elapsed_ms": (time.perf_counter() - started) * 1000})
    print(render_json(report) if args.json else render_text(report))
    return status


if __name__ == "__main__":
    raise SystemExit(main())
