"""Command-line entry point.

Reports go to stdout as JSON; tables, verdicts and log lines go to stderr.
Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""
import argparse
import logging
import sys

from terminaltables import AsciiTable

from . import __version__
from .checks import GraphContext, check_names, resolve_checks, run_check
from .corpus import CorpusEntry, default_corpus, run_corpus
from .distances import distance_matrix
from .exceptions import AlphaMetricError, InvariantViolation, SizeCapError
from .generators import FAMILIES, generate, parse_params
from .globals import globals as g
from .graph import read_graph_file, write_graph_file
from .half_integer import HalfInteger
from .invariants import invariants_report
from .metric_triangles import triangles_report
from .transforms import hull_report, injective_hull, power, subdivide
from .utils.report import to_json

logger = logging.getLogger("alphametric")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def configure_logging(verbose=0, quiet=False):
    level = getattr(logging, g.log_level, logging.WARNING)
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    if quiet:
        level = logging.ERROR
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root = logging.getLogger("alphametric")
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


def _emit(report, args):
    sys.stdout.write(to_json(report, indent=None if args.json else 2))
    sys.stdout.write("\n")
    sys.stdout.flush()


def _table(rows, title, args):
    if not args.quiet and not args.json:
        sys.stderr.write(AsciiTable(rows, title).table + "\n")


def cmd_analyze(args):
    graph = read_graph_file(args.file)
    d = distance_matrix(graph)
    lambdas = [HalfInteger.parse(text) for text in args.lambdas] if args.lambdas else None
    report = invariants_report(graph, d, lambdas, args.threads)
    try:
        report.update(triangles_report(graph, d, args.threads))
    except SizeCapError as err:
        logger.warning("metric triangles skipped: %s", err)
    _emit(report, args)
    rows = [["Invariant", "Value"],
            ["vertices / edges", "{} / {}".format(graph.n, graph.m)],
            ["alpha index", report["alpha_index"]],
            ["hyperbolicity", str(HalfInteger(doubled=report["hyperbolicity_x2"]))],
            ["interval thinness", report["interval_thinness"]],
            ["slice triangle thinness", report["slice_triangle_thinness"]],
            ["diameter / radius", "{} / {}".format(report["diameter"], report["radius"])]]
    if "max_side" in report:
        rows.append(["max metric triangle side", report["max_side"]])
    _table(rows, args.file, args)
    return EXIT_OK


def cmd_generate(args):
    graph = generate(args.family, parse_params(args.params), args.seed)
    write_graph_file(graph, args.output)
    logger.info("generated %s with %d vertices and %d edges", args.family, graph.n, graph.m)
    return EXIT_OK


def cmd_transform(args):
    graph = read_graph_file(args.file)
    if args.transform == "subdivide":
        result, _ = subdivide(graph)
    elif args.transform == "power":
        result = power(graph, args.lam)
    else:
        cap = args.cap if args.cap is not None else g.hull_cap
        hull = injective_hull(graph, cap)
        result = hull.hull
        sidecar = to_json(hull_report(hull, args.dump_functions))
        if args.output == "-":
            logger.warning("hull sidecar not written when the hull goes to stdout")
        else:
            with open(args.output + ".json", "w", encoding="utf-8") as handle:
                handle.write(sidecar + "\n")
    write_graph_file(result, args.output)
    return EXIT_OK


def cmd_check(args):
    resolve_checks([args.check_id])
    graphs = [(path, read_graph_file(path)) for path in args.files]
    verdicts = []
    for path, graph in graphs:
        result = run_check(args.check_id, GraphContext(graph, args.threads, path))
        verdicts.append({"file": path, **result.as_report()})
    _emit({"check": args.check_id, "results": verdicts}, args)
    failed = [v for v in verdicts if not v["pass"]]
    if failed:
        first = failed[0]
        sys.stderr.write("FAIL {} {}: {}\n".format(args.check_id, first["file"], to_json(first["witness"], None)))
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _split(text):
    return [item.strip() for item in text.split(",") if item.strip()] if text else None


def cmd_corpus(args):
    checks = resolve_checks(_split(args.checks))
    entries = default_corpus(_split(args.families), args.seeds)
    for path in args.include or []:
        entries.append(CorpusEntry(path, read_graph_file(path)))
    report = run_corpus(entries, checks, args.threads, progress=not args.quiet and sys.stderr.isatty())
    _emit(report.as_report(), args)
    if not args.quiet and not args.json:
        sys.stderr.write(report.table() + "\n")
    if not report.passed:
        label, first = report.failures[0]
        sys.stderr.write("FAIL {} {}: {}\n".format(first.name, label, to_json(first.witness, None)))
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker pool size (default: all cores)")
    common.add_argument("--json", action="store_true", help="compact JSON, no tables on stderr")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    common.add_argument("--quiet", action="store_true", help="errors only, no progress bar or tables")
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog="alphametric",
                                     description="Exact metric invariants of graphs and checks of their properties.")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", parents=[common], help="invariants report of one graph")
    analyze.add_argument("file")
    analyze.add_argument("--lambda", dest="lambdas", action="append",
                         help="bow threshold, integer or p/2; repeatable (default: 0 and delta)")
    analyze.set_defaults(handler=cmd_analyze)

    gen = commands.add_parser("generate", parents=[common], help="write a generated graph")
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("--params", default="", help="k=v,... family parameters")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output", default="-")
    gen.set_defaults(handler=cmd_generate)

    transform = commands.add_parser("transform", parents=[common], help="subdivide, power or hull a graph")
    transform.add_argument("transform", choices=["subdivide", "power", "hull"])
    transform.add_argument("file")
    transform.add_argument("-o", "--output", default="-")
    transform.add_argument("--lambda", dest="lam", type=int, default=2, help="power exponent")
    transform.add_argument("--cap", type=int, default=None, help="hull size cap")
    transform.add_argument("--dump-functions", action="store_true",
                           help="include the extremal functions in the hull sidecar")
    transform.set_defaults(handler=cmd_transform)

    chk = commands.add_parser("check", parents=[common], help="run one check on graph files",
                              epilog="checks: " + ", ".join(check_names()))
    chk.add_argument("check_id")
    chk.add_argument("files", nargs="+")
    chk.set_defaults(handler=cmd_check)

    corpus = commands.add_parser("corpus", parents=[common], help="run checks over the generated corpus")
    corpus.add_argument("--families", default=None, help="comma-separated families (default: all)")
    corpus.add_argument("--seeds", type=int, default=20, help="graphs per random family")
    corpus.add_argument("--checks", default=None, help="comma-separated check ids (default: all)")
    corpus.add_argument("--include", action="append", help="extra graph file; repeatable")
    corpus.set_defaults(handler=cmd_corpus)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    if args.threads is not None:
        g.threads = args.threads
    try:
        return args.handler(args)
    except InvariantViolation as err:
        logger.error("%s", err)
        return EXIT_CHECK_FAILED
    except (AlphaMetricError, OSError) as err:
        logger.error("%s", err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
