"""Command line entry point ``cise``.

Examples::

    cise --input g.mtx --algo vsimple -k 4 --count-only
    cise --input g.edges --algo topdown --backend bitmatrix -k 10 --output sets.txt
    cise --input g.edges -k 3 --compare simple,simple-forward,vsimple,topdown

Exit status: 0 success, 1 compared outputs differ, 2 parse or
configuration error, 3 timeout.
"""

from __future__ import annotations

import argparse
import sys

from .graph import GraphFormatError, read_graph
from .harness import ALGORITHMS, ConfigError, RunConfig, compare_runs, run
from .oracle import OracleRefused

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG, EXIT_TIMEOUT = 0, 1, 2, 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cise",
        description="Enumerate connected induced subgraphs of order k.",
    )
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--format", choices=["mtx", "edges"], default=None,
                   help="input format (default: from extension)")
    p.add_argument("--algo", choices=ALGORITHMS, default="vsimple")
    p.add_argument("--backend", choices=["list", "bitmatrix"], default="list",
                   help="graph storage for topdown")
    p.add_argument("-k", type=int, required=True, help="subgraph order")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--count-only", action="store_true",
                     help="count subgraphs without writing them")
    out.add_argument("--output", help="write subgraphs to this file")
    p.add_argument("--timeout", type=float, default=None, metavar="SECONDS")
    p.add_argument("--compare", default=None, metavar="ALGO,ALGO,...",
                   help="run several algorithms and compare their outputs; "
                        "use topdown:bitmatrix to pick a backend")
    return p


def _compare(args) -> int:
    configs = []
    for item in args.compare.split(","):
        name, _, backend = item.strip().partition(":")
        if name not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {name!r} in --compare")
        configs.append(RunConfig(args.input, args.format, name,
                                 backend or args.backend, args.k,
                                 timeout=args.timeout))
    graph = read_graph(args.input, args.format,
                       with_bitrows=any(c.backend == "bitmatrix" for c in configs))
    result = compare_runs(configs, graph=graph)
    for report in result.reports:
        print(report.line())
    print(result.verdict())
    if any(r.timed_out for r in result.reports):
        return EXIT_TIMEOUT
    return EXIT_OK if result.equal else EXIT_MISMATCH


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.compare:
            return _compare(args)
        to_stdout = not (args.count_only or args.output)
        config = RunConfig(
            input=args.input,
            format=args.format,
            algorithm=args.algo,
            backend=args.backend,
            k=args.k,
            sink_mode="count" if args.count_only else "write",
            timeout=args.timeout,
            output=args.output,
        )
        report = run(config, stream=sys.stdout if to_stdout else None)
    except (GraphFormatError, ConfigError, OracleRefused, ValueError) as exc:
        print(f"cise: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"cise: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    # the report line goes to stderr when stdout carries the subgraphs
    print(report.line(), file=sys.stderr if to_stdout else sys.stdout)
    print(report.summary(), file=sys.stderr)
    return EXIT_TIMEOUT if report.timed_out else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
