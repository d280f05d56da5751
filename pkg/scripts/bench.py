"""Time one or more algorithms on a graph, averaging over repeated runs.

    python scripts/bench.py data/bio-celegans.mtx -k 3 451 --algo vsimple topdown --repeat 3
"""

import argparse
import statistics
import sys

from cise.graph import read_graph
from cise.harness import ALGORITHMS, run_on_graph
from cise.sink import Deadline, SubgraphSink


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("input")
    p.add_argument("-k", type=int, nargs="+", required=True)
    p.add_argument("--algo", nargs="+", default=["vsimple", "topdown"], choices=ALGORITHMS)
    p.add_argument("--backend", nargs="+", default=["list"], choices=["list", "bitmatrix"])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--timeout", type=float, default=600.0)
    args = p.parse_args(argv)

    g = read_graph(args.input, with_bitrows="bitmatrix" in args.backend)
    print(f"# {args.input}: n={g.n} m={g.m}")
    for k in args.k:
        for algo in args.algo:
            for backend in args.backend if algo == "topdown" else ["list"]:
                times, count, timed_out = [], None, False
                for _ in range(args.repeat):
                    r = run_on_graph(g, k, SubgraphSink("count"), algo, backend,
                                     Deadline(args.timeout))
                    times.append(r.seconds)
                    count, timed_out = r.count, r.timed_out
                    if timed_out:
                        break
                label = algo if algo != "topdown" else f"topdown[{backend}]"
                flag = " TIMEOUT" if timed_out else ""
                print(f"k={k} {label:20s} count={count} mean={statistics.mean(times):.4f}s "
                      f"runs={len(times)}{flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
