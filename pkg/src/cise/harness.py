"""Run configurations, component splitting, timing and cross-algorithm comparison."""

from __future__ import annotations

import sys
import threading
import time
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import IO, Callable

from .bottomup import enumerate_simple, enumerate_vsimple
from .graph import Graph, read_graph
from .oracle import DEFAULT_MAX_N, brute_force_cise
from .sink import Deadline, RunReport, SubgraphSink
from .topdown import enumerate_topdown

__all__ = [
    "ALGORITHMS",
    "RunConfig",
    "Comparison",
    "ConfigError",
    "run",
    "run_on_graph",
    "compare_runs",
    "timeout_guard",
]

ALGORITHMS = ("simple", "simple-forward", "vsimple", "topdown", "oracle")
BACKENDS = ("list", "bitmatrix")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    input: str | Path | None = None
    format: str | None = None
    algorithm: str = "vsimple"
    backend: str = "list"
    k: int = 3
    sink_mode: str = "count"
    timeout: float | None = None
    output: str | Path | None = None
    options: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {self.algorithm!r}")
        if self.backend == "bit-matrix":
            self.backend = "bitmatrix"
        if self.backend not in BACKENDS:
            raise ConfigError(f"unknown backend {self.backend!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise ConfigError(f"k must be a positive integer, got {self.k!r}")
        if self.sink_mode not in SubgraphSink.MODES:
            raise ConfigError(f"unknown sink mode {self.sink_mode!r}")
        if self.timeout is not None and self.timeout <= 0:
            raise ConfigError("timeout must be positive")


def timeout_guard(budget: float | None) -> Deadline:
    """Deadline the enumerators poll every 2**14 enumeration nodes.

    On expiry they stop expanding, unwind through their normal restore
    code and report ``timed_out=True`` with a partial count.
    """
    return Deadline(budget)


def _oracle(g: Graph, k: int, sink: SubgraphSink, deadline=None, **_) -> RunReport:
    t0 = time.perf_counter()
    result = brute_force_cise(g, k, max_n=DEFAULT_MAX_N)
    for s in result.sets:
        sink.emit(s)
    return RunReport("oracle", k, result.count, time.perf_counter() - t0, 0)


def _dispatch(algorithm: str, backend: str) -> Callable[..., RunReport]:
    if algorithm == "vsimple":
        return enumerate_vsimple
    if algorithm == "simple":
        return lambda g, k, sink, **kw: enumerate_simple(g, k, sink, "back", **kw)
    if algorithm == "simple-forward":
        return lambda g, k, sink, **kw: enumerate_simple(g, k, sink, "front", **kw)
    if algorithm == "topdown":
        return lambda g, k, sink, **kw: enumerate_topdown(g, k, sink, backend, **kw)
    if algorithm == "oracle":
        return _oracle
    raise ConfigError(f"unknown algorithm {algorithm!r}")


def _recursion_depth(algorithm: str, n: int, k: int) -> int:
    return n - k if algorithm == "topdown" else k


def _call_deep(depth: int, fn: Callable[[], RunReport]) -> RunReport:
    """Run ``fn`` with room for ``depth`` nested enumeration calls."""
    if depth < 500:
        return fn()
    old_limit = sys.getrecursionlimit()
    old_stack = threading.stack_size()
    box: dict = {}

    def target():
        try:
            box["report"] = fn()
        except BaseException as exc:  # re-raised in the caller's thread
            box["error"] = exc

    sys.setrecursionlimit(max(old_limit, 2 * depth + 200))
    threading.stack_size(min(1 << 30, max(64 << 20, depth * 16 << 10)))
    try:
        worker = threading.Thread(target=target)
        worker.start()
        worker.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    if "error" in box:
        raise box["error"]
    return box["report"]


def run_on_graph(
    g: Graph,
    k: int,
    sink: SubgraphSink,
    algorithm: str = "vsimple",
    backend: str = "list",
    deadline: Deadline | None = None,
    **options,
) -> RunReport:
    """Enumerate CIS(g, k) over every component of ``g`` with at least k vertices."""
    if k < 1:
        raise ConfigError(f"k must be a positive integer, got {k}")
    enumerate_ = _dispatch(algorithm, backend)
    total = RunReport(algorithm, k, backend=backend if algorithm == "topdown" else "list")
    components = [g] if g.is_connected() else None
    if components is None:
        components = []
        for members in g.connected_components():
            if len(members) >= k:
                components.append((members, g.induced(members)))
    for item in components:
        if isinstance(item, tuple):
            members, sub = item
            target = sink.relabeled(members)
        else:
            sub, target = item, sink
        if sub.n < k:
            continue
        depth = _recursion_depth(algorithm, sub.n, k)
        report = _call_deep(
            depth,
            lambda: enumerate_(sub, k, target, deadline=deadline, **options),
        )
        total.merge(report)
        if report.timed_out:
            break
    return total


def run(config: RunConfig, graph: Graph | None = None,
        stream: IO[str] | None = None) -> RunReport:
    """Load ``config.input`` (unless ``graph`` is given) and run one enumeration.

    Write mode sends sets to ``stream``, or to ``config.output``.  The
    reported time covers enumeration and writing, not loading.
    """
    config.validate()
    if graph is None:
        if config.input is None:
            raise ConfigError("no input graph")
        graph = read_graph(config.input, config.format,
                           with_bitrows=config.backend == "bitmatrix")
    deadline = timeout_guard(config.timeout)
    close = None
    if config.sink_mode == "write" and stream is None:
        if config.output is None:
            raise ConfigError("write mode needs an output path or stream")
        stream = close = open(config.output, "w", encoding="utf-8", newline="\n")
    try:
        sink = SubgraphSink(config.sink_mode, stream, graph.labels)
        t0 = time.monotonic()
        report = run_on_graph(graph, config.k, sink, config.algorithm,
                              config.backend, deadline, **config.options)
        if stream is not None:
            stream.flush()
        report.seconds = time.monotonic() - t0
    finally:
        if close is not None:
            close.close()
    report.count = sink.emitted
    report.sets = sink.sets if config.sink_mode == "collect" else None
    return report


@dataclass
class Comparison:
    equal: bool
    reports: list[RunReport]
    canonical: dict[str, list[tuple]]

    def verdict(self) -> str:
        counts = ", ".join(
            f"{name}={r.count}" for name, r in zip(self.canonical, self.reports))
        return f"equal={str(self.equal).lower()} ({counts})"


def compare_runs(configs: list[RunConfig], graph: Graph | None = None) -> Comparison:
    """Run every config in collect mode and compare canonical outputs.

    Configs must share the input and k.  Sets are sorted within and
    across, so emission order does not matter.
    """
    if not configs:
        raise ConfigError("nothing to compare")
    first = configs[0]
    for c in configs[1:]:
        if c.input != first.input or c.k != first.k:
            raise ConfigError("compared runs must share input and k")
    if graph is None:
        need_bits = any(c.backend in ("bitmatrix", "bit-matrix") for c in configs)
        graph = read_graph(first.input, first.format, with_bitrows=need_bits)
    reports = []
    canonical: dict[str, list[tuple]] = {}
    names = [c.algorithm if c.algorithm != "topdown" else f"topdown[{c.backend}]"
             for c in configs]
    if len(set(names)) != len(names):
        raise ConfigError("duplicate entries in comparison")
    for name, c in zip(names, configs):
        report = run(replace(c, sink_mode="collect"), graph=graph)
        canonical[name] = sorted(report.sets)
        reports.append(report)
    outputs = list(canonical.values())
    equal = all(o == outputs[0] for o in outputs[1:])
    return Comparison(equal, reports, canonical)
