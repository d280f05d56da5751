"""Consumers for enumerated subgraphs, run reports and timeout control."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

__all__ = ["SubgraphSink", "RunReport", "Deadline", "POLL_MASK", "label_sort_key"]

# enumerators poll their deadline once every 2**14 enumeration nodes
POLL_MASK = (1 << 14) - 1


def label_sort_key(label):
    """Integers sort numerically and before string labels."""
    if isinstance(label, int):
        return (0, label, "")
    return (1, 0, str(label))


class SubgraphSink:
    """Receives each order-k vertex set from an enumerator.

    ``mode`` is ``"count"``, ``"collect"`` (canonical sorted tuples kept in
    ``sets``) or ``"write"`` (one line of ascending original labels per set,
    written to ``destination``).
    """

    MODES = ("count", "collect", "write")

    def __init__(
        self,
        mode: str = "count",
        destination: IO[str] | None = None,
        labels: Sequence | None = None,
    ):
        if mode not in self.MODES:
            raise ValueError(f"unknown sink mode {mode!r}")
        if mode == "write" and destination is None:
            raise ValueError("write mode needs a destination stream")
        self.mode = mode
        self.destination = destination
        self.labels = labels
        self.emitted = 0
        self.sets: list[tuple[int, ...]] = []
        # the hot path binds self.emit once; pick the implementation here
        if mode == "count":
            self.emit = self._emit_count
        elif mode == "collect":
            self.emit = self._emit_collect
        else:
            self.emit = self._emit_write

    def emit(self, vertices: Iterable[int]) -> None:  # replaced per instance
        raise NotImplementedError

    def _emit_count(self, vertices) -> None:
        self.emitted += 1

    def _emit_collect(self, vertices) -> None:
        self.emitted += 1
        self.sets.append(tuple(sorted(vertices)))

    def _emit_write(self, vertices) -> None:
        self.emitted += 1
        labels = self.labels
        if labels is None:
            words = [str(v) for v in sorted(vertices)]
        else:
            words = [str(x) for x in sorted((labels[v] for v in vertices), key=label_sort_key)]
        self.destination.write(" ".join(words) + "\n")

    def relabeled(self, labels: Sequence) -> "SubgraphSink":
        """A sink sharing this one's destination but mapping ids through ``labels``.

        Used by the harness when a component's ids differ from the file's.
        """
        return _MappedSink(self, labels)

    def canonical(self) -> list[tuple[int, ...]]:
        return sorted(self.sets)


class _MappedSink(SubgraphSink):
    def __init__(self, parent: SubgraphSink, mapping: Sequence[int]):
        self.parent = parent
        self.mapping = mapping
        self.mode = parent.mode
        self.emitted = 0
        if parent.mode == "count":
            self.emit = self._emit_count
        else:
            self.emit = self._emit_forward

    def _emit_count(self, vertices) -> None:
        self.emitted += 1
        self.parent.emitted += 1

    def _emit_forward(self, vertices) -> None:
        self.emitted += 1
        mapping = self.mapping
        self.parent.emit([mapping[v] for v in vertices])


class Deadline:
    """Wall-clock budget checked by enumerators every ``POLL_MASK + 1`` nodes."""

    def __init__(self, seconds: float | None):
        if seconds is not None and seconds <= 0:
            raise ValueError("timeout budget must be positive")
        self.seconds = seconds
        self.expires = None if seconds is None else time.monotonic() + seconds
        self.fired = False

    def expired(self) -> bool:
        if self.expires is not None and time.monotonic() >= self.expires:
            self.fired = True
        return self.fired


@dataclass
class RunReport:
    algorithm: str
    k: int
    count: int = 0
    seconds: float = 0.0
    nodes_visited: int = 0
    timed_out: bool = False
    backend: str = "list"
    max_added: int = 0  # topdown only: largest per-node growth of the deletable set
    sets: list | None = field(default=None, repr=False)  # collect mode only

    def line(self) -> str:
        """Single machine-readable report line."""
        return (
            f"algo={self.algorithm} k={self.k} count={self.count} "
            f"nodes={self.nodes_visited} seconds={self.seconds:.6f} "
            f"timeout={str(self.timed_out).lower()}"
        )

    def summary(self) -> str:
        partial = " (partial, timed out)" if self.timed_out else ""
        return (
            f"{self.algorithm} [{self.backend}] k={self.k}: "
            f"{self.count} subgraphs{partial} in {self.seconds:.3f}s, "
            f"{self.nodes_visited} enumeration nodes"
        )

    def merge(self, other: "RunReport") -> None:
        self.count += other.count
        self.seconds += other.seconds
        self.nodes_visited += other.nodes_visited
        self.timed_out = self.timed_out or other.timed_out
        self.max_added = max(self.max_added, other.max_added)
