"""Top-down enumeration: shrink the whole graph by deleting deletable vertices.

A vertex is deletable when it is not an articulation point of the current
subgraph, so every intermediate subgraph stays connected.  Each node tries
its deletable vertices in turn; after a vertex has been tried it joins the
guarding set Y and must stay in every later subgraph of that node.  When
|Y| reaches k the only remaining candidate is Y itself (look-ahead rule).

The deletable set N lives in one global slot array.  A child's N differs
from its parent's by a list of removed slots and at most one appended
vertex; those deltas are pushed on a log and popped on return.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bottomup import RestoreError, check_request
from .graph import Graph, VertexSetView, make_view
from .sink import POLL_MASK, Deadline, RunReport, SubgraphSink

__all__ = [
    "DeltaLevel",
    "TopDownState",
    "DeletableSetError",
    "enumerate_topdown",
    "update_deletable_incremental",
    "restore_level",
]


class DeletableSetError(RuntimeError):
    """More than one articulation point became deletable after one deletion."""


@dataclass
class DeltaLevel:
    """Changes to N caused by one deletion.

    ``removed`` holds slot indices of vertices that stopped being
    deletable; ``added`` holds ``(vertex, previous slot)`` for the vertex
    that became deletable, if any.
    """

    removed: list[int] = field(default_factory=list)
    added: list[tuple[int, int]] = field(default_factory=list)


class TopDownState:
    """View of the current subgraph C plus the N slot array, Y and the delta log."""

    def __init__(self, g: Graph, k: int, backend: str = "list"):
        n = g.n
        self.view = make_view(g, backend)
        self.k = k
        self.nbuf: list[int] = []  # slot -> vertex
        self.nlive = bytearray()  # slot -> 1 while the vertex is in N
        self.slot_of = [-1] * n  # vertex -> its newest slot
        self.in_n = bytearray(n)
        self.Y = VertexSetView(n)
        self.delta_log: list[DeltaLevel] = []
        self.nodes_visited = 0
        self.max_added = 0
        self.restore_checks = 0

    def push_slot(self, v: int) -> int:
        prev = self.slot_of[v]
        self.slot_of[v] = len(self.nbuf)
        self.nbuf.append(v)
        self.nlive.append(1)
        self.in_n[v] = 1
        return prev

    def deletable(self) -> list[int]:
        """Current N in iteration order."""
        return [v for v, live in zip(self.nbuf, self.nlive) if live]

    def snapshot(self) -> tuple:
        return (
            self.view.snapshot(),
            tuple(self.nbuf),
            bytes(self.nlive),
            tuple(self.slot_of),
            bytes(self.in_n),
            self.Y.snapshot(),
            len(self.delta_log),
        )


def update_deletable_incremental(state: TopDownState, u: int) -> DeltaLevel:
    """Bring N in line with the view after ``u`` has been deleted.

    ``u`` must already be out of N (its slot dead).  One articulation-point
    pass over the view gives the new deletable set; slots whose vertex is
    now a cut vertex are killed, and a vertex that became deletable (never
    more than one) gets a fresh slot at the end.
    """
    order, cut = state.view.tarjan()
    nbuf, nlive, in_n = state.nbuf, state.nlive, state.in_n
    inY = state.Y.membership
    level = DeltaLevel()
    removed = level.removed
    for s, live in enumerate(nlive):
        if live and cut[nbuf[s]]:
            nlive[s] = 0
            in_n[nbuf[s]] = 0
            removed.append(s)
    fresh = [w for w in order if not (cut[w] or in_n[w] or inY[w])]
    if len(fresh) > 1:
        raise DeletableSetError(
            f"deleting {u} made {len(fresh)} vertices deletable: {fresh}")
    for w in fresh:
        level.added.append((w, state.push_slot(w)))
    if len(fresh) > state.max_added:
        state.max_added = len(fresh)
    state.delta_log.append(level)
    return level


def restore_level(state: TopDownState) -> DeltaLevel:
    """Undo the most recent :func:`update_deletable_incremental`."""
    if not state.delta_log:
        raise IndexError("restore_level with empty delta log")
    level = state.delta_log.pop()
    nbuf, nlive, in_n = state.nbuf, state.nlive, state.in_n
    for w, prev in reversed(level.added):
        nbuf.pop()
        nlive.pop()
        in_n[w] = 0
        state.slot_of[w] = prev
    for s in level.removed:
        nlive[s] = 1
        in_n[nbuf[s]] = 1
    return level


def enumerate_topdown(
    g: Graph,
    k: int,
    sink: SubgraphSink,
    backend: str = "list",
    *,
    look_ahead: bool = True,
    debug: bool = False,
    deadline: Deadline | None = None,
    state: TopDownState | None = None,
) -> RunReport:
    """Emit every connected induced k-subgraph of ``g`` exactly once.

    ``backend`` selects the graph view (``"list"`` or ``"bitmatrix"``).
    ``debug`` checks view, N and Y against entry snapshots at every node
    exit and re-verifies each emitted set.
    """
    check_request(g, k)
    state = state or TopDownState(g, k, backend)
    view = state.view
    nbuf, nlive, in_n = state.nbuf, state.nlive, state.in_n
    Y, inY = state.Y.members, state.Y.membership
    alive = view.alive
    emit = sink.emit
    count_only = sink.mode == "count"
    start_count = sink.emitted
    report = RunReport("topdown", k, backend=view.backend)
    nodes = 0
    cancelled = False
    t0 = time.perf_counter()

    def emit_checked(vertices: list[int]) -> None:
        if len(vertices) != k or not view.is_connected_subset(vertices):
            raise AssertionError(f"topdown emitted a bad set {vertices}")
        emit(vertices)

    out = emit_checked if debug else emit

    def shrink(size: int) -> None:
        # node: alive subgraph C with |C| = size > k, N = live slots
        nonlocal nodes, cancelled
        nodes += 1
        if deadline is not None and not nodes & POLL_MASK and deadline.expired():
            cancelled = True
        if debug:
            snap = state.snapshot()
        py = len(Y)
        consumed = []
        leaf_next = size - 1 == k
        s = 0
        while s < len(nbuf) and not cancelled:
            if not nlive[s]:
                s += 1
                continue
            u = nbuf[s]
            nlive[s] = 0
            in_n[u] = 0
            consumed.append(s)
            s += 1
            if leaf_next:
                nodes += 1
                if count_only:
                    emit(None)
                else:
                    out([v for v in range(len(alive)) if alive[v] and v != u])
            else:
                view.delete(u)
                update_deletable_incremental(state, u)
                shrink(size - 1)
                restore_level(state)
                view.restore_last()
            Y.append(u)
            inY[u] = 1
            if look_ahead and len(Y) == k:
                if view.is_connected_subset(Y):
                    out(list(Y))
                break
        for v in Y[py:]:
            inY[v] = 0
        del Y[py:]
        for c in consumed:
            nlive[c] = 1
            in_n[nbuf[c]] = 1
        if debug:
            state.restore_checks += 1
            if state.snapshot() != snap:
                raise RestoreError(f"topdown state not restored at size {size}")

    n = g.n
    if n == k:
        nodes = 1
        out(list(range(n)))
    else:
        for v in view.non_articulation_points():
            state.push_slot(v)
        shrink(n)
        for v in state.nbuf:
            in_n[v] = 0
            state.slot_of[v] = -1
        del nbuf[:]
        del nlive[:]

    state.nodes_visited = nodes
    report.seconds = time.perf_counter() - t0
    report.count = sink.emitted - start_count
    report.nodes_visited = nodes
    report.timed_out = bool(deadline and deadline.fired)
    report.max_added = state.max_added
    return report
