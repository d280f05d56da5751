"""Bottom-up enumeration of connected induced subgraphs of order k.

Three enumerators grow a vertex set one neighbour at a time:

* ``enumerate_vsimple`` keeps a guarding set Y of vertices that may no
  longer be added, so every set is reached exactly once without label
  comparisons.
* ``enumerate_simple`` is the classic extension-set scheme: only vertices
  with larger id than the start vertex and outside the closed neighbourhood
  of the current set join the extension.  ``pick="front"`` gives the
  Simple-Forward variant.

All sets live in global arrays with per-vertex membership bytes; each
recursion level records end positions and truncates back to them, so a
child call leaves the arrays exactly as it found them.
"""

from __future__ import annotations

import time

from .graph import Graph, VertexSetView
from .sink import POLL_MASK, Deadline, RunReport, SubgraphSink

__all__ = [
    "EnumerationState",
    "RestoreError",
    "PruningAuditError",
    "enumerate_vsimple",
    "enumerate_simple",
    "check_request",
]


class RestoreError(AssertionError):
    """Debug shadow check found state that differs from its entry snapshot."""


class PruningAuditError(AssertionError):
    """A pruning rule fired but the skipped iterations would have produced output."""


def check_request(g: Graph, k: int) -> None:
    if not isinstance(k, int) or k < 1 or k > g.n:
        raise ValueError(f"k must be in 1..{g.n}, got {k!r}")
    if not g.is_connected():
        raise ValueError("graph must be connected; enumerate components separately")


class EnumerationState:
    """C, N and Y arrays shared by every level of one bottom-up run.

    For ``enumerate_simple`` the ``N`` view holds the extension set and
    ``closed`` the closed neighbourhood of C.
    """

    def __init__(self, n: int, k: int):
        self.C = VertexSetView(n)
        self.N = VertexSetView(n)
        self.Y = VertexSetView(n)
        self.closed = VertexSetView(n)
        self.k = k
        self.nodes_visited = 0
        self.restore_checks = 0

    def snapshot(self) -> tuple:
        return (
            self.C.snapshot(),
            self.N.snapshot(),
            self.Y.snapshot(),
            self.closed.snapshot(),
        )

    def disjoint(self) -> bool:
        c, nn, y = self.C.membership, self.N.membership, self.Y.membership
        return not any(a + b + d > 1 for a, b, d in zip(c, nn, y))

    def verify(self, snap: tuple, where: str) -> None:
        self.restore_checks += 1
        if self.snapshot() != snap:
            raise RestoreError(f"state not restored at exit of {where}")


def _finish(report: RunReport, sink: SubgraphSink, start_count: int, t0: float,
            nodes: int, deadline: Deadline | None) -> RunReport:
    report.seconds = time.perf_counter() - t0
    report.count = sink.emitted - start_count
    report.nodes_visited = nodes
    report.timed_out = bool(deadline and deadline.fired)
    return report


def enumerate_vsimple(
    g: Graph,
    k: int,
    sink: SubgraphSink,
    *,
    has_int_leaf: bool = True,
    k_component: bool = True,
    audit_pruning: bool = False,
    debug: bool = False,
    deadline: Deadline | None = None,
    state: EnumerationState | None = None,
) -> RunReport:
    """Emit every connected induced k-subgraph of ``g`` exactly once.

    ``has_int_leaf`` stops a node's loop once a child finds nothing;
    ``k_component`` stops it once fewer than k unguarded vertices remain.
    With ``audit_pruning`` the loops keep going where a rule would have
    stopped them and raise :class:`PruningAuditError` if anything is
    emitted afterwards.  ``debug`` compares C/N/Y against an entry
    snapshot at every node exit.
    """
    check_request(g, k)
    n = g.n
    adj = g.adjacency
    state = state or EnumerationState(n, k)
    C, inC = state.C.members, state.C.membership
    N, inN = state.N.members, state.N.membership
    Y, inY = state.Y.members, state.Y.membership
    emit = sink.emit
    start_count = sink.emitted
    nodes = 0
    cancelled = False
    report = RunReport("vsimple", k)
    t0 = time.perf_counter()

    def expand(lo: int) -> bool:
        # node (C, N[lo:], Y); len(C) < k
        nonlocal nodes, cancelled
        nodes += 1
        if deadline is not None and not nodes & POLL_MASK and deadline.expired():
            cancelled = True
        if debug:
            snap = state.snapshot()
            if not state.disjoint():
                raise RestoreError("C, N, Y not pairwise disjoint")
        hi = len(N)
        py = len(Y)
        leaf_next = len(C) + 1 == k
        found = False
        pruned_at = -1
        i = lo
        while i < hi and not cancelled:
            u = N[i]
            i += 1
            inN[u] = 0
            C.append(u)
            if leaf_next:
                nodes += 1
                emit(C)
                ok = True
            else:
                inC[u] = 1
                for w in adj[u]:
                    if not (inC[w] or inY[w] or inN[w]):
                        N.append(w)
                        inN[w] = 1
                ok = expand(i)
                for w in N[hi:]:
                    inN[w] = 0
                del N[hi:]
                inC[u] = 0
            C.pop()
            if ok:
                found = True
                if pruned_at >= 0:
                    raise PruningAuditError(
                        f"vsimple: output after pruning fired at C={C}")
            elif has_int_leaf and pruned_at < 0:
                if not audit_pruning:
                    break
                pruned_at = i
            Y.append(u)
            inY[u] = 1
            if k_component and n - len(Y) < k and pruned_at < 0:
                if not audit_pruning:
                    break
                pruned_at = i
        for u in Y[py:]:
            inY[u] = 0
        del Y[py:]
        for p in range(lo, i):
            inN[N[p]] = 1
        if debug:
            state.verify(snap, f"vsimple node C={C}")
        return found

    for v in range(n):
        if cancelled:
            break
        if k_component and n - len(Y) < k and not audit_pruning:
            break
        before = sink.emitted
        C.append(v)
        inC[v] = 1
        if k == 1:
            nodes += 1
            emit(C)
        else:
            for w in adj[v]:
                if not inY[w]:
                    N.append(w)
                    inN[w] = 1
            expand(0)
            for w in N:
                inN[w] = 0
            N.clear()
        C.pop()
        inC[v] = 0
        if audit_pruning and k_component and n - len(Y) < k and sink.emitted > before:
            raise PruningAuditError(f"vsimple: root output after k-component rule at v={v}")
        Y.append(v)
        inY[v] = 1
    # Y is cleared here only so a reused state starts empty
    for v in Y:
        inY[v] = 0
    Y.clear()
    state.nodes_visited = nodes
    return _finish(report, sink, start_count, t0, nodes, deadline)


def enumerate_simple(
    g: Graph,
    k: int,
    sink: SubgraphSink,
    pick: str = "back",
    *,
    has_int_leaf: bool = True,
    audit_pruning: bool = False,
    debug: bool = False,
    deadline: Deadline | None = None,
    state: EnumerationState | None = None,
) -> RunReport:
    """Extension-set enumerator; ``pick`` is ``"back"`` (Simple) or ``"front"``.

    Starting from each vertex v, the extension holds neighbours with id
    greater than v; adding w to C appends the exclusive neighbours of w
    (greater than v, outside the closed neighbourhood of C).
    """
    if pick not in ("back", "front"):
        raise ValueError(f"pick must be 'back' or 'front', got {pick!r}")
    check_request(g, k)
    n = g.n
    adj = g.adjacency
    state = state or EnumerationState(n, k)
    C, inC = state.C.members, state.C.membership
    E, inE = state.N.members, state.N.membership
    closed, inClosed = state.closed.members, state.closed.membership
    emit = sink.emit
    start_count = sink.emitted
    nodes = 0
    cancelled = False
    front = pick == "front"
    report = RunReport("simple-forward" if front else "simple", k)
    t0 = time.perf_counter()

    def add_to_c(w: int, root: int) -> int:
        # returns the closed-neighbourhood end mark for restore
        mark = len(closed)
        C.append(w)
        inC[w] = 1
        for x in adj[w]:
            if not inClosed[x]:
                closed.append(x)
                inClosed[x] = 1
                if x > root:
                    E.append(x)
                    inE[x] = 1
        return mark

    def drop_from_c(w: int, mark: int) -> None:
        for x in closed[mark:]:
            inClosed[x] = 0
        del closed[mark:]
        C.pop()
        inC[w] = 0

    def extend(lo: int, root: int) -> bool:
        # node (C, E[lo:]); len(C) < k
        nonlocal nodes, cancelled
        nodes += 1
        if deadline is not None and not nodes & POLL_MASK and deadline.expired():
            cancelled = True
        if debug:
            snap = state.snapshot()
        hi = len(E)
        leaf_next = len(C) + 1 == k
        found = False
        pruned = False
        consumed: list[int] = []
        p = lo if front else hi - 1
        while lo <= p < hi and not cancelled:
            w = E[p]
            inE[w] = 0
            if front:
                p += 1
                child_lo = p
            else:
                # the child's extension is E[lo:p] plus w's exclusive
                # neighbours, appended where w used to be
                consumed.append(w)
                del E[p:]
                child_lo = lo
                p -= 1
            if leaf_next:
                nodes += 1
                C.append(w)
                emit(C)
                C.pop()
                ok = True
            else:
                end = len(E)
                mark = add_to_c(w, root)
                ok = extend(child_lo, root)
                for x in E[end:]:
                    inE[x] = 0
                del E[end:]
                drop_from_c(w, mark)
            if ok:
                found = True
                if pruned:
                    raise PruningAuditError(f"simple: output after pruning at C={C}")
            elif has_int_leaf:
                if not audit_pruning:
                    break
                pruned = True
        if front:
            for q in range(lo, p):
                inE[E[q]] = 1
        else:
            for w in reversed(consumed):
                E.append(w)
                inE[w] = 1
        if debug:
            state.verify(snap, f"simple node C={C}")
        return found

    for v in range(n):
        if cancelled:
            break
        C.append(v)
        inC[v] = 1
        closed.append(v)
        inClosed[v] = 1
        if k == 1:
            nodes += 1
            emit(C)
        else:
            for x in adj[v]:
                closed.append(x)
                inClosed[x] = 1
                if x > v:
                    E.append(x)
                    inE[x] = 1
            extend(0, v)
            for x in E:
                inE[x] = 0
            E.clear()
        for x in closed:
            inClosed[x] = 0
        closed.clear()
        C.pop()
        inC[v] = 0
    state.nodes_visited = nodes
    return _finish(report, sink, start_count, t0, nodes, deadline)
