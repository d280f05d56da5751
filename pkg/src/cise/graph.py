"""Undirected graphs, deletion-aware views and articulation points.

Vertices are dense integer ids ``0..n-1``; the label each id had in the
input file is kept in ``Graph.labels``.  Two mutable views are provided:

* :class:`ListView` -- adjacency lists filtered through an ``alive`` mask,
  deletion and restore are O(1).
* :class:`BitMatrixView` -- one Python ``int`` per row used as a bit-vector;
  deleting a vertex clears its column bit in each neighbour's row, O(deg).
"""

from __future__ import annotations

import io
from collections import deque
from typing import BinaryIO, Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "ListView",
    "BitMatrixView",
    "VertexSetView",
    "make_view",
    "load_graph",
    "read_graph",
    "neighbors",
    "set_neighbors",
    "is_connected_subset",
    "non_articulation_points",
    "iter_bits",
]


class GraphFormatError(ValueError):
    """Malformed graph input.  ``lineno`` is 1-based, or None."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def iter_bits(x: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "m", "adjacency", "bitrows", "labels", "max_degree")

    def __init__(
        self,
        adjacency: list[list[int]],
        labels: Sequence | None = None,
        with_bitrows: bool = False,
    ):
        n = len(adjacency)
        self.n = n
        self.adjacency = adjacency
        self.labels = list(range(n)) if labels is None else list(labels)
        if len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")
        degrees = [len(a) for a in adjacency]
        self.m = sum(degrees) // 2
        self.max_degree = max(degrees, default=0)
        self.bitrows = self._build_bitrows() if with_bitrows else None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence | None = None,
        with_bitrows: bool = False,
    ) -> "Graph":
        """Build from 0-based edge pairs; self-loops and repeats are dropped."""
        adjacency: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        return cls(adjacency, labels, with_bitrows)

    def _build_bitrows(self) -> list[int]:
        rows = []
        for nbrs in self.adjacency:
            row = 0
            for w in nbrs:
                row |= 1 << w
            rows.append(row)
        return rows

    def with_bitrows(self) -> "Graph":
        """Return this graph with the bit-matrix rows materialized."""
        if self.bitrows is not None:
            return self
        return Graph(self.adjacency, self.labels, with_bitrows=True)

    def neighbors(self, v: int) -> list[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def connected_components(self) -> list[list[int]]:
        """Vertex lists of the components, each in ascending id order."""
        comp = [-1] * self.n
        out = []
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            members = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for w in self.adjacency[v]:
                    if comp[w] < 0:
                        comp[w] = comp[s]
                        members.append(w)
                        queue.append(w)
            members.sort()
            out.append(members)
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and is_connected_subset(self, range(self.n))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on ``vertices``; ids follow the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        adjacency = [
            [index[w] for w in self.adjacency[v] if w in index] for v in vertices
        ]
        labels = [self.labels[v] for v in vertices]
        return Graph(adjacency, labels, with_bitrows=self.bitrows is not None)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, max_degree={self.max_degree})"


# ---------------------------------------------------------------------------
# loading


def _label(token: str):
    try:
        return int(token)
    except ValueError:
        return token


def _lines(source: BinaryIO | bytes | str) -> Iterator[tuple[int, str]]:
    if isinstance(source, bytes):
        source = io.BytesIO(source)
    elif isinstance(source, str):
        source = io.BytesIO(source.encode())
    for lineno, raw in enumerate(source, 1):
        try:
            line = raw.decode("utf-8") if isinstance(raw, bytes) else raw
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"invalid UTF-8: {exc}", lineno) from None
        yield lineno, line.rstrip("\r\n")


def load_graph(
    source: BinaryIO | bytes | str,
    format: str = "edges",
    with_bitrows: bool = False,
) -> Graph:
    """Parse a graph from a byte stream.

    ``format`` is ``"mtx"`` (MatrixMarket coordinate) or ``"edges"``
    (whitespace separated ``u v [w]`` lines, ``#``/``%`` comments).
    Vertex ids are assigned in order of first appearance; for MatrixMarket,
    indices declared by the size line but never used in an entry are
    appended afterwards in ascending order.
    """
    if format in ("mtx", "matrix-market", "matrixmarket"):
        return _load_mtx(source, with_bitrows)
    if format in ("edges", "edge-list", "edgelist"):
        return _load_edges(source, with_bitrows)
    raise ValueError(f"unknown graph format {format!r}")


def _finish(ids: dict, pairs: list[tuple[int, int]], with_bitrows: bool) -> Graph:
    if not ids:
        raise GraphFormatError("graph has no vertices")
    return Graph.from_edges(len(ids), pairs, labels=list(ids), with_bitrows=with_bitrows)


def _load_edges(source, with_bitrows: bool) -> Graph:
    ids: dict = {}
    pairs = []
    for lineno, line in _lines(source):
        text = line.strip()
        if not text or text[0] in "#%":
            continue
        tokens = text.split()
        if len(tokens) not in (2, 3):
            raise GraphFormatError(f"expected 'u v [w]', got {text!r}", lineno)
        if len(tokens) == 3:
            _weight(tokens[2], lineno)
        u = ids.setdefault(_label(tokens[0]), len(ids))
        v = ids.setdefault(_label(tokens[1]), len(ids))
        pairs.append((u, v))
    return _finish(ids, pairs, with_bitrows)


def _weight(token: str, lineno: int) -> None:
    try:
        float(token)
    except ValueError:
        raise GraphFormatError(f"bad weight {token!r}", lineno) from None


def _load_mtx(source, with_bitrows: bool) -> Graph:
    lines = _lines(source)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input", 1) from None
    if not header.startswith("%%MatrixMarket"):
        raise GraphFormatError("missing %%MatrixMarket header", lineno)
    fields = header.lower().split()
    if len(fields) > 2 and fields[2] != "coordinate":
        raise GraphFormatError("only coordinate MatrixMarket is supported", lineno)

    rows = cols = None
    ids: dict = {}
    pairs = []
    for lineno, line in lines:
        text = line.strip()
        if not text or text.startswith("%"):
            continue
        tokens = text.split()
        if rows is None:
            if len(tokens) != 3:
                raise GraphFormatError(f"bad size line {text!r}", lineno)
            try:
                rows, cols, _ = (int(t) for t in tokens)
            except ValueError:
                raise GraphFormatError(f"bad size line {text!r}", lineno) from None
            continue
        if len(tokens) < 2:
            raise GraphFormatError(f"expected 'i j [w]', got {text!r}", lineno)
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer index in {text!r}", lineno) from None
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise GraphFormatError(f"index out of range in {text!r}", lineno)
        u = ids.setdefault(i, len(ids))
        v = ids.setdefault(j, len(ids))
        pairs.append((u, v))
    if rows is None:
        raise GraphFormatError("missing size line")
    for i in range(1, max(rows, cols) + 1):
        ids.setdefault(i, len(ids))
    return _finish(ids, pairs, with_bitrows)


def read_graph(path, format: str | None = None, with_bitrows: bool = False) -> Graph:
    """Load a graph from ``path``; the format defaults from the extension."""
    path = str(path)
    if format is None:
        format = "mtx" if path.lower().endswith(".mtx") else "edges"
    with open(path, "rb") as fh:
        return load_graph(fh, format, with_bitrows)


# ---------------------------------------------------------------------------
# neighbourhoods and connectivity on the immutable graph


def neighbors(g: Graph, v: int) -> list[int]:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return g.adjacency[v]


def set_neighbors(g: Graph, X: Iterable[int]) -> set[int]:
    """N(X): vertices outside X adjacent to some member of X."""
    members = set(X)
    for v in members:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    out = set()
    for v in members:
        out.update(g.adjacency[v])
    return out - members


def is_connected_subset(g: Graph, S: Iterable[int]) -> bool:
    """True iff the subgraph induced by ``S`` is connected."""
    members = set(S)
    if not members:
        raise ValueError("connectivity of the empty set is undefined")
    start = next(iter(members))
    seen = {start}
    stack = [start]
    adj = g.adjacency
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in members and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


# ---------------------------------------------------------------------------
# vertex sets with pointer restore


class VertexSetView:
    """Ordered vertex array plus membership bytes and saved end marks.

    ``mark()`` records the current end; ``restore()`` drops every vertex
    appended since the most recent mark.
    """

    __slots__ = ("members", "membership", "saved_pointers")

    def __init__(self, n: int):
        self.members: list[int] = []
        self.membership = bytearray(n)
        self.saved_pointers: list[int] = []

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return bool(self.membership[v])

    def __iter__(self):
        return iter(self.members)

    def add(self, v: int) -> None:
        if self.membership[v]:
            raise ValueError(f"vertex {v} already present")
        self.members.append(v)
        self.membership[v] = 1

    def mark(self) -> int:
        self.saved_pointers.append(len(self.members))
        return len(self.members)

    def restore(self) -> None:
        end = self.saved_pointers.pop()
        self.truncate(end)

    def truncate(self, end: int) -> None:
        members, membership = self.members, self.membership
        for v in members[end:]:
            membership[v] = 0
        del members[end:]

    def snapshot(self) -> tuple:
        return tuple(self.members), bytes(self.membership)


# ---------------------------------------------------------------------------
# mutable views


class _View:
    base: Graph
    alive: bytearray
    alive_count: int
    deletion_stack: list

    def __len__(self) -> int:
        return self.alive_count

    def alive_vertices(self) -> list[int]:
        alive = self.alive
        return [v for v in range(self.base.n) if alive[v]]

    def delete(self, v: int) -> None:
        raise NotImplementedError

    def restore_last(self) -> int:
        raise NotImplementedError

    def neighbors(self, v: int) -> list[int]:
        raise NotImplementedError

    def tarjan(self) -> tuple[list[int], bytearray]:
        raise NotImplementedError

    def non_articulation_points(self) -> list[int]:
        """Alive vertices whose removal keeps the alive subgraph connected.

        One depth-first pass; the result is in ascending id order.  The
        alive subgraph must be connected and nonempty.
        """
        order, cut = self.tarjan()
        if __debug__ and len(order) != self.alive_count:
            raise AssertionError("non_articulation_points on a disconnected view")
        return sorted(v for v in order if not cut[v])

    def is_connected_subset(self, S: Sequence[int]) -> bool:
        raise NotImplementedError

    def snapshot(self) -> tuple:
        return bytes(self.alive), self.alive_count, tuple(self.deletion_stack)


class ListView(_View):
    """Adjacency-list backend; deleted vertices are masked at read time."""

    backend = "list"

    def __init__(self, base: Graph):
        self.base = base
        self.alive = bytearray(b"\x01") * base.n
        self.alive_count = base.n
        self.deletion_stack: list[int] = []

    def delete(self, v: int) -> None:
        if not self.alive[v]:
            raise ValueError(f"vertex {v} is already deleted")
        self.alive[v] = 0
        self.alive_count -= 1
        self.deletion_stack.append(v)

    def restore_last(self) -> int:
        if not self.deletion_stack:
            raise IndexError("restore_last with empty deletion stack")
        v = self.deletion_stack.pop()
        self.alive[v] = 1
        self.alive_count += 1
        return v

    def neighbors(self, v: int) -> list[int]:
        alive = self.alive
        return [w for w in self.base.adjacency[v] if alive[w]]

    def tarjan(self) -> tuple[list[int], bytearray]:
        """Hopcroft-Tarjan low-link pass over the alive vertices.

        Returns the vertices reached in discovery order and a byte mask of
        articulation points.  Only the component of the lowest alive id is
        explored.
        """
        adj = self.base.adjacency
        alive = self.alive
        n = self.base.n
        cut = bytearray(n)
        root = alive.find(1)
        if root < 0:
            return [], cut
        disc = [0] * n
        low = [0] * n
        disc[root] = low[root] = 1
        order = [root]
        parents = [root]
        iters = [iter(adj[root])]
        root_children = 0
        t = 1
        while iters:
            v = parents[-1]
            for w in iters[-1]:
                if not alive[w]:
                    continue
                dw = disc[w]
                if not dw:
                    t += 1
                    disc[w] = low[w] = t
                    order.append(w)
                    parents.append(w)
                    iters.append(iter(adj[w]))
                    break
                if dw < low[v]:
                    low[v] = dw
            else:
                iters.pop()
                parents.pop()
                if not parents:
                    break
                p = parents[-1]
                lv = low[v]
                if lv < low[p]:
                    low[p] = lv
                if p == root:
                    root_children += 1
                elif lv >= disc[p]:
                    cut[p] = 1
        if root_children > 1:
            cut[root] = 1
        return order, cut

    def is_connected_subset(self, S: Sequence[int]) -> bool:
        return is_connected_subset(self.base, S)


class BitMatrixView(_View):
    """Bit-vector adjacency matrix backend.

    ``rows[v]`` holds exactly the alive neighbours of an alive ``v``;
    a deleted vertex's row is zeroed and its bits cleared from every
    neighbour, and both are put back on restore.
    """

    backend = "bitmatrix"

    def __init__(self, base: Graph):
        if base.bitrows is None:
            base = base.with_bitrows()
        self.base = base
        self.rows = list(base.bitrows)
        self.alive = bytearray(b"\x01") * base.n
        self.alive_count = base.n
        self.deletion_stack: list[tuple[int, int]] = []

    def delete(self, v: int) -> None:
        if not self.alive[v]:
            raise ValueError(f"vertex {v} is already deleted")
        rows = self.rows
        row = rows[v]
        keep = ~(1 << v)
        for w in iter_bits(row):
            rows[w] &= keep
        rows[v] = 0
        self.alive[v] = 0
        self.alive_count -= 1
        self.deletion_stack.append((v, row))

    def restore_last(self) -> int:
        if not self.deletion_stack:
            raise IndexError("restore_last with empty deletion stack")
        v, row = self.deletion_stack.pop()
        rows = self.rows
        bit = 1 << v
        for w in iter_bits(row):
            rows[w] |= bit
        rows[v] = row
        self.alive[v] = 1
        self.alive_count += 1
        return v

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def tarjan(self) -> tuple[list[int], bytearray]:
        rows = self.rows
        n = self.base.n
        cut = bytearray(n)
        root = self.alive.find(1)
        if root < 0:
            return [], cut
        disc = [0] * n
        low = [0] * n
        disc[root] = low[root] = 1
        order = [root]
        parents = [root]
        iters = [iter_bits(rows[root])]
        root_children = 0
        t = 1
        while iters:
            v = parents[-1]
            for w in iters[-1]:
                dw = disc[w]
                if not dw:
                    t += 1
                    disc[w] = low[w] = t
                    order.append(w)
                    parents.append(w)
                    iters.append(iter_bits(rows[w]))
                    break
                if dw < low[v]:
                    low[v] = dw
            else:
                iters.pop()
                parents.pop()
                if not parents:
                    break
                p = parents[-1]
                lv = low[v]
                if lv < low[p]:
                    low[p] = lv
                if p == root:
                    root_children += 1
                elif lv >= disc[p]:
                    cut[p] = 1
        if root_children > 1:
            cut[root] = 1
        return order, cut

    def is_connected_subset(self, S: Sequence[int]) -> bool:
        """Frontier BFS over the original rows restricted to ``S``."""
        if not S:
            raise ValueError("connectivity of the empty set is undefined")
        rows = self.base.bitrows
        target = 0
        for v in S:
            target |= 1 << v
        reached = frontier = target & -target
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= rows[v]
            frontier = grow & target & ~reached
            reached |= frontier
        return reached == target

    def snapshot(self) -> tuple:
        return super().snapshot() + (tuple(self.rows),)


BACKENDS = {"list": ListView, "bitmatrix": BitMatrixView, "bit-matrix": BitMatrixView}


def make_view(g: Graph, backend: str = "list") -> _View:
    try:
        cls = BACKENDS[backend]
    except KeyError:
        raise ValueError(f"unknown backend {backend!r}") from None
    return cls(g)


def non_articulation_points(view: _View) -> list[int]:
    """Deletable vertices of the alive subgraph of ``view`` (ascending ids)."""
    return view.non_articulation_points()
