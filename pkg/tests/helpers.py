"""Graph builders shared by the test modules."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from cise.graph import Graph

# V={0,1,2,3}, E={01,02,12,13,23}
DIAMOND_EDGES = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]

# nine vertices labelled 1..9 with twelve edges, N(2)={1,4,5},
# N({2,4,5,7})={1,3,8,9} and {2,4,5,7} inducing a connected subgraph
NINE_EDGES = [
    (2, 1), (2, 4), (2, 5), (4, 7), (5, 7), (4, 3),
    (5, 8), (7, 9), (1, 6), (3, 6), (6, 9), (8, 9),
]


def diamond_graph(with_bitrows: bool = False) -> Graph:
    return Graph.from_edges(4, DIAMOND_EDGES, with_bitrows=with_bitrows)


def nine_vertex_text() -> str:
    return "".join(f"{u} {v}\n" for u, v in NINE_EDGES)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def random_connected_graph(rng: random.Random, n: int, p: float,
                           with_bitrows: bool = False) -> Graph:
    """G(n, p) conditioned on connectivity by rejection."""
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        edges = [e for e in pairs if rng.random() < p]
        g = Graph.from_edges(n, edges, with_bitrows=with_bitrows)
        if g.is_connected():
            return g


def random_suite(count: int, seed: int, n_range=(2, 12), probs=(0.2, 0.5, 0.8),
                 with_bitrows: bool = False) -> list[tuple[Graph, float]]:
    rng = random.Random(seed)
    suite = []
    for i in range(count):
        p = probs[i % len(probs)]
        n = rng.randint(*n_range)
        suite.append((random_connected_graph(rng, n, p, with_bitrows), p))
    return suite


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 10) -> Graph:
    """Random spanning tree plus arbitrary extra edges, then a relabelling."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, i - 1)), i) for i in range(1, n)}
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
        edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


@st.composite
def graphs_with_k(draw, min_n: int = 1, max_n: int = 10):
    g = draw(connected_graphs(min_n, max_n))
    k = draw(st.integers(1, g.n))
    return g, k
