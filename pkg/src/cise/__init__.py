"""Enumeration of connected induced subgraphs of a given order."""

from .bottomup import enumerate_simple, enumerate_vsimple
from .graph import (
    BitMatrixView,
    Graph,
    GraphFormatError,
    ListView,
    is_connected_subset,
    load_graph,
    neighbors,
    non_articulation_points,
    read_graph,
    set_neighbors,
)
from .harness import RunConfig, compare_runs, run, run_on_graph
from .oracle import brute_force_cise, count_identities
from .sink import RunReport, SubgraphSink
from .topdown import enumerate_topdown

__version__ = "0.1.0"
