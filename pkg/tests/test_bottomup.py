import io
from collections import Counter

import pytest
from hypothesis import given, settings

from cise.bottomup import (
    EnumerationState,
    PruningAuditError,
    enumerate_simple,
    enumerate_vsimple,
)
from cise.graph import Graph
from cise.oracle import brute_force_cise
from cise.sink import Deadline, SubgraphSink

from helpers import complete_graph, diamond_graph, graphs_with_k, path_graph, random_suite

ENUMERATORS = {
    "vsimple": lambda g, k, s, **kw: enumerate_vsimple(g, k, s, **kw),
    "simple": lambda g, k, s, **kw: enumerate_simple(g, k, s, "back", **kw),
    "simple-forward": lambda g, k, s, **kw: enumerate_simple(g, k, s, "front", **kw),
}


def collect(name, g, k, **kw):
    sink = SubgraphSink("collect")
    report = ENUMERATORS[name](g, k, sink, **kw)
    return sink.sets, report


@pytest.mark.parametrize("name", ENUMERATORS)
def test_diamond_order_three(name):
    sets, report = collect(name, diamond_graph(), 3)
    assert sorted(sets) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert report.count == 4


def test_vsimple_diamond_emission_order():
    # roots in id order, candidates front to back
    sets, _ = collect("vsimple", diamond_graph(), 3)
    assert sets == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


@pytest.mark.parametrize("name", ENUMERATORS)
def test_k1_gives_singletons(name):
    g = path_graph(5)
    sets, _ = collect(name, g, 1)
    assert sorted(sets) == [(v,) for v in range(5)]


@pytest.mark.parametrize("name", ENUMERATORS)
def test_k_equals_n_gives_whole_graph(name):
    g = complete_graph(5)
    sets, _ = collect(name, g, 5)
    assert sets == [(0, 1, 2, 3, 4)]


@pytest.mark.parametrize("name", ENUMERATORS)
@pytest.mark.parametrize("k", [0, 5, -1])
def test_k_out_of_range(name, k):
    with pytest.raises(ValueError):
        collect(name, path_graph(4), k)


@pytest.mark.parametrize("name", ENUMERATORS)
def test_disconnected_input_rejected(name):
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        collect(name, g, 2)


def test_simple_rejects_unknown_pick():
    with pytest.raises(ValueError):
        enumerate_simple(path_graph(3), 2, SubgraphSink(), pick="middle")


# --- sink --------------------------------------------------------------------


def test_emit_collect_is_canonical():
    sink = SubgraphSink("collect")
    sink.emit([2, 0, 1])
    assert sink.sets == [(0, 1, 2)]


def test_emit_count():
    sink = SubgraphSink("count")
    for _ in range(3):
        sink.emit([0])
    assert sink.emitted == 3


def test_emit_write_maps_labels():
    out = io.StringIO()
    sink = SubgraphSink("write", out, labels={0: "7", 2: "9"})
    sink.emit([2, 0])
    assert out.getvalue() == "7 9\n"


def test_emit_write_sorts_integer_labels_numerically():
    out = io.StringIO()
    sink = SubgraphSink("write", out, labels=[10, 9, 100])
    sink.emit([0, 1, 2])
    assert out.getvalue() == "9 10 100\n"


def test_sink_validation():
    with pytest.raises(ValueError):
        SubgraphSink("print")
    with pytest.raises(ValueError):
        SubgraphSink("write")


# --- properties --------------------------------------------------------------


@settings(max_examples=150)
@given(graphs_with_k(max_n=11))
def test_exactly_once_against_oracle(case):
    g, k = case
    expected = brute_force_cise(g, k).sets
    for name in ENUMERATORS:
        sets, report = collect(name, g, k)
        assert max(Counter(sets).values()) == 1
        assert sorted(sets) == expected
        assert report.count == len(expected)


@settings(max_examples=100)
@given(graphs_with_k(max_n=10))
def test_state_restored_and_disjoint_in_debug_mode(case):
    g, k = case
    for name in ENUMERATORS:
        state = EnumerationState(g.n, k)
        collect(name, g, k, debug=True, state=state)
        if k > 1:
            assert state.restore_checks > 0
        assert state.snapshot() == EnumerationState(g.n, k).snapshot()


@settings(max_examples=100)
@given(graphs_with_k(max_n=10))
def test_pruning_never_changes_output(case):
    g, k = case
    for name in ENUMERATORS:
        pruned, with_rules = collect(name, g, k)
        plain, without = collect(name, g, k, has_int_leaf=False)
        assert sorted(pruned) == sorted(plain)
        assert with_rules.nodes_visited <= without.nodes_visited
    fewer, r1 = collect("vsimple", g, k)
    more, r2 = collect("vsimple", g, k, k_component=False)
    assert sorted(fewer) == sorted(more)
    assert r1.nodes_visited <= r2.nodes_visited


@settings(max_examples=150)
@given(graphs_with_k(max_n=10))
def test_pruning_rules_sound_under_audit(case):
    # audit mode keeps iterating past every rule firing and raises if
    # anything is emitted afterwards
    g, k = case
    for name in ENUMERATORS:
        sets, _ = collect(name, g, k, audit_pruning=True)
        assert sorted(sets) == brute_force_cise(g, k).sets


def test_audit_detects_unsound_rule():
    # a graph that under-reports its order makes the k-component rule fire
    # too early; the audit must notice the outputs it would have cut off
    g = path_graph(6)
    g.n = 4
    with pytest.raises(PruningAuditError):
        enumerate_vsimple(g, 3, SubgraphSink("collect"), has_int_leaf=False,
                          audit_pruning=True, state=EnumerationState(6, 3))


@given(graphs_with_k(min_n=2, max_n=12))
def test_order_two_count_is_edge_count(case):
    g, _ = case
    for name in ENUMERATORS:
        _, report = collect(name, g, 2)
        assert report.count == g.m


@pytest.mark.parametrize("name", ENUMERATORS)
def test_timeout_stops_and_restores(name):
    g, _ = random_suite(1, seed=3, n_range=(60, 60), probs=(0.5,))[0]
    state = EnumerationState(g.n, 6)
    deadline = Deadline(0.001)
    sink = SubgraphSink("count")
    report = ENUMERATORS[name](g, 6, sink, deadline=deadline, debug=True, state=state)
    assert report.timed_out
    assert report.count == sink.emitted >= 0
    assert state.snapshot() == EnumerationState(g.n, 6).snapshot()
