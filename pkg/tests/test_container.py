import json
from fractions import Fraction

import pytest

from leelab import (
    CapacityError,
    DomainError,
    Space,
    Word,
    ball_volume,
    build_container_family,
    build_lee_graph,
    count_independent_sets,
    degree_profile,
    enumerate_independent_sets,
    hamming_bound,
    independence_polynomial,
    run_algorithm1,
    run_algorithm2,
    supersaturation_report,
)
from leelab.config import reset_caps, set_cap
from leelab.container import ALGORITHM_COUNT, ALGORITHM_DEGREE, degree_threshold


@pytest.fixture(scope="module")
def g16():
    return build_lee_graph(Space(4, 2), 1)


@pytest.fixture(scope="module")
def g9():
    return build_lee_graph(Space(3, 2), 1)


def test_graph_examples(g16, g9):
    assert g16.node_count == 16 and g16.degree == 10
    assert g9.node_count == 9 and g9.degree == 8
    g4 = build_lee_graph(Space(2, 2), 1)
    assert g4.degree == 3  # complete graph on four nodes
    for graph in (g16, g9, g4):
        expected = ball_volume(graph.space, 2 * graph.t) - 1
        assert all(mask.bit_count() == expected for mask in graph.adjacency)


def test_graph_cap():
    set_cap("graph_nodes", 8)
    try:
        with pytest.raises(CapacityError):
            build_lee_graph(Space(4, 2), 1)
    finally:
        reset_caps()


def test_graph_cap_env_override(monkeypatch):
    monkeypatch.setenv("LEELAB_CAP_NODES", "4")
    with pytest.raises(CapacityError):
        build_lee_graph(Space(3, 2), 1)
    monkeypatch.setenv("LEELAB_CAP_NODES", "16")
    assert build_lee_graph(Space(4, 2), 1).node_count == 16


def test_count_examples(g16, g9):
    assert count_independent_sets(g16) == 57
    assert count_independent_sets(g9) == 10  # complete graph: empty + singletons
    assert independence_polynomial(g16) == (1, 16, 40)


def test_count_isolated_nodes():
    graph = build_lee_graph(Space(2, 3), 1)  # complete on 8 nodes
    assert count_independent_sets(graph, induced_on=[0]) == 2
    assert count_independent_sets(graph, induced_on=[]) == 1


def test_count_cap(g16):
    set_cap("count_nodes", 8)
    try:
        with pytest.raises(CapacityError):
            count_independent_sets(g16)
    finally:
        reset_caps()


def test_enumerate_independent_sets(g16, g9):
    sets16 = list(enumerate_independent_sets(g16))
    assert len(sets16) == 57
    assert sets16[0] == frozenset()
    assert len({frozenset(s) for s in sets16}) == 57
    for ind in sets16:
        members = sorted(ind, key=lambda w: w.coords)
        for i, x in enumerate(members):
            for y in members[i + 1 :]:
                assert not g16.is_edge(g16.index(x), g16.index(y))
    g4 = build_lee_graph(Space(2, 2), 1)
    assert len(list(enumerate_independent_sets(g4))) == 5


def test_degree_profile(g16):
    profile = degree_profile(g16, range(16))
    assert profile.edge_counts == (32, 48)
    assert profile.edge_total == 80
    assert profile.max_degree == 10
    assert profile.degree_bound_ok
    # handshake identity per distance
    for r in (1, 2):
        assert 2 * profile.edge_counts[r - 1] == sum(
            profile.per_node[v][r - 1] for v in profile.nodes
        )
    empty = degree_profile(g16, [])
    assert empty.edge_total == 0 and empty.max_degree == 0
    single = degree_profile(g16, [5])
    assert single.edge_total == 0


def test_degree_threshold_branches():
    assert degree_threshold(Space(4, 2), 1, Fraction(1), None) == Fraction(1, 2)
    assert degree_threshold(Space(5, 2), 1, Fraction(1), None) == Fraction(1, 5)
    assert degree_threshold(Space(5, 2), 3, Fraction(1), Fraction(2)) == Fraction(1, 5)
    with pytest.raises(DomainError):
        degree_threshold(Space(5, 2), 3, Fraction(1), None)


def test_algorithm1_rejects_dependent_input(g16):
    with pytest.raises(DomainError):
        run_algorithm1(g16, [0, 1], Fraction(1))


def test_algorithm1_spec_example(g16):
    space = g16.space
    ind = [Word(space, (0, 0)), Word(space, (2, 2))]
    run = run_algorithm1(g16, ind, Fraction(1))
    assert run.containment_ok
    assert set(ind) <= run.covered
    assert run.delta_threshold == Fraction(1, 2)
    actions = [s.action for s in run.steps]
    assert actions.count("fingerprint") == len(run.fingerprint)


def test_algorithm1_empty_input(g16):
    run = run_algorithm1(g16, [], Fraction(1))
    # no stop branch can fire: the graph drains and the container is empty
    assert run.fingerprint == frozenset() and run.container == frozenset()
    assert run.containment_ok


def test_algorithm1_huge_epsilon_stops_on_first_member(g16):
    space = g16.space
    ind = [Word(space, (0, 0)), Word(space, (2, 2))]
    run = run_algorithm1(g16, ind, Fraction(1000))
    # the threshold exceeds every degree, so the first input node reached
    # triggers the stop branch with the live nodes as the container
    assert run.fingerprint == frozenset()
    assert run.steps[-1].action == "stop"
    assert set(ind) <= run.covered


def test_algorithm2_replay(g16):
    h = hamming_bound(g16.space, 1)
    run = run_algorithm2(g16, [], Fraction(0), h)
    assert run.containment_ok
    assert run.steps[-1].action == "stop"
    # immediate termination when the count test already passes
    run_now = run_algorithm2(g16, [], Fraction(10), h)
    assert len(run_now.steps) == 1
    assert run_now.container == frozenset(g16.word(v) for v in range(16))


def test_algorithm_containment_exhaustive(g16, g9):
    for graph in (g16, g9):
        h = hamming_bound(graph.space, graph.t)
        for ind in enumerate_independent_sets(graph):
            r1 = run_algorithm1(graph, ind, Fraction(1))
            r2 = run_algorithm2(graph, ind, Fraction(1, 10), h)
            assert ind <= r1.covered
            assert ind <= r2.covered


def test_container_family(g16, g9):
    for graph in (g16, g9):
        for variant in (ALGORITHM_DEGREE, ALGORITHM_COUNT):
            family = build_container_family(graph, Fraction(1, 10), variant)
            assert family.coverage_ok and family.counting_ok
            assert family.independent_set_count <= family.member_count_sum
    complete = build_lee_graph(Space(2, 2), 1)
    family = build_container_family(complete, Fraction(1), ALGORITHM_DEGREE)
    assert family.coverage_ok


def test_trace_jsonl(g16):
    run = run_algorithm1(g16, [Word(g16.space, (0, 0))], Fraction(1))
    lines = run.to_jsonl().splitlines()
    meta = json.loads(lines[0])
    assert meta["variant"] == "algorithm1"
    for line in lines[1:-1]:
        step = json.loads(line)
        assert set(step) == {"step", "node", "degree", "action"}
    result = json.loads(lines[-1])
    assert result["containment_ok"] is True
    # node names are base-m digit strings
    assert all(len(json.loads(l)["node"]) == 2 for l in lines[1:-1])


def test_supersaturation_full_node_set(g16):
    report = supersaturation_report(g16, range(16))
    assert report.subset_size == 16
    assert report.dense_hypothesis  # 16 >= 2 * 16/5
    assert report.weighted_pair_sum == 160
    assert report.weighted_pair_lower == Fraction(16 * 16 * 25, 160)
    assert report.weighted_pair_ok
    assert report.edge_count == 80 and report.edge_ok
    assert report.pair_ok
    assert report.high_degree_size == 16


def test_supersaturation_empty_subset(g16):
    report = supersaturation_report(g16, [])
    assert report.subset_size == 0
    assert not report.dense_hypothesis and not report.surplus_hypothesis
    assert report.weighted_pair_ok is None
    assert report.edge_ok is None and report.pair_ok is None


def test_supersaturation_seeded_random(g16):
    import random

    rng = random.Random(42)
    for _ in range(200):
        subset = [v for v in range(16) if rng.random() < 0.5]
        report = supersaturation_report(g16, subset)
        for flag in (report.weighted_pair_ok, report.edge_ok, report.pair_ok):
            assert flag is not False
