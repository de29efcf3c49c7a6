"""Colored elimination dialects: roundtrips, closures, neighborhood shapes."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from threshkit.enumeration import EnumerationConfig, all_graphs
from threshkit.graphs import ColoredGraph, cutrank_profile
from threshkit.kthreshold import (
    EXTENDED,
    RESTRICTED,
    SPECIAL,
    eliminate,
    general_dialect,
    is_extended,
    is_good,
    is_k_threshold,
    is_restricted,
    is_special,
    neighborhood_shape,
)
from threshkit.limits import CapacityError, Limits
from threshkit.named import (
    complete_graph,
    cone,
    cycle_graph,
    gem,
    matching,
    octahedron,
    path_graph,
)
from threshkit.sequences import ADD, BuildSequence, Step, evaluate
from threshkit.threshold import is_threshold

from strategies import colored_graphs

DIALECTS = (general_dialect(2), SPECIAL, RESTRICTED, EXTENDED)


def test_general_dialect_validation():
    with pytest.raises(ValueError):
        general_dialect(0)
    assert general_dialect(3).k == 3


def test_eliminate_rejects_out_of_range_colors():
    cg = ColoredGraph(path_graph(2), (0, 2))
    with pytest.raises(ValueError):
        eliminate(cg, general_dialect(2))


def test_bichromatic_matching_membership():
    # one edge black, the other white: buildable with General(2)
    cg = ColoredGraph(matching(2), (0, 0, 1, 1))
    seq = eliminate(cg, general_dialect(2))
    assert seq is not None
    assert evaluate(seq) == cg
    # monochromatic 2K2 degenerates to plain threshold: rejected
    mono = ColoredGraph(matching(2), (0, 0, 0, 0))
    assert eliminate(mono, general_dialect(2)) is None


@settings(max_examples=200)
@given(colored_graphs(max_n=7), st.sampled_from(DIALECTS))
def test_eliminate_roundtrips_exactly(cg, dialect):
    seq = eliminate(cg, dialect)
    if seq is not None:
        assert evaluate(seq) == cg
        assert set(step.op.kind for step in seq.steps[1:]) <= {op.kind for op in dialect.ops}


@settings(max_examples=200)
@given(colored_graphs(max_n=7), st.sampled_from(DIALECTS))
def test_accepted_sequences_use_allowed_operators(cg, dialect):
    seq = eliminate(cg, dialect)
    if seq is not None:
        allowed = set(dialect.ops)
        assert all(step.op in allowed for step in seq.steps[1:])


def test_monochromatic_general_equals_threshold():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            mono = ColoredGraph(g, (0,) * n)
            assert (eliminate(mono, general_dialect(2)) is not None) == (
                is_threshold(g) is not None
            )


def test_one_color_search_equals_threshold():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            assert (is_k_threshold(g, 1) is not None) == (is_threshold(g) is not None)


def test_dialect_inclusions():
    # operator subsets give class inclusions
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            two = is_k_threshold(g, 2) is not None
            if is_threshold(g) is not None:
                assert is_special(g) is not None
            if is_special(g) is not None:
                assert two
                assert is_extended(g) is not None
            if is_restricted(g) is not None:
                assert two
                assert is_extended(g) is not None


def test_search_results_replay():
    for n in range(1, 6):
        for g in all_graphs(EnumerationConfig(n)):
            for search in (lambda h: is_k_threshold(h, 2), is_special, is_restricted, is_extended):
                res = search(g)
                if res is None:
                    continue
                coloring, seq = res
                assert evaluate(seq) == ColoredGraph(g, coloring)


def test_hereditary_two_threshold():
    for n in range(2, 6):
        for g in all_graphs(EnumerationConfig(n)):
            if is_k_threshold(g, 2) is None:
                continue
            for v in range(n):
                assert is_k_threshold(g.delete_vertex(v), 2) is not None


def test_complement_closure_restricted_extended():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            c = g.complement()
            assert (is_restricted(g) is not None) == (is_restricted(c) is not None)
            assert (is_extended(g) is not None) == (is_extended(c) is not None)


def test_cutrank_bounded_by_color_count():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            for k in (1, 2, 3):
                res = is_k_threshold(g, k)
                if res is not None:
                    assert cutrank_profile(g, res[1].order) <= k


def test_gem_is_not_k_threshold_for_any_k():
    # the apex neighborhood is a P4, which no single color class can cover,
    # so the gem sits outside the whole hierarchy
    big = Limits(coloring_budget=1 << 24)
    for k in range(2, 6):
        assert is_k_threshold(gem(), k, big) is None


def test_color_hierarchy_is_strict():
    big = Limits(coloring_budget=1 << 24)
    assert is_k_threshold(cycle_graph(4), 2, big) is not None
    assert is_k_threshold(cycle_graph(5), 2, big) is None
    assert is_k_threshold(cycle_graph(5), 3, big) is not None
    assert is_k_threshold(cycle_graph(6), 3, big) is None
    assert is_k_threshold(cycle_graph(6), 4, big) is not None


def test_coloring_budget_enforced():
    tight = Limits(coloring_budget=4)
    with pytest.raises(CapacityError):
        is_special(path_graph(5), tight)


def test_neighborhood_shapes():
    g = gem()
    apex = next(v for v in range(g.n) if g.degree(v) == 4)
    assert neighborhood_shape(g, apex) == "other"
    h = octahedron()
    assert neighborhood_shape(h, 0) == "join_of_two_thresholds"
    assert neighborhood_shape(matching(2), 0) == "threshold"
    assert neighborhood_shape(cone(matching(2)), 4) == "union_of_two_thresholds"
    # three nontrivial union blocks cannot be grouped into two threshold
    # parts, which is exactly why the cone over 3K2 fails to be good
    assert neighborhood_shape(cone(matching(3)), 6) == "other"
    assert neighborhood_shape(complete_graph(1), 0) == "empty"
    with pytest.raises(ValueError):
        neighborhood_shape(g, 9)


def test_good_examples():
    assert is_good(cycle_graph(5))
    assert is_good(complete_graph(6))
    assert not is_good(gem())
    assert not is_good(cone(octahedron()))


def _random_member(rnd, dialect, n):
    steps = [Step(rnd.randrange(dialect.k), ADD)]
    for _ in range(n - 1):
        steps.append(Step(rnd.randrange(dialect.k), rnd.choice(dialect.ops)))
    return evaluate(BuildSequence(dialect.k, tuple(steps)))


@settings(max_examples=80)
@given(st.randoms(use_true_random=False), st.sampled_from(DIALECTS), st.integers(2, 9))
def test_generated_members_are_accepted(rnd, dialect, n):
    cg = _random_member(rnd, dialect, n)
    seq = eliminate(cg, dialect)
    assert seq is not None
    assert evaluate(seq) == cg
