"""Seidel switching: algebra, classes, threshold and cograph switch search."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from threshkit.canonical import canonical_form
from threshkit.embed import find_induced_embedding
from threshkit.enumeration import EnumerationConfig, all_graphs
from threshkit.limits import CapacityError, Limits
from threshkit.named import (
    complete_graph,
    cycle_graph,
    empty_graph,
    gem,
    matching,
    path_graph,
)
from threshkit.graphs import disjoint_union
from threshkit.switching import (
    has_cograph_switch,
    is_cograph,
    is_switch_cograph,
    switch,
    switch_to_threshold,
    switching_class,
    switching_class_graphs,
)
from threshkit.threshold import is_threshold

from strategies import graphs


def test_switch_definition_on_an_edge():
    g = complete_graph(2)
    assert switch(g, 0b01).edge_count() == 0
    assert switch(g, 0b11) == g


def test_switch_rejects_foreign_vertices():
    with pytest.raises(ValueError):
        switch(path_graph(2), 0b100)


@given(graphs(max_n=7), st.integers(0, 127))
def test_switch_is_an_involution(g, raw):
    s = raw & g.full_mask
    assert switch(switch(g, s), s) == g


@given(graphs(max_n=7), st.integers(0, 127))
def test_switch_by_complement_set_is_identical(g, raw):
    s = raw & g.full_mask
    assert switch(g, s) == switch(g, g.full_mask ^ s)


@given(graphs(max_n=7))
def test_switch_by_empty_set_is_identity(g):
    assert switch(g, 0) == g


@given(graphs(max_n=6), st.integers(0, 63))
def test_switching_class_is_switch_invariant(g, raw):
    s = raw & g.full_mask
    assert switching_class(switch(g, s)) == switching_class(g)


def test_switching_class_contains_the_graph():
    g = path_graph(4)
    assert canonical_form(g) in switching_class(g)
    reps = switching_class_graphs(g)
    assert tuple(canonical_form(h) for h in reps) == switching_class(g)


def test_switching_class_of_c5():
    forms = {canonical_form(h) for h in switching_class_graphs(cycle_graph(5))}
    from threshkit.named import bull, cogem

    expected = {canonical_form(h) for h in (cycle_graph(5), gem(), cogem(), bull())}
    assert forms == expected


def test_threshold_graph_needs_no_switch():
    cert = switch_to_threshold(complete_graph(4))
    assert cert is not None and cert.set == 0


def test_c4_plus_two_isolated_has_no_threshold_switch():
    g = disjoint_union(cycle_graph(4), empty_graph(2))
    assert switch_to_threshold(g) is None


def test_switch_certificates_verify():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            cert = switch_to_threshold(g)
            if cert is not None:
                assert switch(g, cert.set) == cert.target
                assert is_threshold(cert.target) is not None


def test_is_cograph_matches_p4_free():
    p4 = path_graph(4)
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            assert is_cograph(g) == (find_induced_embedding(g, p4) is None)


def test_cograph_switch_search_agrees_with_fis():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            assert (has_cograph_switch(g) is not None) == is_switch_cograph(g)


def test_cograph_switch_certificates_verify():
    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            cert = has_cograph_switch(g)
            if cert is not None:
                assert switch(g, cert.set) == cert.target
                assert is_cograph(cert.target)


def test_search_budget_enforced():
    tight = Limits(coloring_budget=2)
    with pytest.raises(CapacityError):
        switch_to_threshold(matching(3), tight)
    with pytest.raises(CapacityError):
        has_cograph_switch(matching(3), tight)
