"""Isomorph-free generation against the edge-subset baseline."""

import pytest

from threshkit.canonical import canonical_colored_form, canonical_form
from threshkit.enumeration import (
    EnumerationConfig,
    all_colored_graphs,
    all_graphs,
    baseline_graphs,
    count_family,
    raw_extensions,
)
from threshkit.graphs import ColoredGraph
from threshkit.limits import CapacityError, Limits
from threshkit.threshold import is_threshold

from strategies import graph_from_mask


def test_config_validation():
    with pytest.raises(ValueError):
        EnumerationConfig(0)


def test_counts_match_baseline():
    for n in range(1, 6):
        fast = all_graphs(EnumerationConfig(n))
        slow = baseline_graphs(n)
        assert {canonical_form(g) for g in fast} == {canonical_form(g) for g in slow}


def test_small_counts():
    expected = (1, 2, 4, 11, 34, 156)
    for n, want in enumerate(expected, 1):
        assert len(all_graphs(EnumerationConfig(n))) == want


def test_streams_are_sorted_and_canonical():
    for n in range(1, 6):
        graphs = all_graphs(EnumerationConfig(n))
        forms = [canonical_form(g) for g in graphs]
        assert forms == sorted(forms)
        assert len(set(forms)) == len(forms)


def test_connected_filter():
    for n in range(1, 6):
        connected = all_graphs(EnumerationConfig(n, connected=True))
        assert all(g.is_connected() for g in connected)
        brute = sum(1 for g in baseline_graphs(n) if g.is_connected())
        assert len(connected) == brute


def test_colored_enumeration_matches_brute_force():
    from itertools import product

    for n in range(1, 5):
        fast = {canonical_colored_form(cg) for cg in all_colored_graphs(n)}
        slow = set()
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_mask(n, mask)
            for colors in product((0, 1), repeat=n):
                slow.add(canonical_colored_form(ColoredGraph(g, colors)))
        assert fast == slow


def test_colored_config_dispatch():
    cfg = EnumerationConfig(3, colored=True)
    out = all_graphs(cfg)
    assert all(isinstance(cg, ColoredGraph) for cg in out)
    assert {canonical_colored_form(cg) for cg in out} == {
        canonical_colored_form(cg) for cg in all_colored_graphs(3)
    }


def test_raw_extensions_cover_everything():
    for n in range(2, 6):
        raw = {canonical_form(g) for g in raw_extensions(n)}
        assert raw == {canonical_form(g) for g in all_graphs(EnumerationConfig(n))}


def test_count_family_threshold():
    assert count_family(lambda g: is_threshold(g) is not None, 5) == 16


def test_enumeration_bound_enforced():
    with pytest.raises(CapacityError):
        all_graphs(EnumerationConfig(9), Limits(enumeration_max_n=8))
