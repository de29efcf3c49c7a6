"""Forbidden-induced-subgraph recognizers and obstruction discovery."""

from threshkit.canonical import canonical_colored_form, canonical_form
from threshkit.catalogs import load_catalog
from threshkit.embed import embeds_colored, find_induced_embedding
from threshkit.graphs import ColoredGraph, disjoint_union
from threshkit.kthreshold import eliminate, general_dialect, is_good, is_special
from threshkit.named import (
    bull,
    complete_graph,
    cycle_graph,
    empty_graph,
    gem,
    matching,
    path_graph,
)
from threshkit.obstructions import (
    find_minimal_colored_obstructions,
    find_minimal_obstructions,
    recognize_good_fis,
    recognize_partitioned_fis,
    recognize_special_fis,
    recognize_switch_cograph_fis,
    recognize_switch_threshold_fis,
    recognize_threshold_fis,
    switch_threshold_patterns,
)
from threshkit.switching import switch_to_threshold
from threshkit.threshold import is_threshold

SWAP_SUFFIX = ":swapped"


def _resolve_pattern(family, name):
    """Map a FisResult pattern name back to the pattern object it names."""
    if family == "switch_threshold":
        # embeddings refer to the computed orbit graphs, not catalog labelings
        return dict(switch_threshold_patterns())[name]
    cat = load_catalog(family)
    if name.endswith(SWAP_SUFFIX):
        return cat.lookup(name[: -len(SWAP_SUFFIX)]).colored_graph.swapped()
    entry = cat.lookup(name)
    return entry.colored_graph if family == "partitioned2t" else entry.graph


def _check_embedding(result, host, family, colored=False):
    """The returned embedding must realize the named pattern in the host."""
    assert result.pattern is not None and result.embedding is not None
    pat = _resolve_pattern(family, result.pattern)
    emb = result.embedding
    pg = pat.graph if colored else pat
    hg = host.graph if colored else host
    assert len(emb) == pg.n == len(set(emb))
    for i in range(pg.n):
        for j in range(i + 1, pg.n):
            assert hg.has_edge(emb[i], emb[j]) == pg.has_edge(i, j)
    if colored:
        for i in range(pg.n):
            assert host.colors[emb[i]] == pat.colors[i]


def test_threshold_fis_accepts_members():
    for g in (complete_graph(4), path_graph(3), empty_graph(5)):
        res = recognize_threshold_fis(g)
        assert res.accepted
        assert res.pattern is None and res.embedding is None


def test_threshold_fis_rejects_with_witness():
    host = disjoint_union(path_graph(4), complete_graph(2))
    res = recognize_threshold_fis(host)
    assert not res.accepted
    _check_embedding(res, host, "threshold")


def test_threshold_fis_matches_elimination_exhaustively():
    from threshkit.enumeration import EnumerationConfig, all_graphs

    for n in range(1, 7):
        for g in all_graphs(EnumerationConfig(n)):
            assert recognize_threshold_fis(g).accepted == (is_threshold(g) is not None)


def test_special_fis_known_cases():
    assert recognize_special_fis(path_graph(4)).accepted
    res = recognize_special_fis(cycle_graph(5))
    assert not res.accepted
    _check_embedding(res, cycle_graph(5), "special2t")
    assert is_special(cycle_graph(5)) is None


def test_good_fis_known_cases():
    assert recognize_good_fis(cycle_graph(5)).accepted
    assert is_good(cycle_graph(5))
    res = recognize_good_fis(gem())
    assert not res.accepted
    _check_embedding(res, gem(), "good")


def test_switch_cograph_fis_known_cases():
    assert recognize_switch_cograph_fis(path_graph(4)).accepted
    for bad in (cycle_graph(5), bull(), gem()):
        res = recognize_switch_cograph_fis(bad)
        assert not res.accepted
        assert _resolve_pattern("switch_cograph", res.pattern).n == bad.n


def test_switch_threshold_fis_known_cases():
    assert recognize_switch_threshold_fis(cycle_graph(4)).accepted
    assert switch_to_threshold(cycle_graph(4)) is not None
    host = disjoint_union(matching(2), cycle_graph(4))
    res = recognize_switch_threshold_fis(host)
    assert not res.accepted
    _check_embedding(res, host, "switch_threshold")


def test_partitioned_fis_known_cases():
    mono = ColoredGraph(matching(2), (0, 0, 0, 0))
    res = recognize_partitioned_fis(mono)
    assert not res.accepted
    _check_embedding(res, mono, "partitioned2t", colored=True)
    bi = ColoredGraph(matching(2), (0, 0, 1, 1))
    assert recognize_partitioned_fis(bi).accepted
    assert eliminate(bi, general_dialect(2)) is not None


def test_partitioned_fis_on_buildable_coloring():
    cg = ColoredGraph(path_graph(3), (1, 0, 1))
    assert recognize_partitioned_fis(cg).accepted


def test_minimal_threshold_obstructions_are_the_classic_three():
    found = find_minimal_obstructions(lambda g: is_threshold(g) is not None, 5)
    cat = load_catalog("threshold")
    assert {canonical_form(g) for g in found} == {
        canonical_form(e.graph) for e in cat.entries
    }


def test_switch_threshold_patterns_match_catalog():
    pats = switch_threshold_patterns()
    cat = load_catalog("switch_threshold")
    assert len(pats) == len(cat.entries) == 16
    assert {canonical_form(g) for _, g in pats} == {
        canonical_form(e.graph) for e in cat.entries
    }
    # every pattern carries its catalog name, none fell back to a raw form
    assert {name for name, _ in pats} == set(cat.names())


def test_partitioned_pattern_set_is_swap_closed():
    cat = load_catalog("partitioned2t")
    forms = {canonical_colored_form(e.colored_graph) for e in cat.entries}
    swapped = {canonical_colored_form(e.colored_graph.swapped()) for e in cat.entries}
    assert forms == swapped


def test_each_partitioned_entry_is_its_own_witness():
    cat = load_catalog("partitioned2t")
    for e in cat.entries:
        cg = e.colored_graph
        res = recognize_partitioned_fis(cg)
        assert not res.accepted
        assert _resolve_pattern("partitioned2t", res.pattern).graph.n == cg.graph.n
        for v in range(cg.graph.n):
            assert recognize_partitioned_fis(cg.delete_vertex(v)).accepted


def test_colored_discovery_matches_catalog_at_small_n():
    member = lambda cg: eliminate(cg, general_dialect(2)) is not None
    found = find_minimal_colored_obstructions(member, 4)
    cat = load_catalog("partitioned2t")
    expected = {
        canonical_colored_form(e.colored_graph)
        for e in cat.entries
        if e.graph.n <= 4
    }
    assert {canonical_colored_form(cg) for cg in found} == expected


def test_embed_helpers_agree_with_recognizers():
    host = disjoint_union(matching(2), complete_graph(1))
    assert find_induced_embedding(host, matching(2)) is not None
    colored_host = ColoredGraph(host, (0, 0, 0, 0, 1))
    pattern = ColoredGraph(matching(2), (0, 0, 0, 0))
    assert embeds_colored(colored_host, pattern)
