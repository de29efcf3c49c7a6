"""Forbidden-induced-subgraph recognizers and minimal-obstruction discovery.

Each characterized family gets a recognizer that scans the family's
obstruction patterns with the induced-embedding search. Acceptance means
no pattern embeds; rejection carries the first pattern found together
with its embedding, which is the checkable negative certificate.

find_minimal_obstructions is the discovery side: enumerate all (colored)
graphs up to a bound, evaluate an arbitrary membership predicate, and
report the members' minimal non-member boundary. Running it against a
brute-force recognizer and comparing with the shipped catalog is the
machine verification of the characterizations at small n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from .canonical import canonical_colored_form, canonical_form
from .catalogs import CatalogEntry, load_catalog
from .embed import find_induced_embedding
from .graphs import ColoredGraph, Graph
from .enumeration import EnumerationConfig, all_colored_graphs, all_graphs
from .limits import DEFAULT_LIMITS, Limits
from .named import named_graphs
from .switching import switching_class_graphs

__all__ = [
    "FisResult",
    "recognize_threshold_fis",
    "recognize_special_fis",
    "recognize_good_fis",
    "recognize_partitioned_fis",
    "recognize_switch_threshold_fis",
    "recognize_switch_cograph_fis",
    "switch_threshold_patterns",
    "find_minimal_obstructions",
    "find_minimal_colored_obstructions",
]


@dataclass(frozen=True)
class FisResult:
    accepted: bool
    pattern: Optional[str] = None
    embedding: Optional[tuple[int, ...]] = None


def _scan(g: Graph, patterns: Sequence[tuple[str, Graph]]) -> FisResult:
    for name, pat in patterns:
        if pat.n > g.n:
            continue
        emb = find_induced_embedding(g, pat)
        if emb is not None:
            return FisResult(False, name, emb)
    return FisResult(True)


def _catalog_patterns(family: str) -> tuple[tuple[str, Graph], ...]:
    cat = load_catalog(family)
    return tuple(sorted(((e.name, e.graph) for e in cat.entries),
                        key=lambda p: (p[1].n, p[0])))


def recognize_threshold_fis(g: Graph) -> FisResult:
    return _scan(g, _catalog_patterns("threshold"))


def recognize_special_fis(g: Graph) -> FisResult:
    return _scan(g, _catalog_patterns("special2t"))


def recognize_good_fis(g: Graph) -> FisResult:
    return _scan(g, _catalog_patterns("good"))


def recognize_switch_cograph_fis(g: Graph) -> FisResult:
    return _scan(g, _catalog_patterns("switch_cograph"))


@lru_cache(maxsize=1)
def switch_threshold_patterns() -> tuple[tuple[str, Graph], ...]:
    """Union of the computed switching classes of 3K2, C5 and C4+2K1.

    Deduplicated by canonical form and named after the shipped catalog
    where possible; the catalogs verification suite asserts the two lists
    coincide up to isomorphism.
    """
    reg = named_graphs()
    by_form: dict[str, Graph] = {}
    for seed in ("3k2", "c5", "c4-2k1"):
        for h in switching_class_graphs(reg[seed]):
            by_form.setdefault(canonical_form(h), h)
    names = {canonical_form(e.graph): e.name
             for e in load_catalog("switch_threshold").entries}
    pats = [(names.get(form, form), by_form[form]) for form in sorted(by_form)]
    return tuple(sorted(pats, key=lambda p: (p[1].n, p[0])))


def recognize_switch_threshold_fis(g: Graph) -> FisResult:
    return _scan(g, switch_threshold_patterns())


@lru_cache(maxsize=1)
def _partitioned_patterns() -> tuple[tuple[str, ColoredGraph], ...]:
    """Catalogued colored patterns plus color swaps where they differ."""
    pats: list[tuple[str, ColoredGraph]] = []
    for e in load_catalog("partitioned2t").entries:
        cg = e.colored_graph
        pats.append((e.name, cg))
        swapped = cg.swapped()
        if canonical_colored_form(swapped) != canonical_colored_form(cg):
            pats.append((e.name + ":swapped", swapped))
    return tuple(sorted(pats, key=lambda p: (p[1].graph.n, p[0])))


def recognize_partitioned_fis(cg: ColoredGraph) -> FisResult:
    for name, pat in _partitioned_patterns():
        if pat.graph.n > cg.graph.n:
            continue
        emb = find_induced_embedding(cg.graph, pat.graph,
                                     host_coloring=cg.colors,
                                     pattern_coloring=pat.colors)
        if emb is not None:
            return FisResult(False, name, emb)
    return FisResult(True)


def find_minimal_obstructions(
    member: Callable[[Graph], bool],
    n_max: int,
    limits: Limits = DEFAULT_LIMITS,
) -> list[Graph]:
    """All canonical non-members with <= n_max vertices whose every
    one-vertex deletion is a member. Sorted by canonical form per level."""
    verdicts: dict[str, bool] = {}
    out: list[Graph] = []
    for n in range(1, n_max + 1):
        for g in all_graphs(EnumerationConfig(n), limits):
            ok = bool(member(g))
            verdicts[canonical_form(g)] = ok
            if ok or n == 1:
                continue
            if all(verdicts[canonical_form(g.delete_vertex(v))] for v in range(n)):
                out.append(g)
    return out


def find_minimal_colored_obstructions(
    member: Callable[[ColoredGraph], bool],
    n_max: int,
    limits: Limits = DEFAULT_LIMITS,
) -> list[ColoredGraph]:
    """Colored variant of find_minimal_obstructions, color-preserving dedup."""
    verdicts: dict[str, bool] = {}
    out: list[ColoredGraph] = []
    for n in range(1, n_max + 1):
        for cg in all_colored_graphs(n, limits):
            ok = bool(member(cg))
            verdicts[canonical_colored_form(cg)] = ok
            if ok or n == 1:
                continue
            if all(verdicts[canonical_colored_form(cg.delete_vertex(v))]
                   for v in range(n)):
                out.append(cg)
    return out
