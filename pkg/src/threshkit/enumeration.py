"""Isomorph-free exhaustive generation of small graphs and 2-colored graphs.

The production generator extends each canonical (n-1)-vertex representative
by every neighbor subset for a new vertex and dedups by canonical form; the
edge-subset baseline generator exists as the trivially correct oracle and
the two are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .canonical import canonical_colored_graph, canonical_graph
from .graph6 import color_string, encode_graph6
from .graphs import ColoredGraph, Graph, bits
from .limits import DEFAULT_LIMITS, CapacityError, Limits

__all__ = [
    "EnumerationConfig",
    "all_graphs",
    "all_colored_graphs",
    "baseline_graphs",
    "raw_extensions",
    "count_family",
]


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    colored: bool = False
    connected: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")


def _check_bound(n: int, limits: Limits) -> None:
    if n > limits.enumeration_max_n:
        raise CapacityError(f"enumeration at n={n} exceeds bound {limits.enumeration_max_n}")


def _extend(g: Graph, mask: int) -> Graph:
    """g plus one new highest-index vertex adjacent to mask."""
    rows = list(g.rows)
    for v in bits(mask):
        rows[v] |= 1 << g.n
    rows.append(mask)
    return Graph(g.n + 1, tuple(rows))


@lru_cache(maxsize=None)
def _representatives(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    seen: dict[str, Graph] = {}
    for h in _representatives(n - 1):
        for mask in range(1 << h.n):
            canon = canonical_graph(_extend(h, mask))
            seen.setdefault(encode_graph6(canon), canon)
    return tuple(seen[form] for form in sorted(seen))


def all_graphs(cfg: EnumerationConfig, limits: Limits = DEFAULT_LIMITS) -> tuple[Graph, ...] | tuple[ColoredGraph, ...]:
    """Every isomorphism class on cfg.n vertices, canonical, sorted by form."""
    _check_bound(cfg.n, limits)
    if cfg.colored:
        reps = _colored_representatives(cfg.n)
    else:
        reps = _representatives(cfg.n)
    if cfg.connected:
        if cfg.colored:
            reps = tuple(cg for cg in reps if cg.graph.is_connected())
        else:
            reps = tuple(g for g in reps if g.is_connected())
    return reps


@lru_cache(maxsize=None)
def _colored_representatives(n: int) -> tuple[ColoredGraph, ...]:
    seen: dict[str, ColoredGraph] = {}
    for g in _representatives(n):
        for colors in product((0, 1), repeat=n):
            canon = canonical_colored_graph(ColoredGraph(g, colors))
            form = f"{encode_graph6(canon.graph)} {color_string(canon.colors)}"
            seen.setdefault(form, canon)
    return tuple(seen[form] for form in sorted(seen))


def all_colored_graphs(n: int, limits: Limits = DEFAULT_LIMITS) -> tuple[ColoredGraph, ...]:
    """Every 2-colored class, deduped color-preservingly."""
    _check_bound(n, limits)
    return _colored_representatives(n)


def baseline_graphs(n: int, limits: Limits = DEFAULT_LIMITS) -> tuple[Graph, ...]:
    """Oracle generator: all edge subsets, deduped by canonical form."""
    _check_bound(n, limits)
    pairs = list(combinations(range(n), 2))
    seen: dict[str, Graph] = {}
    for picks in product((0, 1), repeat=len(pairs)):
        g = Graph.from_edges(n, [e for e, take in zip(pairs, picks) if take])
        canon = canonical_graph(g)
        seen.setdefault(encode_graph6(canon), canon)
    return tuple(seen[form] for form in sorted(seen))


def raw_extensions(n: int, limits: Limits = DEFAULT_LIMITS) -> list[Graph]:
    """All extensions of the canonical (n-1)-level, before canonical dedup.

    Hits every isomorphism class on n vertices at least once, usually many
    times; useful when coverage matters but canonical dedup does not.
    """
    _check_bound(n, limits)
    if n == 1:
        return [Graph(1, (0,))]
    out = []
    for h in _representatives(n - 1):
        for mask in range(1 << h.n):
            out.append(_extend(h, mask))
    return out


def count_family(member, n: int, limits: Limits = DEFAULT_LIMITS) -> int:
    """Number of canonical classes on n vertices satisfying member."""
    return sum(1 for g in all_graphs(EnumerationConfig(n), limits) if member(g))
