"""Canonical forms via exact search for the minimal adjacency bit-string.

The canonical representative is the relabeling that minimizes the
column-major upper-triangle bit-string (the graph6 body), found by a
level-wise search that keeps every prefix-minimal partial order. For
colored graphs the color sequence is minimized first, so equal forms mean
color-preserving isomorphism, not isomorphism up to color renaming.
"""

from __future__ import annotations

from .graph6 import color_string, encode_graph6
from .graphs import ColoredGraph, Graph
from .limits import DEFAULT_LIMITS, CapacityError, Limits

__all__ = [
    "canonical_graph",
    "canonical_form",
    "canonical_colored_graph",
    "canonical_colored_form",
]


def _min_order(n: int, rows: tuple[int, ...], colors: tuple[int, ...] | None) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    want = sorted(colors) if colors is not None else [0] * n
    # A state is (order, profiles): profiles[v] packs v's adjacency to the
    # placed vertices, earliest placed in the most significant bit. All live
    # states realize the same minimal (colors, columns) prefix.
    states: list[tuple[tuple[int, ...], dict[int, int]]] = [((), {v: 0 for v in range(n)})]
    for level in range(n):
        target = want[level]
        picks: list[tuple[int, int, int]] = []
        best: int | None = None
        for si, (_, prof) in enumerate(states):
            ranked = sorted(
                (p, u) for u, p in prof.items() if colors is None or colors[u] == target
            )
            kept: list[tuple[int, int]] = []
            for p, u in ranked:
                if best is not None and p > best:
                    break
                twin = False
                for p2, u2 in kept:
                    # a transposition automorphism makes the branches identical
                    if p2 == p and rows[u] & ~(1 << u2) == rows[u2] & ~(1 << u):
                        twin = True
                        break
                if twin:
                    continue
                kept.append((p, u))
                picks.append((p, si, u))
                if best is None or p < best:
                    best = p
        merged: dict[tuple, tuple[tuple[int, ...], dict[int, int]]] = {}
        for p, si, u in picks:
            if p != best:
                continue
            order, prof = states[si]
            nprof = {v: (q << 1) | (rows[v] >> u & 1) for v, q in prof.items() if v != u}
            key = tuple(sorted(nprof.items()))
            if key not in merged:
                merged[key] = (order + (u,), nprof)
        states = list(merged.values())
    return states[0][0]


def _check_size(n: int, limits: Limits) -> None:
    if n > limits.canonical_max_n:
        raise CapacityError(f"canonical form on {n} vertices exceeds bound {limits.canonical_max_n}")


def canonical_graph(g: Graph, limits: Limits = DEFAULT_LIMITS) -> Graph:
    _check_size(g.n, limits)
    return g.relabel(_min_order(g.n, g.rows, None))


def canonical_form(g: Graph, limits: Limits = DEFAULT_LIMITS) -> str:
    """Total isomorphism invariant, printable as graph6."""
    return encode_graph6(canonical_graph(g, limits))


def canonical_colored_graph(cg: ColoredGraph, limits: Limits = DEFAULT_LIMITS) -> ColoredGraph:
    _check_size(cg.n, limits)
    order = _min_order(cg.n, cg.graph.rows, cg.colors)
    return ColoredGraph(cg.graph.relabel(order), tuple(cg.colors[v] for v in order))


def canonical_colored_form(cg: ColoredGraph, limits: Limits = DEFAULT_LIMITS) -> str:
    canon = canonical_colored_graph(cg, limits)
    return f"{encode_graph6(canon.graph)} {color_string(canon.colors)}"
