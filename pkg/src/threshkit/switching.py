"""Seidel switching, switching classes, switch-to-threshold search."""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import canonical_form, canonical_graph
from .embed import find_induced_embedding
from .graph6 import encode_graph6
from .graphs import Graph
from .limits import DEFAULT_LIMITS, CapacityError, Limits
from .named import bull, cogem, cycle_graph, gem
from .threshold import is_threshold

__all__ = [
    "switch",
    "switching_class",
    "switching_class_graphs",
    "SwitchCertificate",
    "switch_to_threshold",
    "is_cograph",
    "is_switch_cograph",
    "has_cograph_switch",
]


def switch(g: Graph, s: int) -> Graph:
    """Toggle every pair with one endpoint in s and the other outside."""
    if s & ~g.full_mask:
        raise ValueError("switch set outside the graph")
    out = g.full_mask & ~s
    rows = []
    for v, row in enumerate(g.rows):
        flip = (out if s >> v & 1 else s) & ~(1 << v)
        rows.append(row ^ flip)
    return Graph(g.n, tuple(rows))


@dataclass(frozen=True)
class SwitchCertificate:
    set: int
    target: Graph


def switch_to_threshold(g: Graph, limits: Limits = DEFAULT_LIMITS) -> SwitchCertificate | None:
    """First switch set (ascending masks, vertex 0 excluded) giving a threshold graph."""
    if 1 << max(0, g.n - 1) > limits.coloring_budget:
        raise CapacityError(f"2^{g.n - 1} switch sets exceed budget {limits.coloring_budget}")
    for s in range(0, 1 << g.n, 2):
        target = switch(g, s)
        if is_threshold(target) is not None:
            return SwitchCertificate(s, target)
    return None


def switching_class(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[str, ...]:
    """Sorted canonical forms of all switches of g (vertex 0 kept outside s)."""
    forms = {canonical_form(switch(g, s), limits) for s in range(0, 1 << g.n, 2)}
    return tuple(sorted(forms))


def switching_class_graphs(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[Graph, ...]:
    """Canonical representative graphs of the switching class, sorted by form."""
    reps: dict[str, Graph] = {}
    for s in range(0, 1 << g.n, 2):
        canon = canonical_graph(switch(g, s), limits)
        reps.setdefault(encode_graph6(canon), canon)
    return tuple(reps[form] for form in sorted(reps))


_COGRAPH_SWITCH_PATTERNS: tuple[Graph, ...] | None = None


def is_switch_cograph(g: Graph) -> bool:
    """No induced C5, bull, gem, or cogem."""
    global _COGRAPH_SWITCH_PATTERNS
    if _COGRAPH_SWITCH_PATTERNS is None:
        _COGRAPH_SWITCH_PATTERNS = (cycle_graph(5), bull(), gem(), cogem())
    return all(
        find_induced_embedding(g, pattern) is None for pattern in _COGRAPH_SWITCH_PATTERNS
    )


def is_cograph(g: Graph) -> bool:
    """Every induced subgraph with >= 2 vertices splits under union or join."""
    stack = [g]
    while stack:
        h = stack.pop()
        if h.n == 1:
            continue
        parts = h.components()
        if len(parts) == 1:
            parts = h.complement().components()
            if len(parts) == 1:
                return False
        stack.extend(h.induced(p) for p in parts)
    return True


def has_cograph_switch(g: Graph, limits: Limits = DEFAULT_LIMITS) -> SwitchCertificate | None:
    """First switch of g that is a cograph, if any."""
    if 1 << max(0, g.n - 1) > limits.coloring_budget:
        raise CapacityError(f"2^{g.n - 1} switch sets exceed budget {limits.coloring_budget}")
    for s in range(0, 1 << g.n, 2):
        target = switch(g, s)
        if is_cograph(target):
            return SwitchCertificate(s, target)
    return None
