"""Constructors for the small named graphs used throughout the catalogs."""

from __future__ import annotations

from .graphs import Graph, disjoint_union, join

__all__ = [
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "matching",
    "cone",
    "gem",
    "cogem",
    "house",
    "bull",
    "butterfly",
    "net",
    "diamond",
    "octahedron",
    "wheel4_pendant",
    "diamond_pendants",
    "named_graphs",
]


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def matching(k: int) -> Graph:
    """k disjoint edges."""
    return Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def cone(g: Graph) -> Graph:
    """g plus one universal vertex, added last."""
    return join(g, empty_graph(1))


def gem() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def cogem() -> Graph:
    return Graph.from_edges(5, [(0, 2), (0, 3), (1, 3)])


def house() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])


def bull() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def butterfly() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def net() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def octahedron() -> Graph:
    pairs = {(0, 1), (2, 3), (4, 5)}
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) not in pairs]
    return Graph.from_edges(6, edges)


def wheel4_pendant() -> Graph:
    """4-wheel plus a pendant vertex attached to the hub."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(v, 4) for v in range(4)]
    edges.append((4, 5))
    return Graph.from_edges(6, edges)


def diamond_pendants() -> Graph:
    """Diamond plus a pendant vertex on each vertex of degree three."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (1, 5)])


def named_graphs() -> dict[str, Graph]:
    """Registry used by catalog tooling and tests."""
    reg = {
        "2k2": matching(2),
        "3k2": matching(3),
        "c4": cycle_graph(4),
        "c5": cycle_graph(5),
        "c6": cycle_graph(6),
        "c7": cycle_graph(7),
        "p4": path_graph(4),
        "p7": path_graph(7),
        "gem": gem(),
        "cogem": cogem(),
        "house": house(),
        "bull": bull(),
        "butterfly": butterfly(),
        "net": net(),
        "diamond": diamond(),
        "octahedron": octahedron(),
        "wheel4-pendant": wheel4_pendant(),
        "diamond-pendants": diamond_pendants(),
        "2c4": disjoint_union(cycle_graph(4), cycle_graph(4)),
        "2p4": disjoint_union(path_graph(4), path_graph(4)),
        "c4-p4": disjoint_union(cycle_graph(4), path_graph(4)),
        "c4-2k1": disjoint_union(cycle_graph(4), empty_graph(2)),
    }
    return reg
