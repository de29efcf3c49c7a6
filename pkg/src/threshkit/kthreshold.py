"""Colored elimination and recognizers for the k-threshold dialects."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import ColoredGraph, Graph, bits
from .limits import DEFAULT_LIMITS, CapacityError, Limits
from .sequences import ADD, BLACK, JOIN_ALL, WHITE, BuildSequence, Op, Step, join_color
from .threshold import is_threshold

__all__ = [
    "Dialect",
    "general_dialect",
    "SPECIAL",
    "RESTRICTED",
    "EXTENDED",
    "eliminate",
    "is_k_threshold",
    "is_special",
    "is_restricted",
    "is_extended",
    "neighborhood_shape",
    "is_good",
]


@dataclass(frozen=True)
class Dialect:
    """An allowed operator set, listed in elimination preference order."""

    name: str
    k: int
    ops: tuple[Op, ...]


def general_dialect(k: int) -> Dialect:
    if k < 1:
        raise ValueError("at least one color")
    return Dialect("general", k, (ADD,) + tuple(join_color(i) for i in range(k)))


SPECIAL = Dialect("special", 2, (ADD, join_color(WHITE)))
RESTRICTED = Dialect("restricted", 2, (join_color(BLACK), join_color(WHITE)))
EXTENDED = Dialect("extended", 2, (ADD, join_color(BLACK), join_color(WHITE), JOIN_ALL))


def eliminate(cg: ColoredGraph, dialect: Dialect) -> BuildSequence | None:
    """Greedy reverse construction with the dialect's operators.

    Removes the lowest-index vertex eligible for some allowed operator,
    preferring earlier operators in the dialect's list. The class property is
    hereditary, so any eligible removal is safe; failure to find one is a
    correct rejection. The returned sequence evaluates back to cg exactly.
    """
    g, colors = cg.graph, cg.colors
    if any(c >= dialect.k for c in colors):
        raise ValueError(f"colors exceed dialect color count {dialect.k}")
    by_color = [0] * dialect.k
    for v, c in enumerate(colors):
        by_color[c] |= 1 << v
    alive = g.full_mask
    steps_rev: list[Step] = []
    order_rev: list[int] = []
    while alive.bit_count() > 1:
        pick = None
        for x in bits(alive):
            rest = alive ^ (1 << x)
            nb = g.rows[x] & alive
            for op in dialect.ops:
                if op.kind == "add":
                    ok = nb == 0
                elif op.kind == "join_all":
                    ok = nb == rest
                else:
                    ok = nb == by_color[op.color] & rest
                if ok:
                    pick = (x, op)
                    break
            if pick:
                break
        if pick is None:
            return None
        x, op = pick
        steps_rev.append(Step(colors[x], op))
        order_rev.append(x)
        alive ^= 1 << x
    seed = alive.bit_length() - 1
    steps_rev.append(Step(colors[seed], ADD))
    order_rev.append(seed)
    return BuildSequence(dialect.k, tuple(reversed(steps_rev)), tuple(reversed(order_rev)))


def _check_budget(n: int, k: int, limits: Limits) -> None:
    if n > limits.elimination_max_n:
        raise CapacityError(f"elimination on {n} vertices exceeds bound {limits.elimination_max_n}")
    if k ** max(0, n - 1) > limits.coloring_budget:
        raise CapacityError(f"{k}^{n - 1} colorings exceed budget {limits.coloring_budget}")


def _prefix_colorings(n: int, k: int):
    """Base-k counter order, vertex 0 fixed to color 0, colors used in prefix."""
    for tail in product(range(k), repeat=n - 1):
        coloring = (0,) + tail
        top = max(coloring)
        if set(coloring) == set(range(top + 1)):
            yield coloring


def is_k_threshold(
    g: Graph, k: int, limits: Limits = DEFAULT_LIMITS
) -> tuple[tuple[int, ...], BuildSequence] | None:
    """Search colorings modulo color permutation, eliminate with General(k)."""
    _check_budget(g.n, k, limits)
    dialect = general_dialect(k)
    for coloring in _prefix_colorings(g.n, k):
        seq = eliminate(ColoredGraph(g, coloring), dialect)
        if seq is not None:
            return coloring, seq
    return None


def _search_two_colored(
    g: Graph, dialect: Dialect, limits: Limits
) -> tuple[tuple[int, ...], BuildSequence] | None:
    _check_budget(g.n + 1, 2, limits)  # all 2^n colorings, no symmetry break
    for coloring in product((BLACK, WHITE), repeat=g.n):
        seq = eliminate(ColoredGraph(g, coloring), dialect)
        if seq is not None:
            return coloring, seq
    return None


def is_special(g: Graph, limits: Limits = DEFAULT_LIMITS):
    return _search_two_colored(g, SPECIAL, limits)


def is_restricted(g: Graph, limits: Limits = DEFAULT_LIMITS):
    return _search_two_colored(g, RESTRICTED, limits)


def is_extended(g: Graph, limits: Limits = DEFAULT_LIMITS):
    return _search_two_colored(g, EXTENDED, limits)


EMPTY = "empty"
THRESHOLD = "threshold"
UNION_OF_TWO = "union_of_two_thresholds"
JOIN_OF_TWO = "join_of_two_thresholds"
OTHER = "other"


def _two_block_split(h: Graph, parts: list[int]) -> bool:
    """Can parts be grouped into two blocks, each inducing a threshold graph?

    Works for components (blocks are disjoint unions) and co-components
    (blocks are joins). Either way a threshold block holds at most one part
    with >= 2 vertices: two unioned nontrivial components contain a 2K2, two
    joined nontrivial co-components contain a C4. Singleton parts are
    isolated or universal in their block and never hurt, so the test reduces
    to: at least two parts, at most two nontrivial parts, every nontrivial
    part inducing a threshold graph.
    """
    if len(parts) < 2:
        return False
    nontrivial = [p for p in parts if p.bit_count() >= 2]
    if len(nontrivial) > 2:
        return False
    return all(is_threshold(h.induced(p)) is not None for p in nontrivial)


def neighborhood_shape(g: Graph, x: int) -> str:
    """Classify the subgraph induced by N(x); first matching shape wins."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} outside 0..{g.n - 1}")
    nb = g.rows[x]
    if nb == 0:
        return EMPTY
    h = g.induced(nb)
    if is_threshold(h) is not None:
        return THRESHOLD
    if _two_block_split(h, h.components()):
        return UNION_OF_TWO
    # join blocks are unions of co-components; between co-components all
    # edges are present, so extra singleton co-components act as universal
    # vertices and the same reduction applies
    if _two_block_split(h, h.complement().components()):
        return JOIN_OF_TWO
    return OTHER


def is_good(g: Graph) -> bool:
    return all(neighborhood_shape(g, x) != OTHER for x in range(g.n))
