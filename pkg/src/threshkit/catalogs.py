"""Obstruction catalogs shipped as data files.

Each family of graphs handled by this package has a catalog of minimal
obstructions: graphs (optionally colored) that are not in the family but
whose every one-vertex deletion is. Catalogs are loaded from TSV files
shipped with the package, one entry per line:

    <name> TAB <graph6> TAB <colorstring or -> TAB <source>

validate_catalog replays the defining properties against a brute-force
membership predicate and is the safety net against transcription errors
in the data files.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional, Union

from .graphs import Graph, ColoredGraph
from .graph6 import decode_graph6, parse_color_string
from .canonical import canonical_form, canonical_colored_form

FAMILIES = (
    "threshold",
    "special2t",
    "good",
    "two_threshold_listed",
    "partitioned2t",
    "switch_threshold",
    "switch_cograph",
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    coloring: Optional[tuple[int, ...]]
    source: str

    def __post_init__(self):
        if self.coloring is not None and len(self.coloring) != self.graph.n:
            raise ValueError(f"{self.name}: coloring length != n")

    @property
    def colored_graph(self) -> ColoredGraph:
        colors = self.coloring if self.coloring is not None else (0,) * self.graph.n
        return ColoredGraph(self.graph, colors)


@dataclass(frozen=True)
class Catalog:
    family: str
    entries: tuple[CatalogEntry, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def lookup(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def _parse_entry(line: str) -> CatalogEntry:
    parts = line.rstrip("\n").split("\t")
    if len(parts) != 4:
        raise ValueError(f"malformed catalog line: {line!r}")
    name, g6, colors, source = parts
    g = decode_graph6(g6)
    coloring = None if colors == "-" else parse_color_string(colors)
    return CatalogEntry(name, g, coloring, source)


@lru_cache(maxsize=None)
def load_catalog(family: str) -> Catalog:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    text = resources.files("threshkit.data").joinpath(f"{family}.tsv").read_text()
    entries = tuple(_parse_entry(line) for line in text.splitlines() if line.strip())
    return Catalog(family, entries)


Member = Callable[[Union[Graph, ColoredGraph]], bool]


@dataclass(frozen=True)
class CatalogProblem:
    entry: str
    condition: str
    detail: str


def validate_catalog(cat: Catalog, member: Member, colored: bool = False) -> list[CatalogProblem]:
    """Check every entry against the family's membership predicate.

    Conditions per entry: (a) the entry itself is rejected, (b) every
    one-vertex deletion is accepted, (c) no two entries are isomorphic
    (color-preservingly when colored). Returns the list of violations;
    an empty list means the catalog is sound.
    """
    problems = []
    seen: dict[str, str] = {}
    for e in cat.entries:
        obj = e.colored_graph if colored else e.graph
        form = canonical_colored_form(obj) if colored else canonical_form(e.graph)
        if form in seen:
            problems.append(CatalogProblem(e.name, "distinct", f"isomorphic to {seen[form]}"))
        else:
            seen[form] = e.name
        if member(obj):
            problems.append(CatalogProblem(e.name, "rejected", "entry accepted by recognizer"))
            continue
        for v in range(e.graph.n):
            sub = obj.delete_vertex(v)
            if not member(sub):
                problems.append(
                    CatalogProblem(e.name, "minimal", f"still rejected after deleting vertex {v}"))
                break
    return problems
