"""Verification suites: desk-scale machine checks that the recognizers agree.

Each suite exhaustively enumerates small graphs, runs two or more
independently implemented recognizers for the same class, and reports every
disagreement as a witness. A clean report for a suite is the machine
verification of the corresponding characterization at that scale.

Reports serialize to a versioned key-value text document that parses back
to an equal report (see to_text / from_text).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .canonical import canonical_form
from .catalogs import FAMILIES, load_catalog, validate_catalog
from .enumeration import EnumerationConfig, all_colored_graphs, all_graphs
from .graph6 import encode_graph6
from .graphs import Graph, is_distance_hereditary
from .kthreshold import (
    eliminate,
    general_dialect,
    is_good,
    is_k_threshold,
    is_restricted,
    is_special,
)
from .limits import DEFAULT_LIMITS, Limits
from .named import cycle_graph, disjoint_union, empty_graph, matching
from .obstructions import (
    find_minimal_colored_obstructions,
    find_minimal_obstructions,
    recognize_good_fis,
    recognize_partitioned_fis,
    recognize_special_fis,
    recognize_switch_cograph_fis,
    recognize_switch_threshold_fis,
    recognize_threshold_fis,
)
from .sequences import evaluate
from .switching import has_cograph_switch, switch_to_threshold, switching_class_graphs
from .threshold import build_threshold_tree, is_threshold

__all__ = [
    "SCHEMA",
    "SUITE_NAMES",
    "Witness",
    "VerificationReport",
    "run_suite",
]

SCHEMA = "threshkit-report/1"

ENUMERATION_COUNTS = (1, 2, 4, 11, 34, 156, 1044)


@dataclass(frozen=True)
class Witness:
    """One failing case: the graph, its coloring ("-" if none), the verdicts."""

    graph6: str
    colors: str
    detail: str

    def __post_init__(self) -> None:
        for piece in (self.graph6, self.colors, self.detail):
            if "\t" in piece or "\n" in piece:
                raise ValueError("witness fields may not contain tabs or newlines")


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    n_max: int
    counts: tuple[tuple[str, int], ...]
    witnesses: tuple[Witness, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.witnesses

    def count(self, key: str) -> int:
        for name, value in self.counts:
            if name == key:
                return value
        raise KeyError(key)

    def to_text(self) -> str:
        lines = [SCHEMA, f"suite {self.suite}", f"nmax {self.n_max}", f"elapsed {self.elapsed!r}"]
        for key, value in self.counts:
            lines.append(f"count {key} {value}")
        for w in self.witnesses:
            lines.append(f"witness {w.graph6}\t{w.colors}\t{w.detail}")
        lines.append("end")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> VerificationReport:
        lines = text.splitlines()
        if not lines or lines[0] != SCHEMA:
            raise ValueError(f"expected schema line {SCHEMA!r}")
        if not lines or lines[-1] != "end":
            raise ValueError("report must finish with an end line")
        suite = n_max = elapsed = None
        counts: list[tuple[str, int]] = []
        witnesses: list[Witness] = []
        for line in lines[1:-1]:
            head, _, rest = line.partition(" ")
            if head == "suite":
                suite = rest
            elif head == "nmax":
                n_max = int(rest)
            elif head == "elapsed":
                elapsed = float(rest)
            elif head == "count":
                key, _, value = rest.rpartition(" ")
                counts.append((key, int(value)))
            elif head == "witness":
                fields = rest.split("\t")
                if len(fields) != 3:
                    raise ValueError(f"witness line needs three fields: {line!r}")
                witnesses.append(Witness(*fields))
            else:
                raise ValueError(f"unknown report line {line!r}")
        if suite is None or n_max is None or elapsed is None:
            raise ValueError("missing suite, nmax or elapsed line")
        return cls(suite, n_max, tuple(counts), tuple(witnesses), elapsed)


class _Run:
    """Accumulates counters and witnesses while a suite executes."""

    def __init__(self, suite: str, n_max: int):
        self.suite = suite
        self.n_max = n_max
        self.counts: dict[str, int] = {}
        self.witnesses: list[tuple[str, Witness]] = []
        self.started = time.perf_counter()

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def set(self, key: str, value: int) -> None:
        self.counts[key] = value

    def witness(self, graph, detail: str) -> None:
        """graph may be a Graph, a ColoredGraph, or None for aggregate failures."""
        if graph is None:
            self.witnesses.append(("", Witness("-", "-", detail)))
            return
        if isinstance(graph, Graph):
            g, colors = graph, "-"
        else:
            g, colors = graph.graph, "".join("bw"[c] for c in graph.colors)
        self.witnesses.append((canonical_form(g), Witness(encode_graph6(g), colors, detail)))

    def report(self) -> VerificationReport:
        witnesses = tuple(w for _, w in sorted(self.witnesses, key=lambda p: (p[0], p[1].detail)))
        return VerificationReport(
            self.suite,
            self.n_max,
            tuple(sorted(self.counts.items())),
            witnesses,
            time.perf_counter() - self.started,
        )


def _verdict(flag: bool) -> str:
    return "member" if flag else "non-member"


def _agree(run: _Run, prefix: str, graph, verdicts: dict[str, bool]) -> None:
    values = set(verdicts.values())
    if len(values) == 1:
        run.bump(f"{prefix}.agree")
        if values.pop():
            run.bump(f"{prefix}.members")
    else:
        run.bump(f"{prefix}.disagree")
        detail = " ".join(f"{k}={_verdict(v)}" for k, v in sorted(verdicts.items()))
        run.witness(graph, f"{prefix}: {detail}")


def _check_discovery(run: _Run, prefix: str, found, expected_forms: dict[str, str], colored: bool) -> None:
    """Compare discovered minimal obstructions against a catalog, both ways."""
    from .canonical import canonical_colored_form

    form_of = canonical_colored_form if colored else canonical_form
    found_forms = {form_of(g): g for g in found}
    run.set(f"{prefix}.found", len(found_forms))
    run.set(f"{prefix}.expected", len(expected_forms))
    for form, g in sorted(found_forms.items()):
        if form not in expected_forms:
            run.bump(f"{prefix}.disagree")
            run.witness(g, f"{prefix}: uncatalogued minimal obstruction")
    for form, name in sorted(expected_forms.items()):
        if form not in found_forms:
            run.bump(f"{prefix}.disagree")
            run.witness(None, f"{prefix}: catalog entry {name} not rediscovered (form {form})")


def _graphs_upto(n_max: int, limits: Limits):
    for n in range(1, n_max + 1):
        for g in all_graphs(EnumerationConfig(n), limits):
            yield g


def suite_thresholds(n_max: int, limits: Limits) -> VerificationReport:
    """Greedy elimination vs the three-pattern FIS, plus certificate replay."""
    run = _Run("thresholds", n_max)
    for g in _graphs_upto(n_max, limits):
        run.bump("graphs.checked")
        cert = is_threshold(g)
        _agree(run, "threshold", g, {
            "elimination": cert is not None,
            "fis": recognize_threshold_fis(g).accepted,
        })
        if cert is not None:
            rebuilt = evaluate(build_threshold_tree(g))
            if rebuilt.graph != g:
                run.bump("threshold.replay.disagree")
                run.witness(g, "threshold: build tree does not evaluate back to the input")
    return run.report()


def suite_special(n_max: int, limits: Limits) -> VerificationReport:
    """Brute coloring search vs the eight-pattern FIS, plus rediscovery."""
    run = _Run("special", n_max)
    member = lambda g: is_special(g, limits) is not None
    for g in _graphs_upto(n_max, limits):
        run.bump("graphs.checked")
        _agree(run, "special", g, {
            "elimination": member(g),
            "fis": recognize_special_fis(g).accepted,
        })
    cat = load_catalog("special2t")
    expected = {canonical_form(e.graph): e.name for e in cat.entries if e.graph.n <= n_max}
    found = find_minimal_obstructions(member, n_max, limits)
    _check_discovery(run, "special.obstructions", found, expected, colored=False)
    return run.report()


def suite_good(n_max: int, limits: Limits) -> VerificationReport:
    """Neighborhood-shape check vs the five-pattern FIS, plus rediscovery."""
    run = _Run("good", n_max)
    for g in _graphs_upto(n_max, limits):
        run.bump("graphs.checked")
        _agree(run, "good", g, {
            "shape": is_good(g),
            "fis": recognize_good_fis(g).accepted,
        })
    cat = load_catalog("good")
    expected = {canonical_form(e.graph): e.name for e in cat.entries if e.graph.n <= n_max}
    found = find_minimal_obstructions(is_good, n_max, limits)
    _check_discovery(run, "good.obstructions", found, expected, colored=False)
    return run.report()


def suite_partitioned(n_max: int, limits: Limits) -> VerificationReport:
    """Colored elimination vs the colored FIS on every 2-colored graph."""
    run = _Run("partitioned", n_max)
    dialect = general_dialect(2)
    member = lambda cg: eliminate(cg, dialect) is not None
    for n in range(1, n_max + 1):
        for cg in all_colored_graphs(n, limits):
            run.bump("graphs.checked")
            _agree(run, "partitioned", cg, {
                "elimination": member(cg),
                "fis": recognize_partitioned_fis(cg).accepted,
            })
    from .canonical import canonical_colored_form

    cat = load_catalog("partitioned2t")
    expected = {
        canonical_colored_form(e.colored_graph): e.name
        for e in cat.entries
        if e.graph.n <= n_max
    }
    found = find_minimal_colored_obstructions(member, n_max, limits)
    _check_discovery(run, "partitioned.obstructions", found, expected, colored=True)
    return run.report()


def suite_switching(n_max: int, limits: Limits) -> VerificationReport:
    """Switch search vs restricted elimination vs FIS, and the cograph analog."""
    run = _Run("switching", n_max)
    for g in _graphs_upto(n_max, limits):
        run.bump("graphs.checked")
        _agree(run, "switch_threshold", g, {
            "switch_search": switch_to_threshold(g, limits) is not None,
            "elimination": is_restricted(g, limits) is not None,
            "fis": recognize_switch_threshold_fis(g).accepted,
        })
        _agree(run, "switch_cograph", g, {
            "switch_search": has_cograph_switch(g, limits) is not None,
            "fis": recognize_switch_cograph_fis(g).accepted,
        })
    return run.report()


def _catalog_members(limits: Limits):
    dialect = general_dialect(2)
    return {
        "threshold": (lambda g: is_threshold(g) is not None, False),
        "special2t": (lambda g: is_special(g, limits) is not None, False),
        "good": (is_good, False),
        "two_threshold_listed": (lambda g: is_k_threshold(g, 2, limits) is not None, False),
        "partitioned2t": (lambda cg: eliminate(cg, dialect) is not None, True),
        "switch_threshold": (lambda g: switch_to_threshold(g, limits) is not None, False),
        "switch_cograph": (lambda g: has_cograph_switch(g, limits) is not None, False),
    }


def suite_catalogs(n_max: int, limits: Limits) -> VerificationReport:
    """validate_catalog for every shipped family, plus the switching-class cross-check."""
    run = _Run("catalogs", n_max)
    members = _catalog_members(limits)
    for family in FAMILIES:
        cat = load_catalog(family)
        member, colored = members[family]
        run.set(f"catalog.{family}.entries", len(cat.entries))
        problems = validate_catalog(cat, member, colored=colored)
        run.set(f"catalog.{family}.problems", len(problems))
        for p in problems:
            run.witness(p.entry.colored_graph if colored else p.entry.graph,
                        f"catalog.{family}: {p.entry.name} {p.condition}: {p.detail}")
    # The switch-threshold patterns are also computable from first principles:
    # the switching classes of 3K2, C5 and C4+2K1.
    seeds = [matching(3), cycle_graph(5), disjoint_union(cycle_graph(4), empty_graph(2))]
    computed = set()
    for seed in seeds:
        computed.update(canonical_form(h) for h in switching_class_graphs(seed, limits))
    catalogued = {canonical_form(e.graph) for e in load_catalog("switch_threshold").entries}
    run.set("catalog.switch_threshold.computed", len(computed))
    if computed != catalogued:
        run.witness(None, "catalog.switch_threshold: computed switching classes differ from catalog")
    return run.report()


def suite_counts(n_max: int, limits: Limits) -> VerificationReport:
    """Enumeration counts and the 2^(n-1) threshold count, two ways each."""
    run = _Run("counts", n_max)
    for n in range(1, n_max + 1):
        got = len(all_graphs(EnumerationConfig(n), limits))
        run.set(f"enumeration.n{n}", got)
        if n <= len(ENUMERATION_COUNTS) and got != ENUMERATION_COUNTS[n - 1]:
            run.witness(None, f"counts: enumeration at n={n} gave {got}, expected {ENUMERATION_COUNTS[n - 1]}")
    # Unlabeled threshold graphs: every {add, joinall} word gives one, distinct
    # words give non-isomorphic graphs, so the count is exactly 2^(n-1). The
    # generator side is independent of the recognizer.
    from itertools import product

    from .sequences import ADD, JOIN_ALL, BuildSequence, Step

    for n in range(1, min(n_max + 1, 8) + 1):
        if n == 1:
            forms = {canonical_form(evaluate(BuildSequence(1, (Step(0, ADD),))).graph)}
        else:
            forms = set()
            for word in product((ADD, JOIN_ALL), repeat=n - 1):
                steps = (Step(0, ADD),) + tuple(Step(0, op) for op in word)
                forms.add(canonical_form(evaluate(BuildSequence(1, steps)).graph, limits))
        run.set(f"threshold.generated.n{n}", len(forms))
        if len(forms) != 1 << (n - 1):
            run.witness(None, f"counts: generated threshold forms at n={n} gave {len(forms)}")
        if n <= n_max:
            counted = sum(
                1 for g in all_graphs(EnumerationConfig(n), limits) if is_threshold(g) is not None
            )
            run.set(f"threshold.recognized.n{n}", counted)
            if counted != 1 << (n - 1):
                run.witness(None, f"counts: recognized threshold count at n={n} gave {counted}")
    return run.report()


_SUITES = {
    "thresholds": (suite_thresholds, 7),
    "special": (suite_special, 7),
    "good": (suite_good, 7),
    "partitioned": (suite_partitioned, 6),
    "switching": (suite_switching, 7),
    "catalogs": (suite_catalogs, 0),
    "counts": (suite_counts, 7),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, n_max: int | None = None, limits: Limits = DEFAULT_LIMITS) -> VerificationReport:
    """Run one named suite; n_max None picks the suite's default bound."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    fn, default_n = _SUITES[name]
    return fn(default_n if n_max is None else n_max, limits)
