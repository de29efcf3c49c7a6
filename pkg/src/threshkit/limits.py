"""Capacity limits for the exact algorithms, overridable via environment."""

from __future__ import annotations

import os
from dataclasses import dataclass


class CapacityError(Exception):
    """A requested computation exceeds the configured exact-search limits."""


@dataclass(frozen=True)
class Limits:
    """Bounds for the exhaustive parts of the toolkit.

    canonical_max_n: largest graph the canonical-form search will accept
    elimination_max_n: largest graph the coloring searches will eliminate
    coloring_budget: maximum number of colorings a search may enumerate
    enumeration_max_n: largest size the isomorph-free generator will produce
    """

    canonical_max_n: int = 10
    elimination_max_n: int = 20
    coloring_budget: int = 1 << 20
    enumeration_max_n: int = 8

    @classmethod
    def from_env(cls) -> Limits:
        def pick(name: str, default: int) -> int:
            raw = os.environ.get(name)
            return default if raw is None else int(raw)

        return cls(
            canonical_max_n=pick("THRESHKIT_CANONICAL_MAX_N", cls.canonical_max_n),
            elimination_max_n=pick("THRESHKIT_ELIMINATION_MAX_N", cls.elimination_max_n),
            coloring_budget=pick("THRESHKIT_COLORING_BUDGET", cls.coloring_budget),
            enumeration_max_n=pick("THRESHKIT_ENUMERATION_MAX_N", cls.enumeration_max_n),
        )


DEFAULT_LIMITS = Limits.from_env()
