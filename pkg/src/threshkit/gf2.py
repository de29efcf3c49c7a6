"""Rank over GF(2) for matrices given as int bitmask rows."""

from __future__ import annotations

from typing import Iterable

__all__ = ["gf2_rank"]


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of the 0/1 matrix whose rows are the bits of the given ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                rank += 1
                break
            row ^= pivot
    return rank
