"""Longest-repeat queries anchored at a single position.

Both operations scan candidate start positions i = k, k-1, ... and ask for
the LLR at each: a repeat covering k must start at or before k, and whatever
covers k is at most the LLR of its own start position.  The scan stops early
once no remaining start could still reach k, which caps it at the length of
the answer plus one extra probe.
"""

from __future__ import annotations

from .llr import ABSENT, Repeat, llr_at
from .suffix_index import TextIndex

__all__ = ["all_lr_at", "leftmost_lr_at"]


def leftmost_lr_at(index: TextIndex, k: int) -> Repeat:
    """The longest repeat covering position ``k``; leftmost start on ties.

    Returns ABSENT when the character at ``k`` occurs nowhere else.
    """
    index.check_position(k)
    best = ABSENT
    for i in range(k, 0, -1):
        rep = llr_at(index, i)
        length = rep.length
        if length == 0 or i + length - 1 < k:
            break
        # >= so a later (smaller) start wins ties: that is the leftmost
        if length >= best.length:
            best = rep
    return best


def all_lr_at(index: TextIndex, k: int) -> list[Repeat]:
    """Every longest repeat covering position ``k``, descending start order.

    All results share the maximal length; the list is empty iff no repeat
    covers ``k``.  A first scan finds the length, a second collects the
    starts, both bounded the same way as leftmost_lr_at.
    """
    index.check_position(k)
    best_length = 0
    for i in range(k, 0, -1):
        rep = llr_at(index, i)
        if rep.length == 0 or i + rep.length - 1 < k:
            break
        if rep.length > best_length:
            best_length = rep.length
    if best_length == 0:
        return []
    results = []
    for i in range(k, 0, -1):
        rep = llr_at(index, i)
        if rep.length == 0 or i + rep.length - 1 < k:
            break
        if rep.length == best_length:
            results.append(rep)
    return results
