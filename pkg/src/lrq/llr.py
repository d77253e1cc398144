"""Left-bounded longest repeats (LLRs).

The LLR at position i is the longest substring starting exactly at i that
occurs somewhere else in the text too.  Its length falls straight out of the
index: the suffix at i shares its longest repeated prefix with one of the two
rank-adjacent suffixes, so the length is max(lcp[rank[i]], lcp[rank[i] + 1]).
Every longest repeat covering any position starts as some position's LLR,
which is what makes these tables the common substrate for the query modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .suffix_index import TextIndex

__all__ = [
    "ABSENT",
    "LlrTable",
    "Repeat",
    "llr_at",
    "llr_table",
    "sort_llr_desc",
]


class Repeat(NamedTuple):
    """One repeat occurrence as (start, length), 1-indexed and inclusive."""

    start: int
    length: int

    @property
    def absent(self) -> bool:
        return self.length == 0

    @property
    def end(self) -> int:
        """1-indexed inclusive right boundary."""
        return self.start + self.length - 1


# Canonical "no repeat here" marker.
ABSENT = Repeat(-1, 0)


@dataclass(frozen=True)
class LlrTable:
    """Per-position LLR entries.

    While ``is_sorted`` is False, ``entries[i - 1]`` belongs to position i.
    After sort_llr_desc the entries are in stable descending-length order and
    the positional correspondence is gone.
    """

    entries: tuple[Repeat, ...]
    is_sorted: bool = False

    def __len__(self) -> int:
        return len(self.entries)


def llr_at(index: TextIndex, i: int) -> Repeat:
    """Longest repeat starting exactly at position ``i``, or ABSENT."""
    index.check_position(i)
    r = index.rank[i]
    length = max(index.lcp[r], index.lcp[r + 1])
    return Repeat(i, length) if length > 0 else ABSENT


def llr_table(index: TextIndex) -> LlrTable:
    """LLR entries for every position, in position order."""
    entries = tuple(
        Repeat(i, length) if length else ABSENT
        for i, length in enumerate(_llr_lengths(index), start=1)
    )
    return LlrTable(entries)


def sort_llr_desc(table: LlrTable) -> LlrTable:
    """Stable descending-length reordering of an unsorted LLR table.

    Stability is load-bearing: entries of equal length stay in ascending
    start order, which is what lets the global sweep hand every position its
    leftmost longest repeat without comparing starts.  Counting sort keeps
    this O(n + max length).
    """
    order = _stable_desc_order([rep.length for rep in table.entries])
    return LlrTable(tuple(table.entries[j] for j in order), is_sorted=True)


def _llr_lengths(index: TextIndex) -> list[int]:
    """LLR length for each position 1..n as a plain list."""
    if index.n == 0:
        return []
    lcp = np.asarray(index.lcp, dtype=np.int64)
    rank = np.asarray(index.rank[1:], dtype=np.int64)
    return np.maximum(lcp[rank], lcp[rank + 1]).tolist()


def _stable_desc_order(lengths: list[int]) -> list[int]:
    """Indices of ``lengths`` sorted by descending value, ties in input order.

    A hand-rolled counting sort: two passes over the values plus one over the
    possible lengths, never a comparison sort, so the global query path keeps
    its linear bound.
    """
    n = len(lengths)
    if n == 0:
        return []
    top = max(lengths)
    counts = [0] * (top + 1)
    for value in lengths:
        counts[value] += 1
    heads = [0] * (top + 1)
    total = 0
    for value in range(top, -1, -1):
        heads[value] = total
        total += counts[value]
    order = [0] * n
    for idx, value in enumerate(lengths):
        order[heads[value]] = idx
        heads[value] += 1
    return order
