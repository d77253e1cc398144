"""Definition-level oracles for the repeat queries.

Everything here answers straight from the text with substring scans; no
suffix arrays, no LCP, no shared code with the indexed solvers.  That makes
these functions the independent side of every differential test, and far too
slow for real use: keep inputs in the hundreds of bytes.
"""

from __future__ import annotations

from .llr import ABSENT, Repeat
from .lr_global import LrTable
from .suffix_index import as_text

__all__ = ["naive_all_lr", "naive_is_repeat", "naive_lr_at"]


def naive_is_repeat(text: str | bytes, start: int, length: int) -> bool:
    """Does S[start .. start+length-1] occur at least twice in the text?

    Occurrences may overlap.  ``start`` is 1-indexed; the substring must lie
    within the text.  Zero-length substrings are defined not to repeat.
    """
    data = as_text(text)
    n = len(data)
    if not 1 <= start <= n:
        raise ValueError(f"start {start} out of range 1..{n}")
    if length < 0 or start + length - 1 > n:
        raise ValueError(f"substring [{start}, {start + length - 1}] exceeds text of length {n}")
    if length == 0:
        return False
    sub = data[start - 1 : start - 1 + length]
    first = data.find(sub)
    return data.find(sub, first + 1) != -1


def naive_lr_at(text: str | bytes, k: int) -> list[Repeat]:
    """All longest repeats covering position ``k``, ascending start order.

    Considers every start i <= k in turn and finds the longest repeated
    substring from i that still covers k.  Probing lengths below the current
    maximum is pointless because a prefix of a repeat is itself a repeat, so
    each start only probes upward from the best length so far; that prunes
    the scan without leaning on any index machinery.  Empty iff nothing
    covering ``k`` repeats.
    """
    data = as_text(text)
    n = len(data)
    if not 1 <= k <= n:
        raise ValueError(f"position {k} out of range 1..{n}")
    best = 0
    for i in range(k, 0, -1):
        length = max(best + 1, k - i + 1)
        while i + length - 1 <= n and _occurs_twice(data, i, length):
            best = length
            length += 1
    if best == 0:
        return []
    results = []
    for i in range(k, k - best, -1):
        if i >= 1 and i + best - 1 <= n and _occurs_twice(data, i, best):
            results.append(Repeat(i, best))
    results.reverse()
    return results


def naive_all_lr(text: str | bytes) -> LrTable:
    """Leftmost longest repeat for every position, built one scan at a time."""
    data = as_text(text)
    entries = []
    for k in range(1, len(data) + 1):
        covering = naive_lr_at(data, k)
        entries.append(covering[0] if covering else ABSENT)
    return LrTable(tuple(entries))


def _occurs_twice(data: bytes, start: int, length: int) -> bool:
    sub = data[start - 1 : start - 1 + length]
    first = data.find(sub)
    return data.find(sub, first + 1) != -1
