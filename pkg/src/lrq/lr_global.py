"""Leftmost longest repeat for every position of the text.

Both solvers walk the LLR table in stable descending-length order and hand
each entry to the positions it covers that nothing longer has claimed yet.
Stability of the sort means the first entry to claim a position is also the
leftmost among the longest, so no start comparison is ever needed.

all_lr_reference keeps per-position flags and rescans each entry's span, which
is quadratic but obviously right.  all_lr_fast gets the same answers in O(n)
total with two bookkeeping arrays:

  ptr[k]   -1 until position k is claimed, afterwards the id of the covered
           run ("bucket") k belongs to; written exactly once per position.
  next[b]  for bucket b, a position at or past the bucket's right edge; when
           an entry's span starts inside b, next[b] is exactly the span's
           first unclaimed position (or lies past its right boundary when the
           span is fully claimed).  Values only ever grow.

An entry's unclaimed positions always form one contiguous gap, so the sweep
jumps straight to the gap via next, claims it left to right, and then updates
the two arrays by whichever of the run-merge cases below applies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .llr import ABSENT, Repeat, _llr_lengths, _stable_desc_order
from .suffix_index import TextIndex

__all__ = [
    "InvariantViolation",
    "LrTable",
    "SweepStats",
    "TwoTable",
    "all_lr_fast",
    "all_lr_reference",
    "audit_all_lr_fast",
    "two_table_update",
]


@dataclass(frozen=True)
class LrTable:
    """``entries[k - 1]`` is the leftmost longest repeat covering position k."""

    entries: tuple[Repeat, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, k: int) -> Repeat:
        """1-indexed accessor."""
        if not 1 <= k <= len(self.entries):
            raise ValueError(f"position {k} out of range 1..{len(self.entries)}")
        return self.entries[k - 1]


@dataclass
class TwoTable:
    """The ptr/next bookkeeping pair used by the fast sweep.

    Both lists carry the unused slot 0 like every other positional array
    here.  Bucket ids are the 1-based ranks of the sorted-table entries that
    opened them, so ptr and next can share one index space.
    """

    ptr: list[int]
    next: list[int]

    @classmethod
    def fresh(cls, n: int) -> "TwoTable":
        """All-clear state for a text of length n: every entry -1."""
        return cls([-1] * (n + 1), [-1] * (n + 1))

    @property
    def n(self) -> int:
        return len(self.ptr) - 1


class InvariantViolation(AssertionError):
    """A bookkeeping invariant failed during an audited sweep."""


@dataclass
class SweepStats:
    """Write counters collected by an audited sweep."""

    ptr_writes: int = 0
    next_writes: int = 0
    lr_writes: int = 0


def two_table_update(table: TwoTable, i: int, left: int, right: int) -> None:
    """Fold span [left, right] of sorted-table entry ``i`` into the buckets.

    Called after the sweep has claimed the span's gap, with ptr/next still
    describing the state from before this entry.  Exactly one of the cases
    applies; they are ordered so each test may assume the earlier ones
    failed.  Only the newly claimed positions get ptr written, so every
    position is written at most once over a whole sweep, and every next
    update moves a bucket's frontier strictly right.
    """
    ptr, nxt, n = table.ptr, table.next, table.n
    ptr_left, ptr_right = ptr[left], ptr[right]
    left_clear = left == 1 or ptr[left - 1] == -1
    right_clear = right == n or ptr[right + 1] == -1
    if ptr_left == -1 and ptr_right == -1 and left_clear and right_clear:
        # isolated span: open a new bucket under this entry's id
        for j in range(left, right + 1):
            ptr[j] = i
        nxt[i] = right + 1
    elif ptr_left == -1 and not left_clear and ptr_right == -1 and right_clear:
        # span sits flush against a bucket on its left: extend that bucket
        b = ptr[left - 1]
        for j in range(left, right + 1):
            ptr[j] = b
        nxt[b] = right + 1
    elif ptr_left != -1 and ptr_right == -1 and right_clear:
        # span starts inside a bucket and sticks out right: grow the bucket
        b = ptr_left
        for j in range(nxt[b], right + 1):
            ptr[j] = b
        nxt[b] = right + 1
    elif ptr_right == -1 and not right_clear and ptr_left == -1 and left_clear:
        # span sits flush against a bucket on its right: grow it leftward;
        # that bucket's frontier is beyond it and does not move
        b = ptr[right + 1]
        for j in range(left, right + 1):
            ptr[j] = b
    elif ptr_right != -1 and ptr_left == -1 and left_clear:
        # span ends inside a bucket: claim the uncovered head, frontier stays
        b = ptr_right
        j = left
        while ptr[j] == -1:
            ptr[j] = b
            j += 1
    elif ptr_left != -1 and nxt[ptr_left] > right:
        # span fully inside one covered run: nothing changed
        pass
    else:
        # span bridges two covered runs: fill the gap between them and make
        # the left run's frontier take over the right run's
        if ptr_left == -1:
            j = left
            b = ptr[left - 1]
        else:
            j = nxt[ptr_left]
            b = ptr_left
        while ptr[j] == -1:
            ptr[j] = b
            j += 1
        nxt[b] = nxt[ptr[j]]


def all_lr_reference(index: TextIndex) -> LrTable:
    """Quadratic solver: same output as all_lr_fast, minimal bookkeeping.

    Scans every sorted entry's whole span against per-position flags.  Kept
    both as executable documentation of the sweep and as a mid-scale
    differential check for the fast path.
    """
    from .llr import llr_table, sort_llr_desc

    n = index.n
    table = sort_llr_desc(llr_table(index))
    lrs: list[Repeat] = [ABSENT] * (n + 1)
    claimed = bytearray(n + 1)
    count = 0
    for rep in table.entries:
        if count == n or rep.length == 0:
            break
        gap = [k for k in range(rep.start, rep.start + rep.length) if not claimed[k]]
        for k in gap:
            lrs[k] = rep
            claimed[k] = 1
        count += len(gap)
    return LrTable(tuple(lrs[1:]))


def all_lr_fast(index: TextIndex, *, audit: bool = False) -> LrTable:
    """Leftmost longest repeat for every position in O(n) total time.

    With ``audit=True`` the sweep additionally verifies its bookkeeping
    invariants after every step (quadratic, for tests and debugging) and
    raises InvariantViolation on the first breach.
    """
    table, _ = _sweep(index, _Auditor(index.n) if audit else None)
    return table


def audit_all_lr_fast(index: TextIndex) -> tuple[LrTable, SweepStats]:
    """Audited sweep that also returns the collected write counters."""
    auditor = _Auditor(index.n)
    table, stats = _sweep(index, auditor)
    assert stats is not None
    return table, stats


def _sweep(index: TextIndex, auditor: "_Auditor | None") -> tuple[LrTable, SweepStats | None]:
    n = index.n
    if n == 0:
        return LrTable(()), auditor.stats if auditor else None
    lengths = _llr_lengths(index)
    order = _stable_desc_order(lengths)
    table = TwoTable.fresh(n)
    ptr, nxt = table.ptr, table.next
    lrs: list[Repeat] = [ABSENT] * (n + 1)
    count = 0
    for t, idx in enumerate(order):
        length = lengths[idx]
        if count == n or length == 0:
            break
        left = idx + 1
        right = left + length - 1
        if auditor is not None:
            auditor.check_loop_top(table, left, right)
        p = ptr[left]
        first = left if p == -1 else nxt[p]
        if first > right:
            # span fully claimed; by the frontier invariant no update needed
            continue
        rep = Repeat(left, length)
        j = first
        while j <= right and ptr[j] == -1:
            lrs[j] = rep
            count += 1
            j += 1
        if auditor is not None:
            auditor.check_gap(first, j, right)
            auditor.checked_update(table, t + 1, left, right)
        else:
            two_table_update(table, t + 1, left, right)
    if auditor is not None:
        auditor.finish()
    return LrTable(tuple(lrs[1:])), auditor.stats if auditor else None


class _Auditor:
    """Shadow verification for the fast sweep; O(n) work per entry.

    Keeps its own claimed-position flags and checks, at every step, that ptr
    marks exactly the claimed positions, that the frontier invariant holds
    for the entry about to be processed, that each entry's unclaimed
    positions are contiguous, that ptr entries are written at most once,
    that next entries only grow, and finally that total writes stay within
    the linear bounds.
    """

    def __init__(self, n: int):
        self.n = n
        self.claimed = bytearray(n + 1)
        self.stats = SweepStats()

    def check_loop_top(self, table: TwoTable, left: int, right: int) -> None:
        ptr, nxt = table.ptr, table.next
        for k in range(1, self.n + 1):
            if (ptr[k] != -1) != bool(self.claimed[k]):
                raise InvariantViolation(f"ptr[{k}] disagrees with claimed positions")
        if ptr[left] != -1:
            b = ptr[left]
            gap_start = next(
                (k for k in range(left, right + 1) if not self.claimed[k]), None
            )
            if gap_start is not None:
                if nxt[b] != gap_start:
                    raise InvariantViolation(
                        f"next[{b}] = {nxt[b]}, but first unclaimed position of "
                        f"span [{left}, {right}] is {gap_start}"
                    )
            elif nxt[b] <= right:
                raise InvariantViolation(
                    f"next[{b}] = {nxt[b]} not past right boundary {right} "
                    "of a fully claimed span"
                )

    def check_gap(self, first: int, stop: int, right: int) -> None:
        self.stats.lr_writes += stop - first
        for k in range(first, stop):
            self.claimed[k] = 1
        # the walk may stop early only against an already claimed tail
        for k in range(stop, right + 1):
            if not self.claimed[k]:
                raise InvariantViolation(
                    f"unclaimed position {k} after walk stop {stop}: gap not contiguous"
                )

    def checked_update(self, table: TwoTable, i: int, left: int, right: int) -> None:
        before_ptr = table.ptr.copy()
        before_next = table.next.copy()
        two_table_update(table, i, left, right)
        for k in range(1, self.n + 1):
            old, new = before_ptr[k], table.ptr[k]
            if new != old:
                if old != -1:
                    raise InvariantViolation(f"ptr[{k}] rewritten: {old} -> {new}")
                if new < 1:
                    raise InvariantViolation(f"ptr[{k}] set to invalid id {new}")
                self.stats.ptr_writes += 1
        for b in range(1, self.n + 1):
            old, new = before_next[b], table.next[b]
            if new != old:
                if new < 1:
                    raise InvariantViolation(f"next[{b}] set to invalid position {new}")
                if old != -1 and new <= old:
                    raise InvariantViolation(f"next[{b}] not monotone: {old} -> {new}")
                self.stats.next_writes += 1

    def finish(self) -> None:
        stats = self.stats
        if stats.ptr_writes > self.n:
            raise InvariantViolation(f"{stats.ptr_writes} ptr writes for n = {self.n}")
        if stats.lr_writes > self.n:
            raise InvariantViolation(f"{stats.lr_writes} result writes for n = {self.n}")
        # every update that writes next also claims at least one ptr slot
        if stats.next_writes > stats.ptr_writes:
            raise InvariantViolation(
                f"{stats.next_writes} next writes exceed {stats.ptr_writes} ptr writes"
            )
