"""Longest-repeat queries over byte strings.

Build a suffix-array index once, then ask for the longest substring that
covers a given position and occurs at least twice, for one position or for
all of them at once.  All positions are 1-indexed.
"""

from .llr import ABSENT, LlrTable, Repeat, llr_at, llr_table, sort_llr_desc
from .lr_global import (
    InvariantViolation,
    LrTable,
    SweepStats,
    TwoTable,
    all_lr_fast,
    all_lr_reference,
    audit_all_lr_fast,
    two_table_update,
)
from .lr_point import all_lr_at, leftmost_lr_at
from .oracle import naive_all_lr, naive_is_repeat, naive_lr_at
from .suffix_index import (
    IndexFormatError,
    IndexIntegrityError,
    Text,
    TextIndex,
    as_text,
    build_index,
    load_index,
    save_index,
)

__version__ = "0.1.0"

__all__ = [
    "ABSENT",
    "IndexFormatError",
    "IndexIntegrityError",
    "InvariantViolation",
    "LlrTable",
    "LrTable",
    "Repeat",
    "SweepStats",
    "Text",
    "TextIndex",
    "TwoTable",
    "all_lr_at",
    "all_lr_fast",
    "all_lr_reference",
    "as_text",
    "audit_all_lr_fast",
    "build_index",
    "leftmost_lr_at",
    "llr_at",
    "llr_table",
    "load_index",
    "naive_all_lr",
    "naive_is_repeat",
    "naive_lr_at",
    "save_index",
    "sort_llr_desc",
    "two_table_update",
]
