"""Suffix-array text index: construction, validation and binary persistence.

Every public position in this library is 1-indexed.  To keep that convention
cheap, the index arrays are stored padded: slot 0 holds an unused zero so
``sa[i]``, ``rank[i]`` and ``lcp[i]`` can be read with 1-indexed positions
directly.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import BinaryIO

import numpy as np

__all__ = [
    "INDEX_MAGIC",
    "MAX_TEXT_LENGTH",
    "IndexFormatError",
    "IndexIntegrityError",
    "Text",
    "TextIndex",
    "as_text",
    "build_index",
    "load_index",
    "save_index",
]

# The index operates on raw bytes; str input is encoded as UTF-8 up front.
Text = bytes

INDEX_MAGIC = b"LRQ1"

# Array entries are serialized as u32, so a stream cannot describe a longer text.
MAX_TEXT_LENGTH = 2**32 - 1


class IndexFormatError(ValueError):
    """A serialized index stream is malformed: bad magic, bad size or truncation."""


class IndexIntegrityError(ValueError):
    """A well-formed stream decoded to arrays that are not a valid index."""


def as_text(text: str | bytes | bytearray | memoryview) -> Text:
    """Coerce supported input types to the byte string the index works on."""
    if isinstance(text, str):
        return text.encode("utf-8")
    if isinstance(text, (bytes, bytearray, memoryview)):
        return bytes(text)
    raise TypeError(f"text must be str or bytes-like, got {type(text).__name__}")


@dataclass(frozen=True)
class TextIndex:
    """Immutable bundle of a text with its suffix, rank and LCP arrays.

    ``sa[r]`` is the 1-indexed start of the r-th smallest suffix, ``rank`` is
    the inverse permutation, and ``lcp[r]`` is the length of the longest
    common prefix between the suffixes ranked ``r - 1`` and ``r``, with the
    boundary entries ``lcp[1] = lcp[n + 1] = 0``.  All three tuples carry the
    unused slot 0 described in the module docstring, so ``len(sa) == n + 1``
    and ``len(lcp) == n + 2``.  Instances never change after construction and
    are safe to share between threads.
    """

    text: Text
    sa: tuple[int, ...]
    rank: tuple[int, ...]
    lcp: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.text)

    def check_position(self, i: int) -> None:
        """Raise ValueError unless ``i`` is a valid 1-indexed text position."""
        if not 1 <= i <= self.n:
            raise ValueError(f"position {i} out of range 1..{self.n}")


def build_index(text: str | bytes | bytearray | memoryview) -> TextIndex:
    """Build the suffix array, its inverse and the LCP array for ``text``.

    Construction sorts suffixes by prefix doubling, one stable integer sort
    per doubling round, so it costs O(n log n) time; the LCP array is then
    filled in O(n).  An index over the empty text is valid but answers no
    positional queries.
    """
    data = as_text(text)
    n = len(data)
    if n == 0:
        return TextIndex(data, (0,), (0,), (0, 0))
    sa0 = _suffix_array(data)
    rank0 = np.empty(n, dtype=np.int64)
    rank0[sa0] = np.arange(n, dtype=np.int64)
    sa = [0]
    sa.extend((sa0 + 1).tolist())
    rank = [0]
    rank.extend((rank0 + 1).tolist())
    lcp = _lcp_rank_walk(data, sa, rank)
    return TextIndex(data, tuple(sa), tuple(rank), tuple(lcp))


def _suffix_array(data: bytes) -> np.ndarray:
    """0-indexed suffix array of ``data`` (non-empty) by prefix doubling.

    Each round ranks suffixes by their first 2k characters, encoding the
    (rank, rank-at-offset-k) pair into one int64 key and running numpy's
    stable sort, which is a radix sort for integer keys.  Rounds double k,
    so there are at most ceil(log2 n) + 1 of them.
    """
    n = len(data)
    # compact byte values to 0..n-1 so the key packing below never overflows
    # its second field (distinct bytes <= n, so ranks stay below n)
    raw = np.frombuffer(data, dtype=np.uint8)
    remap = np.cumsum(np.bincount(raw, minlength=256) > 0) - 1
    rank = remap[raw].astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[:-k] = rank[k:]
        # rank < n and second < n, so the combined key stays well inside int64
        key = rank * (n + 1) + second + 1
        sa = np.argsort(key, kind="stable")
        sorted_key = key[sa]
        changed = np.empty(n, dtype=np.int64)
        changed[0] = 0
        changed[1:] = sorted_key[1:] != sorted_key[:-1]
        rank = np.empty(n, dtype=np.int64)
        rank[sa] = np.cumsum(changed)
        if rank[sa[-1]] == n - 1:
            # ranks are pairwise distinct; guaranteed at the latest once k >= n
            return sa
        k <<= 1


def _lcp_rank_walk(data: bytes, sa: list[int], rank: list[int]) -> list[int]:
    """LCP array over 1-indexed padded ``sa``/``rank`` lists.

    Walks positions in text order so each step can reuse all but one matched
    character from the previous step; total work is O(n).  The result is the
    padded list of length n + 2 with zeros at slots 0, 1 and n + 1.
    """
    n = len(data)
    lcp = [0] * (n + 2)
    h = 0
    for i in range(1, n + 1):
        r = rank[i]
        if r == 1:
            h = 0
            continue
        j = sa[r - 1]
        while i + h <= n and j + h <= n and data[i + h - 1] == data[j + h - 1]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return lcp


def save_index(index: TextIndex, sink: BinaryIO) -> None:
    """Serialize ``index`` to a binary stream.

    Layout: magic ``LRQ1``, n as u64 little-endian, the raw text bytes, then
    sa, rank and lcp as u32 little-endian arrays (n, n and n + 1 entries; the
    unused padding slot is not stored).  Texts of 2**32 or more bytes do not
    fit the u32 entries and are rejected.
    """
    n = index.n
    if n > MAX_TEXT_LENGTH:
        raise IndexFormatError("text too large for index format (n >= 2**32)")
    sink.write(INDEX_MAGIC)
    sink.write(struct.pack("<Q", n))
    sink.write(index.text)
    sink.write(np.asarray(index.sa[1:], dtype="<u4").tobytes())
    sink.write(np.asarray(index.rank[1:], dtype="<u4").tobytes())
    sink.write(np.asarray(index.lcp[1:], dtype="<u4").tobytes())


def load_index(source: BinaryIO) -> TextIndex:
    """Read an index written by save_index, validating structure and content.

    Raises IndexFormatError for a malformed stream (wrong magic, impossible
    size, truncation) and IndexIntegrityError when the stream parses but the
    arrays are inconsistent: sa is checked to be a permutation of 1..n and
    rank to be its inverse.
    """
    header = source.read(12)
    if len(header) < 12:
        raise IndexFormatError("truncated stream: missing 12-byte header")
    if header[:4] != INDEX_MAGIC:
        raise IndexFormatError(f"bad magic {header[:4]!r}, expected {INDEX_MAGIC!r}")
    n = struct.unpack("<Q", header[4:12])[0]
    if n > MAX_TEXT_LENGTH:
        raise IndexFormatError("text too large for index format (n >= 2**32)")
    expected = n + 4 * n + 4 * n + 4 * (n + 1)
    body = source.read(expected)
    if len(body) < expected:
        raise IndexFormatError(
            f"truncated stream: expected {expected} payload bytes, got {len(body)}"
        )
    text = body[:n]
    offset = n
    sa0 = np.frombuffer(body, dtype="<u4", count=n, offset=offset).astype(np.int64)
    offset += 4 * n
    rank0 = np.frombuffer(body, dtype="<u4", count=n, offset=offset).astype(np.int64)
    offset += 4 * n
    lcp0 = np.frombuffer(body, dtype="<u4", count=n + 1, offset=offset).astype(np.int64)
    if n > 0:
        if sa0.min() < 1 or sa0.max() > n:
            raise IndexIntegrityError("sa entry out of range 1..n")
        if not (np.bincount(sa0, minlength=n + 1)[1:] == 1).all():
            raise IndexIntegrityError("sa is not a permutation of 1..n")
        if not np.array_equal(rank0[sa0 - 1], np.arange(1, n + 1, dtype=np.int64)):
            raise IndexIntegrityError("rank is not the inverse of sa")
    sa = [0]
    sa.extend(sa0.tolist())
    rank = [0]
    rank.extend(rank0.tolist())
    lcp = [0]
    lcp.extend(lcp0.tolist())
    return TextIndex(bytes(text), tuple(sa), tuple(rank), tuple(lcp))
