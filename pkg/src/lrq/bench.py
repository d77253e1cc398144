"""Seeded scaling benchmark for index construction and the global query.

Texts are generated deterministically from (seed, alphabet, size), each run
is repeated and the median kept, and every row records a digest of the text
so two runs can be compared for having measured exactly the same input.
"""

from __future__ import annotations

import hashlib
import random
import statistics
import time
from dataclasses import dataclass
from typing import TextIO

from .lr_global import all_lr_fast
from .suffix_index import build_index

__all__ = [
    "BenchRow",
    "generate_text",
    "parse_sizes",
    "render_figure",
    "run_bench",
    "write_tsv",
]


@dataclass(frozen=True)
class BenchRow:
    """One measured text size: median times in milliseconds plus a text digest."""

    size: int
    build_ms: float
    query_ms: float
    sha256: str


def parse_sizes(raw: str) -> list[int]:
    """Parse a comma-separated ascending list of positive text sizes."""
    parts = [part.strip() for part in raw.split(",")]
    if not parts or any(part == "" for part in parts):
        raise ValueError(f"bad sizes {raw!r}: expected comma-separated integers")
    try:
        sizes = [int(part) for part in parts]
    except ValueError:
        raise ValueError(f"bad sizes {raw!r}: expected comma-separated integers") from None
    if any(size <= 0 for size in sizes):
        raise ValueError(f"bad sizes {raw!r}: sizes must be positive")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError(f"bad sizes {raw!r}: sizes must be strictly ascending")
    return sizes


def generate_text(size: int, alphabet: int, seed: int) -> bytes:
    """Random text over the first ``alphabet`` byte values, deterministic in
    (seed, alphabet, size)."""
    if size < 0:
        raise ValueError(f"size must be non-negative, got {size}")
    if not 1 <= alphabet <= 256:
        raise ValueError(f"alphabet must be in 1..256, got {alphabet}")
    rng = random.Random(f"{seed}:{alphabet}:{size}")
    return bytes(rng.choices(range(alphabet), k=size))


def run_bench(sizes: list[int], alphabet: int, seed: int, repeats: int) -> list[BenchRow]:
    """Measure build and global-query time for each size; medians over repeats."""
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    rows = []
    for size in sizes:
        text = generate_text(size, alphabet, seed)
        digest = hashlib.sha256(text).hexdigest()
        build_times = []
        query_times = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            index = build_index(text)
            t1 = time.perf_counter()
            all_lr_fast(index)
            t2 = time.perf_counter()
            build_times.append((t1 - t0) * 1e3)
            query_times.append((t2 - t1) * 1e3)
        rows.append(
            BenchRow(size, statistics.median(build_times), statistics.median(query_times), digest)
        )
    return rows


def write_tsv(rows: list[BenchRow], sink: TextIO, header: bool = False) -> None:
    """Write rows as tab-separated columns size, build_ms, query_ms, sha256."""
    if header:
        sink.write("size\tbuild_ms\tquery_ms\tsha256\n")
    for row in rows:
        sink.write(f"{row.size}\t{row.build_ms:.3f}\t{row.query_ms:.3f}\t{row.sha256}\n")


def render_figure(rows: list[BenchRow], path: str) -> None:
    """Render a log-log scaling figure of the measured times to ``path``.

    A dashed slope-one guide through the first query point shows what pure
    linear growth would look like.  Matplotlib is imported here, not at
    module level, so the query paths never pay for it.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    sizes = [row.size for row in rows]
    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot(sizes, [row.build_ms for row in rows], "o-", label="index build")
    ax.plot(sizes, [row.query_ms for row in rows], "s-", label="all-positions query")
    if len(rows) >= 2 and rows[0].query_ms > 0:
        guide = [rows[0].query_ms * size / sizes[0] for size in sizes]
        ax.plot(sizes, guide, "--", color="gray", label="linear growth")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("text size (bytes)")
    ax.set_ylabel("median time (ms)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
