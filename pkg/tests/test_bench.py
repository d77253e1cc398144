"""Benchmark plumbing: size parsing, deterministic texts, rows and figure."""

from __future__ import annotations

import hashlib
import io

import pytest

from lrq.bench import BenchRow, generate_text, parse_sizes, render_figure, run_bench, write_tsv


class TestParseSizes:
    def test_valid(self):
        assert parse_sizes("1000") == [1000]
        assert parse_sizes("1000,2000,4000") == [1000, 2000, 4000]
        assert parse_sizes(" 10 , 20 ") == [10, 20]

    @pytest.mark.parametrize(
        "bad", ["", "abc", "10,x", "0", "-5", "10,10", "20,10", "10,,20"]
    )
    def test_invalid(self, bad):
        with pytest.raises(ValueError):
            parse_sizes(bad)


class TestGenerateText:
    def test_deterministic(self):
        assert generate_text(500, 4, 42) == generate_text(500, 4, 42)

    def test_varies_with_inputs(self):
        base = generate_text(500, 4, 42)
        assert generate_text(500, 4, 43) != base
        assert generate_text(500, 3, 42) != base

    def test_alphabet_bounds(self):
        text = generate_text(2000, 4, 1)
        assert set(text) <= set(range(4))
        assert len(text) == 2000
        with pytest.raises(ValueError):
            generate_text(10, 0, 1)
        with pytest.raises(ValueError):
            generate_text(10, 257, 1)
        with pytest.raises(ValueError):
            generate_text(-1, 4, 1)


class TestRunBench:
    def test_rows_and_digests(self):
        rows = run_bench([500, 1000], alphabet=4, seed=7, repeats=2)
        assert [row.size for row in rows] == [500, 1000]
        for row in rows:
            assert row.build_ms > 0
            assert row.query_ms > 0
            assert row.sha256 == hashlib.sha256(generate_text(row.size, 4, 7)).hexdigest()

    def test_repeats_validated(self):
        with pytest.raises(ValueError):
            run_bench([100], alphabet=4, seed=1, repeats=0)


class TestOutput:
    ROWS = [
        BenchRow(1000, 1.5, 2.25, "aa"),
        BenchRow(2000, 3.0, 4.5, "bb"),
    ]

    def test_tsv_headerless_by_default(self):
        sink = io.StringIO()
        write_tsv(self.ROWS, sink)
        assert sink.getvalue() == "1000\t1.500\t2.250\taa\n2000\t3.000\t4.500\tbb\n"

    def test_tsv_header(self):
        sink = io.StringIO()
        write_tsv(self.ROWS, sink, header=True)
        assert sink.getvalue().splitlines()[0] == "size\tbuild_ms\tquery_ms\tsha256"

    def test_figure_written(self, tmp_path):
        target = tmp_path / "scaling.png"
        render_figure(self.ROWS, str(target))
        data = target.read_bytes()
        assert data[:8] == b"\x89PNG\r\n\x1a\n"
        assert len(data) > 1000
