import numpy as np
import pytest

import helpers
from lapspec.expr import parse
from lapspec.families import family_specs, build
from lapspec.realize import graph6_encode, realize
from lapspec.scan import (
    CERTIFIED_HIT,
    MISS,
    NUMERIC_HIT,
    ScanRecord,
    dedupe_cospectral,
    scan_file,
    scan_g6,
    scan_lines,
    write_csv,
    write_jsonl,
)


def g6(expr_text):
    return graph6_encode(realize(parse(expr_text)))


K4 = g6("K4")
DIAMOND = g6("K2 * 2K1")
FOUR_CYCLE = g6("2K1 * 2K1")


class TestScanOne:
    def test_complete_graph_is_certified(self):
        rec = scan_g6(1, K4)
        assert rec.verdict == CERTIFIED_HIT
        assert rec.certificate == (0, 4, 4, 4)
        assert rec.numeric_le == pytest.approx(6.0, abs=1e-9)

    def test_diamond_is_certified(self):
        rec = scan_g6(1, DIAMOND)
        assert rec.verdict == CERTIFIED_HIT
        assert rec.certificate == (0, 2, 4, 4)
        assert rec.numeric_le == pytest.approx(6.0, abs=1e-9)

    def test_four_cycle_misses(self):
        rec = scan_g6(1, FOUR_CYCLE)
        assert rec.verdict == MISS
        assert rec.certificate is None
        assert rec.numeric_le == pytest.approx(4.0, abs=1e-9)

    def test_single_vertex_is_certified(self):
        rec = scan_g6(1, "@")
        assert rec.verdict == CERTIFIED_HIT
        assert rec.certificate == (0,)

    def test_numeric_spectrum_is_ascending(self):
        rec = scan_g6(1, DIAMOND)
        assert list(rec.numeric_spectrum) == sorted(rec.numeric_spectrum)


class TestScanStream:
    def test_verdicts_in_input_order(self):
        records = list(scan_lines([K4, DIAMOND, FOUR_CYCLE]))
        assert [r.verdict for r in records] == [CERTIFIED_HIT, CERTIFIED_HIT, MISS]
        assert [r.index for r in records] == [1, 2, 3]

    def test_bad_lines_are_reported_and_skipped(self):
        errors = []
        records = list(
            scan_lines([K4, "!!notgraph6!!", DIAMOND], on_error=lambda ln, msg: errors.append(ln))
        )
        assert [r.index for r in records] == [1, 3]
        assert errors == [2]

    def test_header_line_is_skipped(self):
        records = list(scan_lines([">>graph6<<", K4]))
        assert [r.index for r in records] == [2]

    def test_empty_input(self):
        assert list(scan_lines([])) == []


class TestScanFile:
    @pytest.fixture()
    def corpus_path(self, tmp_path):
        path = tmp_path / "corpus.g6"
        path.write_text("\n".join([K4, DIAMOND, "?!bad", FOUR_CYCLE]) + "\n", encoding="ascii")
        return str(path)

    def test_serial(self, corpus_path):
        errors = []
        records = scan_file(corpus_path, on_error=lambda ln, msg: errors.append(ln))
        assert [r.verdict for r in records] == [CERTIFIED_HIT, CERTIFIED_HIT, MISS]
        assert errors == [3]

    def test_parallel_matches_serial(self, corpus_path):
        serial = scan_file(corpus_path)
        parallel = scan_file(corpus_path, jobs=2)
        assert serial == parallel

    def test_parallel_on_larger_input(self, tmp_path):
        lines = [K4, DIAMOND, FOUR_CYCLE] * 40
        path = tmp_path / "big.g6"
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
        serial = scan_file(str(path))
        parallel = scan_file(str(path), jobs=3)
        assert serial == parallel
        assert len(serial) == 120


class TestDedupe:
    def test_distinct_spectra_make_distinct_classes(self):
        records = list(scan_lines([K4, DIAMOND]))
        classes = dedupe_cospectral(records)
        assert len(classes) == 2

    def test_duplicate_lines_group(self):
        records = list(scan_lines([K4, K4]))
        classes = dedupe_cospectral(records)
        assert len(classes) == 1
        assert [r.index for r in classes[0]] == [1, 2]

    def test_empty(self):
        assert dedupe_cospectral([]) == []

    def test_misses_are_ignored(self):
        records = list(scan_lines([K4, FOUR_CYCLE]))
        assert len(dedupe_cospectral(records)) == 1

    def test_classes_ordered_by_order_then_index(self):
        records = list(scan_lines([K4, DIAMOND, "@"]))
        classes = dedupe_cospectral(records)
        assert [cls[0].n for cls in classes] == [1, 4, 4]
        assert [cls[0].index for cls in classes] == [3, 1, 2]

    def test_numeric_only_hits_key_by_rounded_spectrum(self):
        rec = ScanRecord(1, "x", 2, (0.0, 1.0000000001), 2.0, NUMERIC_HIT, None)
        twin = ScanRecord(2, "y", 2, (0.0, 1.0000000004), 2.0, NUMERIC_HIT, None)
        assert len(dedupe_cospectral([rec, twin])) == 1


class TestDeskScale:
    def test_n4_hits_match_brute_force_oracle(self):
        # Independent oracle: numpy eigenvalues + direct energy evaluation
        # over every isomorphism class on 4 vertices.
        graphs = helpers.graph_classes(4)
        assert len(graphs) == 11
        expected = set()
        for g in graphs:
            lap = np.diag(g.adj.sum(axis=1).astype(np.int64)) - g.adj.astype(np.int64)
            mu = np.linalg.eigvalsh(lap)
            le = float(np.abs(mu - 2 * g.edge_count() / g.n).sum())
            if abs(le - 6.0) < 1e-9:
                expected.add(tuple(int(round(x)) for x in mu))
        records = list(scan_lines(graph6_encode(g) for g in graphs))
        certified = {r.certificate for r in records if r.verdict == CERTIFIED_HIT}
        assert all(r.verdict != NUMERIC_HIT for r in records)
        assert certified == expected
        assert (0, 4, 4, 4) in certified      # complete graph
        assert (0, 2, 4, 4) in certified      # complete graph minus an edge
        assert (0, 1, 3, 4) in certified      # triangle with a pendant vertex
        assert (0, 0, 3, 3) in certified      # triangle plus an isolated vertex
        assert len(certified) == 4

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_small_orders_hit_only_complete_graphs(self, n):
        graphs = helpers.graph_classes(n)
        records = list(scan_lines(graph6_encode(g) for g in graphs))
        hits = [r for r in records if r.verdict != MISS]
        assert len(hits) == 1
        assert hits[0].certificate == tuple([0] + [n] * (n - 1))

    def test_family_members_scan_as_certified(self):
        lines = [graph6_encode(realize(build(member))) for member in family_specs(1)]
        records = list(scan_lines(lines))
        assert all(r.verdict == CERTIFIED_HIT for r in records)


class TestWriters:
    def test_jsonl(self, tmp_path):
        import json

        records = list(scan_lines([K4, FOUR_CYCLE]))
        path = tmp_path / "out.jsonl"
        with open(path, "w") as fh:
            write_jsonl(records, fh)
        lines = path.read_text().splitlines()
        assert len(lines) == 2
        first = json.loads(lines[0])
        assert first["g6"] == K4
        assert first["verdict"] == CERTIFIED_HIT
        assert first["certificate"] == [0, 4, 4, 4]
        assert json.loads(lines[1])["certificate"] is None

    def test_csv(self, tmp_path):
        import csv

        records = list(scan_lines([K4]))
        path = tmp_path / "out.csv"
        with open(path, "w", newline="") as fh:
            write_csv(records, fh)
        rows = list(csv.reader(path.read_text().splitlines()))
        assert rows[0] == ["index", "g6", "n", "le", "verdict"]
        assert rows[1][0] == "1" and rows[1][1] == K4 and rows[1][4] == CERTIFIED_HIT


def test_determinism_repeated_runs():
    lines = [K4, DIAMOND, FOUR_CYCLE]
    assert list(scan_lines(lines)) == list(scan_lines(lines))
