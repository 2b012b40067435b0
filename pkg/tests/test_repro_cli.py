"""Reproduction harness report shape and command-line entry points."""

from __future__ import annotations

import csv
import io

import pytest

from cfum import ReproReport, ReproRow, check, instances, reproduce
from cfum.cli import main
from cfum.graphs import parse_coloring, parse_embedding, serialize_graph
from cfum.variants import VariantSpec

V = VariantSpec.from_code


@pytest.fixture(scope="module")
def quick_report():
    return reproduce("quick")


class TestReproduce:
    def test_quick_tier_all_pass(self, quick_report):
        assert isinstance(quick_report, ReproReport)
        assert quick_report.tier == "quick"
        assert quick_report.rows
        assert quick_report.all_pass
        assert not quick_report.has_contradiction
        assert not quick_report.has_timeout
        assert all(isinstance(r, ReproRow) for r in quick_report.rows)

    def test_claims_unique_and_named(self, quick_report):
        claims = [r.claim for r in quick_report.rows]
        assert len(set(claims)) == len(claims)
        assert all(":" in c for c in claims)
        prefixes = {c.split(":", 1)[0] for c in claims}
        assert {"gadget", "corpus", "planar", "outerplanar", "facial"} <= prefixes

    def test_gadget_rows_cover_catalog(self, quick_report):
        gadget_rows = [r for r in quick_report.rows if r.claim.startswith("gadget:")]
        instances_seen = {r.instance for r in gadget_rows}
        for name in ("fritsch", "G3prime", "H_iUMo", "H_pCFo", "H_pUMo"):
            assert any(name in i for i in instances_seen), name

    def test_long_gadgets_get_upper_rows_in_quick_tier(self, quick_report):
        uppers = [r for r in quick_report.rows if r.claim.endswith(":upper")]
        assert {r.claim for r in uppers} == {
            "gadget:H_pCFo:upper", "gadget:H_pUMo:upper",
        }
        for r in uppers:
            assert r.expected.startswith("<=")
            assert r.status == "pass"

    def test_text_output_parses(self, quick_report):
        text = quick_report.text()
        lines = text.strip().splitlines()
        assert len(lines) >= len(quick_report.rows)
        assert lines[-1].startswith("tier=quick:")
        assert f"{sum(r.status == 'pass' for r in quick_report.rows)} pass" in lines[-1]

    def test_csv_output_parses(self, quick_report):
        rows = list(csv.DictReader(io.StringIO(quick_report.csv())))
        assert len(rows) == len(quick_report.rows)
        assert set(rows[0]) == {
            "claim", "variant", "instance", "expected", "computed", "status",
            "seconds",
        }
        for row in rows:
            float(row["seconds"])

    def test_rows_are_frozen(self, quick_report):
        with pytest.raises(AttributeError):
            quick_report.rows[0].status = "fail"

    def test_bad_tier_rejected(self):
        with pytest.raises(ValueError):
            reproduce("weekly")


def run_cli(*argv):
    return main(list(argv))


class TestCliCheck:
    def test_valid_and_invalid(self, tmp_path, capsys):
        gpath = tmp_path / "c4.txt"
        gpath.write_text(serialize_graph(instances.cycle(4)))
        cpath = tmp_path / "colors.txt"
        cpath.write_text("1 1\n2 2\n3 1\n4 2\n")

        code = run_cli("check", str(gpath), str(cpath), "--closed")
        assert code == 0
        assert "valid pCFc coloring" in capsys.readouterr().out

        code = run_cli("check", str(gpath), str(cpath))
        assert code == 1
        assert "no-unique-color" in capsys.readouterr().out

    def test_missing_file_is_input_error(self, tmp_path):
        assert run_cli("check", str(tmp_path / "nope.txt"),
                       str(tmp_path / "c.txt")) == 2


class TestCliChromatic:
    def test_value_and_witness(self, tmp_path, capsys):
        gpath = tmp_path / "c5.txt"
        gpath.write_text(serialize_graph(instances.cycle(5)))
        wpath = tmp_path / "witness.txt"
        code = run_cli("chromatic", str(gpath), "--witness-out", str(wpath))
        assert code == 0
        assert "= 5" in capsys.readouterr().out
        witness = parse_coloring(wpath.read_text())
        assert check(instances.cycle(5), witness, V("pCFo")) is None

    def test_capped_search_reports_bound(self, tmp_path, capsys):
        gpath = tmp_path / "k4.txt"
        gpath.write_text(serialize_graph(instances.complete(4)))
        code = run_cli("chromatic", str(gpath), "--closed", "--max-colors", "3")
        assert code == 0
        assert "lower bound 4" in capsys.readouterr().out

    def test_timeout_exit_code(self, tmp_path):
        from cfum import gadgets

        gpath = tmp_path / "h.txt"
        gpath.write_text(serialize_graph(gadgets.generate("H_pUMo")))
        code = run_cli("chromatic", str(gpath), "--um", "--closed",
                       "--time-budget", "0.05")
        assert code == 3


class TestCliConstruct:
    def test_outerplanar_algorithm(self, tmp_path, capsys):
        gpath = tmp_path / "c5.txt"
        gpath.write_text(serialize_graph(instances.cycle(5)))
        out = tmp_path / "colors.txt"
        code = run_cli("construct", str(gpath),
                       "--algorithm", "outerplanar-pumo5", "--output", str(out))
        assert code == 0
        assert "valid pUMo coloring" in capsys.readouterr().err
        sigma = parse_coloring(out.read_text())
        assert check(instances.cycle(5), sigma, V("pUMo")) is None

    def test_embedding_pipeline_on_rotation_file(self, tmp_path, capsys):
        epath = tmp_path / "embedding.txt"
        assert run_cli("random", "planar", "--n", "9", "--seed", "2",
                       "--output", str(epath)) == 0
        out = tmp_path / "colors.txt"
        code = run_cli("construct", str(epath), "--algorithm", "iumc6",
                       "--output", str(out))
        assert code == 0
        assert "valid iUMc coloring" in capsys.readouterr().err
        sigma = parse_coloring(out.read_text())
        e = parse_embedding(epath.read_text())
        assert check(e.graph, sigma, V("iUMc")) is None

    def test_embedding_algorithms_reject_edge_lists(self, tmp_path, capsys):
        gpath = tmp_path / "k4.txt"
        gpath.write_text(serialize_graph(instances.complete(4)))
        assert run_cli("construct", str(gpath), "--algorithm", "iumc6") == 2
        assert "rotation-system" in capsys.readouterr().err

    def test_unknown_algorithm_is_usage_error(self, tmp_path, capsys):
        gpath = tmp_path / "c4.txt"
        gpath.write_text(serialize_graph(instances.cycle(4)))
        with pytest.raises(SystemExit) as info:
            run_cli("construct", str(gpath), "--algorithm", "rainbow")
        assert info.value.code == 2


class TestCliOther:
    def test_gadget_listing_and_dump(self, capsys):
        assert run_cli("gadget", "--list") == 0
        names = capsys.readouterr().out
        assert "fritsch" in names

        assert run_cli("gadget", "fritsch") == 0
        dump = capsys.readouterr().out
        assert "# claimed: chi_pUMo = 6" in dump
        assert "# label 1: x1" in dump

    def test_gadget_dot_format(self, capsys):
        assert run_cli("gadget", "C_5", "--format", "dot") == 0
        dump = capsys.readouterr().out
        assert dump.startswith("graph {")
        assert "1 -- 2;" in dump

    def test_random_deterministic(self, capsys):
        assert run_cli("random", "planar", "--n", "8", "--seed", "3") == 0
        first = capsys.readouterr().out
        assert run_cli("random", "planar", "--n", "8", "--seed", "3") == 0
        assert capsys.readouterr().out == first
        assert parse_embedding(first).graph.n == 8

    def test_global_flags_work_in_both_positions(self, capsys):
        assert run_cli("--seed", "4", "random", "outerplanar", "--n", "7") == 0
        first = capsys.readouterr().out
        assert run_cli("random", "outerplanar", "--n", "7", "--seed", "4") == 0
        assert capsys.readouterr().out == first

    def test_closure_output_sections(self, tmp_path, capsys):
        epath = tmp_path / "e.txt"
        assert run_cli("random", "planar", "--n", "7", "--seed", "1",
                       "--output", str(epath)) == 0
        assert run_cli("closure", str(epath), "--delete", "2,4") == 0
        out = capsys.readouterr().out
        assert "# added edges:" in out
        assert "# constraint set of 2:" in out
        assert "# constraint set of 4:" in out

    def test_faces_of_wheel(self, tmp_path, capsys):
        e = tmp_path / "w.txt"
        assert run_cli("random", "planar", "--n", "6", "--output", str(e)) == 0
        assert run_cli("faces", str(e)) == 0
        out = capsys.readouterr().out
        assert out.count("\n") == 2 * 6 - 4

    def test_reproduce_quick(self, capsys):
        assert run_cli("reproduce", "--tier", "quick") == 0
        out = capsys.readouterr().out
        assert "tier=quick" in out

    def test_reproduce_csv_format(self, capsys):
        assert run_cli("reproduce", "--tier", "quick", "--format", "csv") == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert rows and "claim" in rows[0]
