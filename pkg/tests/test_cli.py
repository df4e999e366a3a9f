"""
Test Suite for the Command Line
===============================

Subcommand output and exit codes.
"""

import io
import json

import pytest

from strandtwist.cli import EXIT_INPUT, EXIT_OK, build_parser, load_bandings, main
from strandtwist.diagram import format_pd
from strandtwist.tangle import Band, clasp_diagram


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestInvariantCommands:
    """jones, det and cover."""

    def test_jones(self):
        code, text = run("jones", "figure-eight")
        assert code == EXIT_OK
        assert json_lines(text) == [{"knot": "figure-eight",
                                     "jones": "1*t^-2 + -1*t^-1 + 1*t^0 + -1*t^1 + 1*t^2"}]

    def test_det_from_dt_table(self, tmp_path):
        path = tmp_path / "knots.dt"
        path.write_text("5_2: 4 8 10 2 6\n")
        code, text = run("det", str(path))
        assert code == EXIT_OK
        assert json_lines(text)[0] == {"knot": "5_2", "determinant": 7}

    def test_cover(self):
        code, text = run("cover", "trefoil")
        assert code == EXIT_OK
        assert json_lines(text)[0]["homology"] == "Z/3"

    def test_crossing_limit(self):
        code, _ = run("jones", "6_1", "--max-crossings", "4")
        assert code == EXIT_INPUT

    def test_out_file(self, tmp_path):
        path = tmp_path / "det.jsonl"
        code, text = run("det", "trefoil", "--out", str(path))
        assert code == EXIT_OK
        assert text == ""
        assert json_lines(path.read_text())[0]["determinant"] == 3


class TestTwistCommand:
    """Site listing and twisting."""

    def test_lists_sites(self):
        code, text = run("twist", "clasp")
        assert code == EXIT_OK
        _, site = clasp_diagram()
        assert {"knot": "clasp", "site": site.address()} in json_lines(text)

    def test_twist(self):
        _, site = clasp_diagram()
        code, text = run("twist", "clasp", "--site", site.address(), "--n", "2")
        assert code == EXIT_OK
        record = json_lines(text)[0]
        assert record["crossings"] == 4
        assert record["pd"].startswith("X ")

    def test_missing_n(self):
        _, site = clasp_diagram()
        code, _ = run("twist", "clasp", "--site", site.address())
        assert code == EXIT_INPUT

    def test_zero_twist(self):
        _, site = clasp_diagram()
        code, _ = run("twist", "clasp", "--site", site.address(), "--n", "0")
        assert code == EXIT_INPUT

    def test_unknown_knot(self):
        code, _ = run("twist", "no-such-knot")
        assert code == EXIT_INPUT


class TestSlopesCommand:
    """CSV slope tables."""

    def test_default_range(self):
        code, text = run("slopes")
        lines = text.splitlines()
        assert code == EXIT_OK
        assert lines[0].startswith("n,mu_prime,delta")
        assert len(lines) == 13

    def test_single_order(self):
        code, text = run("slopes", "--n", "3")
        assert code == EXIT_OK
        assert text.splitlines()[1].startswith("3,\"(1,3)\",3,\"(0,1)\",ForcedNugatory")

    def test_bad_range(self):
        code, _ = run("slopes", "--n", "a:b")
        assert code == EXIT_INPUT


class TestCensusCommand:
    """Census runs from the command line."""

    def test_stdout_records(self):
        code, text = run("census", "--n=-1:1", "--workers", "1")
        assert code == EXIT_OK
        sources = {r["source"] for r in json_lines(text)}
        assert sources == {"clasp", "trefoil", "figure-eight"}

    def test_report_file(self, tmp_path):
        path = tmp_path / "run.jsonl"
        code, text = run("census", "trefoil", "--n", "1", "--workers", "1", "--out", str(path))
        assert code == EXIT_OK
        assert text == ""
        assert path.with_suffix(".csv").exists()
        assert all(r["n"] == 1 for r in json_lines(path.read_text()))

    def test_empty_range(self):
        code, _ = run("census", "--n", "0", "--workers", "1")
        assert code == EXIT_INPUT


class TestParser:
    """Argument parsing."""

    def test_requires_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args([])

    def test_subcommands(self):
        parser = build_parser()
        for name in ("twist", "jones", "det", "cover"):
            assert parser.parse_args([name, "trefoil"]).command == name
        for name in ("slopes", "census", "verify-examples", "banding-check",
                     "verify-paper", "theorem3-check"):
            assert parser.parse_args([name]).command == name


@pytest.fixture
def clasp_record():
    d, site = clasp_diagram()
    return {"knot": "clasp", **Band(site.arc_a, site.arc_b, site.face, -1).to_record()}


class TestBandRecords:
    """Band files for banding-check."""

    def test_load(self, tmp_path, clasp_record):
        d, _ = clasp_diagram()
        path = tmp_path / "bands.jsonl"
        pd_record = dict(clasp_record, pd=format_pd(d))
        del pd_record["knot"]
        path.write_text("# clasp, twice\n" + json.dumps(clasp_record) + "\n\n"
                        + json.dumps(pd_record) + "\n")
        bandings = load_bandings(str(path))
        assert len(bandings) == 2
        for knot, band in bandings:
            assert knot == d
            assert band == Band.from_record(clasp_record)

    def test_missing_field(self, tmp_path, clasp_record):
        path = tmp_path / "bands.jsonl"
        del clasp_record["face"]
        path.write_text(json.dumps(clasp_record) + "\n")
        code, _ = run("banding-check", "--bands", str(path))
        assert code == EXIT_INPUT

    def test_empty_file(self, tmp_path):
        path = tmp_path / "bands.jsonl"
        path.write_text("\n")
        code, _ = run("banding-check", "--bands", str(path))
        assert code == EXIT_INPUT

    def test_knot_must_be_unknot(self, tmp_path, clasp_record):
        path = tmp_path / "bands.jsonl"
        path.write_text(json.dumps(dict(clasp_record, knot="trefoil")) + "\n")
        code, _ = run("banding-check", "--bands", str(path))
        assert code == EXIT_INPUT

@pytest.mark.slow
class TestCheckCommands:
    """Worked-example and banding checks."""

    def test_verify_examples(self, tmp_path):
        path = tmp_path / "claims.jsonl"
        code, text = run("verify-examples", "--out", str(path))
        assert code == EXIT_OK, text
        assert all(c["passed"] for c in json_lines(path.read_text()))

    def test_unknot_banding_check(self):
        code, text = run("theorem3-check", "--count", "5", "--seed", "3")
        assert code == EXIT_OK, text

    def test_banding_check_on_band_file(self, tmp_path, clasp_record):
        bands = tmp_path / "bands.jsonl"
        bands.write_text(json.dumps(clasp_record) + "\n")
        path = tmp_path / "verdicts.jsonl"
        code, text = run("banding-check", "--bands", str(bands), "--out", str(path))
        assert code == EXIT_OK, text
        assert [v["verdict"] for v in json_lines(path.read_text())] == ["WeaklyNugatory"]
