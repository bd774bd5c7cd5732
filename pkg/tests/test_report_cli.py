import json
import pathlib

import pytest

from burnmat.claims import RunConfig, run_suite
from burnmat.cli import main
from burnmat.ideal import replay_verdict
from burnmat.report import (
    CheckResult,
    EXIT_OK,
    EXIT_REFUTED,
    EXIT_UNKNOWN,
    emit_report,
    exit_code_for,
    normalized_report,
    render_report_figure,
    report_json,
    report_text,
)

GOLDEN = pathlib.Path(__file__).parent / "golden" / "v1"


def fake(claim_id, status, **evidence):
    return CheckResult(
        claim_id=claim_id,
        suite="core",
        statement="synthetic",
        status=status,
        q=None,
        wall_ms=1.0,
        evidence=evidence,
    )


class TestExitCodes:
    def test_all_good(self):
        assert exit_code_for([fake("a", "PROVED"), fake("b", "OBSERVED")]) == EXIT_OK

    def test_unknown(self):
        assert exit_code_for([fake("a", "PROVED"), fake("b", "UNKNOWN")]) == EXIT_UNKNOWN

    def test_refuted_wins(self):
        results = [fake("a", "UNKNOWN"), fake("b", "REFUTED")]
        assert exit_code_for(results) == EXIT_REFUTED

    def test_observed_discrepancy(self):
        assert exit_code_for([fake("a", "OBSERVED", agrees=False)]) == EXIT_REFUTED
        assert exit_code_for([fake("a", "OBSERVED", agrees=True)]) == EXIT_OK


class TestReports:
    def test_empty_report_is_valid(self):
        body = emit_report([], fmt="json")
        payload = json.loads(body)
        assert payload["results"] == [] and payload["exit_code"] == EXIT_OK
        assert "claim_id" in report_text([])

    def test_text_is_tab_delimited(self):
        body = report_text([fake("a.claim", "PROVED")])
        header, row = body.splitlines()[:2]
        assert header.split("\t")[0] == "claim_id"
        assert row.split("\t")[3] == "PROVED"

    def test_classes_report_has_one_row_per_q(self):
        results = run_suite("classes", [2, 3, 4, 5, 7, 125])
        assert len(results) == 6

    def test_reproducible_modulo_volatile_fields(self):
        a = run_suite("classes", [2, 3, 4])
        b = run_suite("classes", [2, 3, 4])
        ra = normalized_report(report_json(a, {"seed": 0}))
        rb = normalized_report(report_json(b, {"seed": 0}))
        assert json.dumps(ra, sort_keys=True) == json.dumps(rb, sort_keys=True)

    def test_figure_rendered(self, tmp_path):
        out = tmp_path / "fig.png"
        render_report_figure([fake("a", "PROVED"), fake("b", "UNKNOWN")], out)
        assert out.exists() and out.stat().st_size > 0

    def test_emit_with_figures_writes_png(self, tmp_path):
        path = tmp_path / "report.json"
        emit_report([fake("a", "PROVED")], fmt="json", path=path, figures=True)
        assert path.exists()
        assert path.with_suffix(".png").exists()


class TestGolden:
    def test_classes_report_matches_golden(self):
        results = run_suite("classes", [2, 3, 4, 5, 7, 125])
        got = normalized_report(
            report_json(
                results,
                {
                    "suite": "classes",
                    "q": [2, 3, 4, 5, 7, 125],
                    "seed": 0,
                    "window": None,
                    "box": None,
                    "trunc": None,
                    "samples": None,
                },
            )
        )
        want = json.loads((GOLDEN / "classes_report.json").read_text())
        assert got == want

    def test_certificates_replay_without_research(self):
        files = sorted((GOLDEN / "certificates").glob("*.json"))
        assert len(files) >= 20
        for f in files:
            payload = json.loads(f.read_text())
            verdict = replay_verdict(payload)
            assert verdict.status == payload["status"]


class TestCli:
    def test_verify_classes_exit_code(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = main(
            ["verify", "classes", "--q", "2,3,4,5,7,125", "--format", "json", "-o", str(out)]
        )
        # the recorded table disagrees with the bound at several exponents
        assert code == EXIT_REFUTED
        payload = json.loads(out.read_text())
        assert len(payload["results"]) == 6

    def test_verify_lemma3_all_proved(self, tmp_path):
        out = tmp_path / "report.txt"
        code = main(["verify", "lemma3", "--q", "2,3", "-o", str(out)])
        assert code == EXIT_OK
        assert "PROVED" in out.read_text()

    def test_verify_rejects_composite_q(self, capsys):
        code = main(["verify", "lemma3", "--q", "6"])
        assert code == EXIT_REFUTED
        assert "prime power" in capsys.readouterr().err

    def test_verify_figures(self, tmp_path):
        out = tmp_path / "r.json"
        code = main(["verify", "classes", "--q", "7", "--format", "json", "-o", str(out), "--figures"])
        assert code == EXIT_OK
        assert out.with_suffix(".png").exists()

    def test_decide_proved(self, capsys):
        code = main(["decide", "--target", "1-2*x+x^2", "--ideal", "cyclo", "--q", "3"])
        assert code == EXIT_OK
        assert "PROVED" in capsys.readouterr().out

    def test_decide_refuted_json(self, capsys):
        code = main(
            ["decide", "--target", "1-x", "--ideal", "cyclo", "--q", "3", "--format", "json"]
        )
        assert code == EXIT_REFUTED
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "REFUTED"
        assert payload["hom"]["roots"]["q"] == 3

    def test_decide_sigma_power(self, capsys):
        code = main(["decide", "--target", "1-x-y+x*y", "--ideal", "sigma^2", "--q", "3"])
        assert code == EXIT_OK

    def test_order_fs(self, capsys):
        code = main(["order", "--word", "M1", "--q", "3", "--in", "fs"])
        assert code == EXIT_OK
        assert "divides 3" in capsys.readouterr().out

    def test_order_infinite_json(self, capsys):
        code = main(["order", "--word", "M2T^2", "--q", "3", "--format", "json"])
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["kind"] == "infinite"

    def test_kernel(self, capsys):
        code = main(["kernel", "--word", "M1^3", "--q", "3"])
        assert code == EXIT_OK
        assert "in_kernel" in capsys.readouterr().out

    def test_expand_json(self, capsys):
        code = main(["expand", "--word", "M2T", "--trunc", "2", "--format", "json"])
        assert code == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["coefficients"]["1"][0][0] == "y"

    def test_expand_default_trunc_from_q(self, capsys):
        code = main(["expand", "--word", "M2T", "--q", "3"])
        assert code == EXIT_OK
        assert "A4" in capsys.readouterr().out


class TestSamplesOverride:
    def test_smaller_sample_counts_run_fast(self):
        results = run_suite("orders", [2], RunConfig(samples=3))
        assert all(r.status in ("OBSERVED", "PROVED") for r in results)
