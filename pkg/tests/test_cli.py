"""CLI surface: formats, exit codes, cache round-trips, golden checks."""

from __future__ import annotations

import json

import pytest

from qreflect import cache as cachemod
from qreflect import qfamily, threedr
from qreflect.cli import golden_report, main
from qreflect.multipoly import MultiPolyQ
from qreflect.report import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


class TestCommands:
    def test_q_compute_text(self, capsys):
        code, out = run(capsys, "q", "compute", "1", "0")
        assert code == 0
        assert out.strip() == "w*x*y^2*z - w - x*y + 1"

    def test_q_compute_json_roundtrip(self, capsys):
        code, out = run(capsys, "q", "compute", "1", "1", "--format", "json")
        assert code == 0
        assert MultiPolyQ.from_json(json.loads(out)) == qfamily.q_polynomial(1, 1)

    def test_k_element(self, capsys):
        code, out = run(capsys, "k", "element", "3", "1", "0", "2", "1", "3", "0", "0",
                        "--route", "both")
        assert code == 0
        assert out.strip() == "-q^6 - q^8 - q^10"

    def test_r_element_routes(self, capsys):
        code, out = run(capsys, "r", "element", "0", "1", "0", "1", "0", "1",
                        "--route", "all")
        assert code == 0
        assert out.strip() == "1 - q^2"

    def test_verify_tetrahedron_summary(self, capsys):
        code, out = run(capsys, "verify", "tetrahedron", "--max-occ", "1")
        assert code == 0
        assert "64/64 pass" in out

    def test_verify_intertwiner_single(self, capsys):
        code, out = run(capsys, "verify", "intertwiner", "--relation", "24",
                        "--max-occ", "1")
        assert code == 0
        assert "16/16 pass" in out

    def test_verify_golden(self, capsys):
        code, out = run(capsys, "verify", "golden")
        assert code == 0
        assert "pass" in out

    def test_verify_reflection_small(self, capsys):
        code, out = run(capsys, "verify", "reflection", "--max-occ", "1",
                        "--sample", "4", "--seed", "11")
        assert code == 0

    def test_export_block_csv(self, capsys):
        code, out = run(capsys, "export", "block", "r", "1", "1", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "out0,out1,out2,in0,in1,in2,value"
        assert len(lines) == 5  # 2x2 block plus header

    def test_block_json_values_reimport(self, capsys):
        from qreflect.exactq import LaurentQ
        from qreflect.threedr import r_element

        code, out = run(capsys, "r", "block", "1", "1", "--format", "json")
        assert code == 0
        data = json.loads(out)
        for entry in data["entries"]:
            value = LaurentQ.from_json(entry["value"])
            assert value == r_element(*entry["out"], *entry["in"])

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == 2

    def test_failure_exit_code(self, capsys):
        bad = VerificationReport("forced", passed=False, checked=1)
        from qreflect.cli import _emit_report

        assert _emit_report(bad, "text") == 1


class TestCache:
    def test_roundtrip_and_equivalence(self, tmp_path):
        path = tmp_path / "cache.json"
        qfamily.q_polynomial(2, 1)
        threedr.p_polynomial(3)
        with_cache = qfamily.q_polynomial(2, 1)
        count = cachemod.export_cache(path)
        assert count > 0

        qfamily.clear_caches()
        threedr.clear_caches()
        assert cachemod.import_cache(path) == count
        # Cache on (imported) and cache off (cleared, recomputed) agree.
        assert qfamily.q_polynomial(2, 1) == with_cache
        qfamily.clear_caches()
        assert qfamily.q_polynomial(2, 1) == with_cache

    def test_version_mismatch_rebuilds(self, tmp_path):
        path = tmp_path / "cache.json"
        qfamily.q_polynomial(1, 0)
        cachemod.export_cache(path)
        payload = json.loads(path.read_text())
        payload["schema_version"] = 999
        path.write_text(json.dumps(payload))
        assert cachemod.import_cache(path) == 0

    def test_missing_file(self, tmp_path):
        assert cachemod.import_cache(tmp_path / "absent.json") == 0

    def test_cli_cache_flag(self, tmp_path, capsys):
        path = tmp_path / "cli_cache.json"
        code, _ = run(capsys, "--cache", str(path), "q", "compute", "2", "0")
        assert code == 0
        assert path.exists()
        payload = json.loads(path.read_text())
        assert payload["schema_version"] == cachemod.SCHEMA_VERSION
        assert "2,0" in payload["q"]

    def test_cli_cache_subcommand(self, tmp_path, capsys):
        path = tmp_path / "sub.json"
        code, out = run(capsys, "q", "cache", "export", str(path))
        assert code == 0 and "exported" in out
        code, out = run(capsys, "cache", "import", str(path))
        assert code == 0 and "imported" in out


class TestGoldenReport:
    def test_full_set(self):
        rep = golden_report()
        assert rep.passed, rep.summary()
        assert rep.checked >= 20
