"""Command line interface: output shapes, exit codes, determinism and the
doc/catalog coverage contract."""

import json
import re
from pathlib import Path

import pytest

import shortroots.checks as checks
from shortroots.cli import main, parse_system
from shortroots.config import ENV_MAX_WEYL


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_system():
    assert str(parse_system("c4").spec) == "C4"
    for bad in ["Z9", "B", "12", "BB2", ""]:
        with pytest.raises(ValueError):
            parse_system(bad)


def test_info_text(capsys):
    code, out, _ = run(capsys, "info", "G2")
    assert code == 0
    assert "h             6" in out
    assert "dim V         7" in out
    assert "factor 3" in out
    assert "Bourbaki" in out


def test_info_json_c5(capsys):
    code, out, _ = run(capsys, "info", "C5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["little_adjoint"]["dim"] == 44
    assert payload["reduction"]["sub_type"] == "A4"
    assert payload["reduction"]["sub_coxeter_number"] == 5
    assert payload["system"] == {"family": "C", "rank": 5}
    assert payload["schemaVersion"] == 1


def test_info_rejects_bad_system(capsys):
    code, _, err = run(capsys, "info", "Z9")
    assert code == 2
    assert "cannot parse" in err


def test_verify_passes_and_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "G2", "--json")
    code2, out2, _ = run(capsys, "verify", "G2", "--json")
    assert code1 == code2 == 0
    assert out1 == out2  # byte-identical
    payload = json.loads(out1)
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] == len(checks.CHECK_IDS)
    ids = [c["id"] for c in payload["checks"]]
    assert ids == sorted(ids)


def test_verify_skips_oversized_exhaustive_checks(capsys):
    code, out, _ = run(capsys, "verify", "B6", "--check", "semidirect-product")
    assert code == 0  # a skip is not a failure
    assert "SKIP semidirect-product" in out
    assert "46080" in out


def test_verify_respects_env_cap(capsys, monkeypatch):
    monkeypatch.setenv(ENV_MAX_WEYL, "10")
    code, out, _ = run(capsys, "verify", "G2", "--check", "semidirect-product", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["checks"][0]["status"] == "skipped"
    assert "10" in payload["checks"][0]["details"]["reason"]


def test_verify_unknown_check_id(capsys):
    code, _, err = run(capsys, "verify", "G2", "--check", "no-such-check")
    assert code == 2
    assert "semidirect-product" in err  # the valid ids are listed


def test_verify_reports_failures_with_exit_one(capsys, monkeypatch):
    def broken(rs, limits):
        return "fail", {"expected": 1, "computed": 2}

    monkeypatch.setitem(checks._CHECKS, "root-counts",
                        ("doctored", False, broken))
    code, out, _ = run(capsys, "verify", "G2", "--check", "root-counts")
    assert code == 1
    assert "FAIL root-counts" in out
    assert '"computed": 2' in out


def test_verify_simply_laced_skips_two_length_checks(capsys):
    code, out, _ = run(capsys, "verify", "A3", "--json")
    assert code == 0
    payload = json.loads(out)
    by_id = {c["id"]: c for c in payload["checks"]}
    assert by_id["root-counts"]["status"] == "pass"
    assert by_id["table-row"]["status"] == "skipped"
    assert "single root length" in by_id["table-row"]["details"]["reason"]


def test_table1(capsys):
    code, out, _ = run(capsys, "table1", "--json")
    assert code == 0
    rows = {r["system"]: r for r in json.loads(out)["rows"]}
    assert len(rows) == 12
    c3 = rows["C3"]
    assert (c3["module_dim"], c3["coxeter_number"], c3["sub_type"],
            c3["sub_coxeter_number"], c3["orbit_count"], c3["ambient_algebra"]) == (
        14, 6, "A2", 3, 3, "sl_6")
    g2 = rows["G2"]
    assert (g2["module_dim"], g2["coxeter_number"], g2["sub_type"],
            g2["sub_coxeter_number"], g2["orbit_count"], g2["ambient_algebra"]) == (
        7, 6, "A1", 2, 2, "so_8")
    c4 = rows["C4"]
    assert (c4["module_dim"], c4["coxeter_number"], c4["orbit_count"]) == (27, 8, 5)
    assert rows["B2"]["isomorphic_to"] == "C2"
    assert rows["C2"]["isomorphic_to"] == "B2"
    assert rows["B2"]["module_dim"] == rows["C2"]["module_dim"] == 5


def test_antichains_command(capsys):
    code, out, _ = run(capsys, "antichains", "F4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["brute_force"] == payload["formula"] == payload["alt_formula"] == 21
    assert payload["consistent"]
    code, out, _ = run(capsys, "antichains", "G2")
    assert code == 0
    assert "brute force  4" in out


def test_nullcone_char_command(capsys):
    code, out, _ = run(capsys, "nullcone-char", "G2", "--max-degree", "6", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["hilbert_ok"] is True
    assert payload["dimension_series"][:3] == [1, 7, 27]
    entries = {tuple(e["weight"]): e["multiplicity"] for e in payload["entries"]}
    assert entries[(0, 0)]["coeffs"] == {"0": 1}
    assert entries[(1, 0)]["coeffs"]["1"] == 1


def test_nullcone_char_refuses_large_rank(capsys):
    code, _, err = run(capsys, "nullcone-char", "B5", "--max-degree", "2")
    assert code == 2
    assert "refused" in err


def test_readme_catalog_matches_check_registry():
    readme = Path(__file__).resolve().parent.parent / "README.md"
    text = readme.read_text()
    block = re.search(r"<!-- check-catalog -->(.*?)<!-- /check-catalog -->",
                      text, re.DOTALL)
    assert block, "README must carry the check catalog between its markers"
    documented = set(re.findall(r"`([a-z0-9-]+)`", block.group(1)))
    assert documented == set(checks.CHECK_IDS)
    for cid, summary in checks.check_summaries().items():
        assert summary  # every id carries a one-line description
