from __future__ import annotations

import json

import pytest

from thicksl2.cli import main, parse_udot
from thicksl2.errors import UsageError
from thicksl2.partitions import Partition
from thicksl2.runner import CheckReport, emit_report, parse_report
from thicksl2.udot import EF, E, one


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "bogus" in err


def test_bad_caps_are_usage_errors(capsys):
    assert run(capsys, "verify", "--suite", "arith", "--rank-max", "99")[0] == 2
    assert run(capsys, "verify", "--suite", "arith", "--jobs", "0")[0] == 2


def test_verify_small_suite_passes_and_round_trips(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "nilhecke", "--rank-max", "3")
    assert code == 0
    suite, seed, reports = parse_report(out.encode())
    assert suite == "nilhecke" and seed == 0
    assert reports and all(r.status == "pass" and r.witness is None for r in reports)
    assert emit_report(reports, "json", suite, seed) == out.encode()
    keys = [(r.name, json.dumps(r.params, sort_keys=True)) for r in reports]
    assert keys == sorted(keys)


def test_no_timings_is_byte_stable(capsys):
    _, first, _ = run(capsys, "verify", "--suite", "arith", "--no-timings")
    _, second, _ = run(capsys, "verify", "--suite", "arith", "--no-timings", "--jobs", "2")
    assert first == second
    assert all(c["ms"] == 0 for c in json.loads(first)["checks"])


def test_seed_changes_randomized_params(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "arith", "--seed", "7", "--format", "text")
    assert "seed 7" in out
    assert "checks, 0 failed" in out


def test_empty_and_failing_reports():
    assert parse_report(emit_report([], "json", "arith", 0)) == ("arith", 0, [])
    bad = CheckReport("x", "anchor", {}, "fail", None, 0)
    assert bad.witness
    _, _, [back] = parse_report(emit_report([bad]))
    assert back == bad


def test_config_from_env(tmp_path, monkeypatch, capsys):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"suite": "arith", "seed": 3, "timings": False}))
    monkeypatch.setenv("THICKSL2_CONFIG", str(path))
    code, out, _ = run(capsys, "verify")
    assert code == 0
    obj = json.loads(out)
    assert obj["suite"] == "arith" and obj["seed"] == 3
    path.write_text(json.dumps({"no_such_key": 1}))
    assert run(capsys, "verify")[0] == 2


def test_lr(capsys):
    code, out, _ = run(capsys, "lr", "2,1", "2,1")
    assert code == 0
    prod = {p["gamma"]: p["coeff"] for p in json.loads(out)["product"]}
    assert prod[str(Partition((3, 2, 1)))] == 2
    assert sum(prod.values()) == 8
    assert len(prod) == 7


def test_canon(capsys):
    code, out, _ = run(capsys, "canon", "mult", "E:1@-1", "F:1@1")
    assert code == 0
    obj = json.loads(out)
    assert obj["canonical"] and obj["source"] == 1 and obj["target"] == 1
    assert len(obj["terms"]) == 2
    code, out, _ = run(capsys, "canon", "reduce", "EF:1,1@2", "--format", "text")
    assert code == 0 and out.strip()
    assert run(capsys, "canon", "reduce", "XY@2")[0] == 2
    assert run(capsys, "canon", "mult", "E:1@0")[0] == 2


def test_parse_udot():
    assert parse_udot("E:2@-1") == E(2, -1)
    assert parse_udot("1@3") == one(3)
    assert parse_udot("EF:1,2@0") == EF(1, 2, 0)
    with pytest.raises(UsageError):
        parse_udot("EF:1@0")


def test_hom_rank_and_schur(capsys):
    code, out, _ = run(capsys, "hom-rank", "1", "1", "1", "0", "--cutoff", "10")
    assert code == 0 and json.loads(out)["agree"]
    code, out, _ = run(capsys, "schur", "2,1", "--nvars", "3")
    assert code == 0 and json.loads(out)["agree"]
    assert run(capsys, "schur", "2,1", "--nvars", "0")[0] == 2
