from __future__ import annotations

import json

import pytest

from rellip.catalog import audit_record, build_catalog, build_record, iter_instances
from rellip.cli import main
from rellip.families import FamilyInstance


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_monodromy_family(capsys):
    code, out, _ = run(capsys, "monodromy", "--family", "W", "-n", "2", "-d", "3", "--expand")
    data = json.loads(out)
    assert code == 0
    assert data["coefficients"] == [1, 1, 0, 0, 1, 1]
    assert data["value_at_one"] == "4"


def test_monodromy_weights_and_degree_cap(capsys):
    code, out, _ = run(capsys, "monodromy", "--weights", "2,4,8/3", "--expand", "--max-expand-degree", "3")
    data = json.loads(out)
    assert code == 0 and data["degree"] == 5
    assert data["coefficients"] is None and "skipped: degree cap" in data["flags"][0]


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "weights", "--family", "W", "-n", "2")[0] == 2
    assert run(capsys, "ring", "--ring", "nonsense")[0] == 2
    assert run(capsys, "monodromy", "--weights", "1/2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_weights_v(capsys):
    code, out, _ = run(capsys, "weights", "--family", "V", "-n", "3", "-d", "5")
    data = json.loads(out)
    assert data["weights"] == ["5", "4", "16/3", "64/13"]
    assert data["milnor_number"] == data["milnor_formula"]


def test_kollar(capsys):
    code, out, _ = run(capsys, "kollar", "-a", "2,2,2,2,2")
    data = json.loads(out)
    assert data["d"] == 33 and data["admissible"] is False


def test_ring_signature_model(capsys):
    assert json.loads(run(capsys, "ring", "--ring", "pe:2")[1])["ranks"] == [1, 0, 2, 0, 2, 0, 1]
    assert json.loads(run(capsys, "signature", "--ring", "quadric:2")[1])["signature"] == [2, 0, 0]
    code, out, _ = run(capsys, "model", "--ring", "twisted-quadric:2:3")
    data = json.loads(out)
    assert code == 0
    assert sorted(data["generator_degrees"]) == [2, 4, 5, 7]
    assert data["ellipticity"]["verdict"] == "elliptic at cutoff"


def test_model_low_cutoff_is_not_evaluated(capsys):
    code, out, _ = run(capsys, "model", "--ring", "wedge", "--cutoff", "5")
    assert code == 0
    assert json.loads(out)["ellipticity"]["verdict"].startswith("inconclusive")


def test_homotopy_class(capsys):
    data = json.loads(run(capsys, "homotopy-class", "2", "8", "-3")[1])
    assert data["real_equivalent"] is False
    assert [c["rational_class"] for c in data["classes"]] == [2, 2, -3]


def test_threefolds(capsys):
    data = json.loads(run(capsys, "threefolds", "-n", "2", "--compare", "4")[1])
    assert data["discriminant"] == -108
    assert data["compare"] == {
        "m": 4, "homotopy_equivalent": False, "hirzebruch_diffeomorphic": True, "gl2z_equivalent": False,
    }


def test_catalog_grid(capsys, tmp_path):
    out = tmp_path / "w.jsonl"
    code, _, _ = run(capsys, "catalog", "--family", "W", "-n", "2,4", "-d", "2,4,6", "--out", str(out), "--audit")
    assert code == 0
    records = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert len(records) == 6
    assert all(r["betti"][r["instance"]["n"]] == 2 for r in records)
    first = out.read_bytes()
    run(capsys, "catalog", "--family", "W", "-n", "2,4", "-d", "2,4,6", "--out", str(out), "--jobs", "2")
    assert out.read_bytes() == first


def test_catalog_h(capsys):
    code, out, _ = run(capsys, "catalog", "--family", "H", "-a", "2,2,2,2,2")
    record = json.loads(out)
    assert code == 0
    assert record["kollar"]["admissible"] is False
    assert "outside theorem hypotheses" in record["flags"]


def test_catalog_pretty_single_document(capsys):
    code, out, _ = run(capsys, "catalog", "--family", "V", "-n", "3", "-d", "5", "--pretty")
    assert isinstance(json.loads(out), list)


def test_audit_detects_tampering():
    record = build_record(FamilyInstance.W(2, 4))
    assert audit_record(record) == []
    record["milnor_number"] += 1
    assert audit_record(record)


def test_catalog_parallel_order():
    insts = list(iter_instances("V", [1, 2, 3], [3, 2]))
    assert build_catalog(insts, jobs=3) == build_catalog(insts, jobs=1)


def test_verify_passes_and_perturb_fails(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-d", "4", "--skip-models")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--max-d", "4", "--skip-models", "--perturb")
    data = json.loads(out)
    assert code == 1
    assert data["failures"][0]["location"] == {"n": 0, "d": 2}


def test_verify_empty_range_warns(capsys, caplog):
    code, out, _ = run(capsys, "verify", "--max-n", "-1", "--max-d", "1", "--skip-models")
    assert code == 0
    assert "empty range" in caplog.text
    assert json.loads(out)["warnings"]


def test_verify_default_grid(capsys):
    code, out, _ = run(capsys, "verify")
    data = json.loads(out)
    assert code == 0
    assert data["skipped"] and all("skipped: degree cap" in s["reason"] for s in data["skipped"])
