"""End-to-end runs of the command-line interface through main(argv)."""

import csv
import io
import json

import agreebox as ab
from agreebox.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# generate and classify

def test_generate_then_classify(tmp_path, capsys):
    box_path = tmp_path / "pr.json"
    code, out, err = run(capsys, "generate", "--family", "pr", "--output", str(box_path))
    assert code == 0 and err == ""
    code, out, err = run(capsys, "classify", "--input", str(box_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["conclusion"] == "POSTQUANTUM"
    assert doc["local"] is False
    assert doc["tsirelson_gap"] == "-2"


def test_generate_warns_on_degenerate_parameters(tmp_path, capsys):
    code, out, err = run(
        capsys,
        "generate", "--family", "ccd",
        "--params", "r=0,s=0,t=0,u=0",
        "--output", str(tmp_path / "d.json"),
    )
    assert code == 0
    assert "warning: r>0 violated" in err


def test_generate_missing_params_is_a_parse_error(capsys):
    code, out, err = run(capsys, "generate", "--family", "ccd", "--params", "r=1/2")
    assert code == 2
    assert "needs parameters" in err


def test_generated_params_survive_classification(tmp_path, capsys):
    box_path = tmp_path / "t1.json"
    run(
        capsys,
        "generate", "--family", "ccd",
        "--params", "r=1/2,s=1/4,t=1/2,u=0",
        "--output", str(box_path),
    )
    code, out, err = run(capsys, "classify", "--input", str(box_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["ccd_form"]["params"] == {"r": "1/2", "s": "1/4", "t": "1/2", "u": "0"}
    assert doc["ccd_form"]["constraints_ok"] is True


def test_classify_rejects_signaling_box(tmp_path, capsys):
    from fractions import Fraction as F

    rows = {
        (0, 0): [1, 0, 0, 0],
        (0, 1): [1, 0, 0, 0],
        (1, 0): [0, 1, 0, 0],
        (1, 1): [0, 1, 0, 0],
    }
    box = ab.box_from_rows({k: list(map(F, v)) for k, v in rows.items()})
    path = tmp_path / "sig.json"
    path.write_text(ab.box_to_json(box))
    code, out, err = run(capsys, "classify", "--input", str(path))
    assert code == 3
    assert "no-signaling" in err


def test_classify_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, err = run(capsys, "classify", "--input", str(path))
    assert code == 2


def test_classify_missing_file(capsys):
    code, out, err = run(capsys, "classify", "--input", "/nonexistent/box.json")
    assert code == 2


# ---------------------------------------------------------------------------
# sweep

def test_sweep_grid_csv(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    code, out, err = run(
        capsys,
        "sweep", "--family", "ccd",
        "--grid", "r=1/2,s=0:1/2:1/4,t=1/2,u=0",
        "--output", str(out_path),
    )
    assert code == 0
    rows = list(csv.DictReader(out_path.open()))
    assert len(rows) == 3
    by_s = {row["s"]: row for row in rows}
    assert by_s["0"]["ccd"] == "false"  # conditionals agree at s = u
    assert by_s["1/4"]["ccd"] == "true"
    assert by_s["1/2"]["qA"] == "1"
    for row in rows:
        if row["ccd"] == "true":
            assert row["local"] == "false"
        assert row["family"] == "ccd"
        assert row["r_dec"].startswith("0.5")


def test_sweep_sampling_is_seeded(capsys):
    code, out1, err = run(
        capsys, "sweep", "--family", "ccd", "--sample", "6", "--seed", "11"
    )
    assert code == 0
    code, out2, err = run(
        capsys, "sweep", "--family", "ccd", "--sample", "6", "--seed", "11"
    )
    assert out1 == out2
    header = out1.splitlines()[0]
    assert header.startswith("family,r,r_dec,s,")


def test_sweep_pr_single_row(capsys):
    code, out, err = run(capsys, "sweep", "--family", "pr")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert rows[0]["ccd"] == "true"
    assert rows[0]["sd"] == "true"
    assert rows[0]["local"] == "false"
    assert rows[0]["gap"] == "-2"
    assert rows[0]["r"] == ""


def test_sweep_bad_grid(capsys):
    code, out, err = run(capsys, "sweep", "--family", "ccd", "--grid", "r=0:1")
    assert code == 2


def test_sweep_needs_grid_or_sample(capsys):
    code, out, err = run(capsys, "sweep", "--family", "ccd")
    assert code == 2


# ---------------------------------------------------------------------------
# reduce and ontology

def test_reduce_split_box(tmp_path, capsys):
    path = tmp_path / "split.json"
    path.write_text(ab.box_to_json(ab.split_output(ab.pr_box())))
    code, out, err = run(capsys, "reduce", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["plan"]["mode"] == "ccd"
    assert doc["plan"]["alpha_group"] == [0, 2]
    assert doc["box"]["nA"] == 2


def test_reduce_refusal_reports(tmp_path, capsys):
    path = tmp_path / "u.json"
    path.write_text(ab.box_to_json(ab.uniform_box()))
    code, out, err = run(capsys, "reduce", "--input", str(path), "--mode", "ccd")
    assert code == 3
    assert "common certainty" in err
    assert '"ccd": false' in err


def test_ontology_flags_signed_models(tmp_path, capsys):
    path = tmp_path / "pr.json"
    path.write_text(ab.box_to_json(ab.pr_box()))
    code, out, err = run(capsys, "ontology", "--input", str(path))
    assert code == 0
    doc = json.loads(out)
    assert doc["signed"] is True
    assert doc["omega"] == 16


def test_ontology_budget_exit(tmp_path, capsys):
    path = tmp_path / "pr.json"
    path.write_text(ab.box_to_json(ab.pr_box()))
    code, out, err = run(capsys, "ontology", "--input", str(path), "--budget", "8")
    assert code == 4


# ---------------------------------------------------------------------------
# verify-classical

def test_verify_classical_tiny(capsys):
    code, out, err = run(capsys, "verify-classical", "--params", "omega=2,denom=2")
    assert code == 0
    doc = json.loads(out)
    assert doc["instances"] == 46
    assert doc["violations"] == 0
    assert doc["complete"] is True


def test_verify_classical_clamped_exits_budget(capsys, monkeypatch):
    import agreebox.classical as classical

    monkeypatch.setattr(classical, "HARD_OMEGA_CAP", 2)
    monkeypatch.setattr(classical, "HARD_DENOM_CAP", 2)
    code, out, err = run(capsys, "verify-classical", "--params", "omega=3,denom=3")
    assert code == 4
    assert json.loads(out)["complete"] is False
