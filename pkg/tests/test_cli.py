import io
import json
from pathlib import Path

import pytest

from qlink import fixtures
from qlink.classify import ClassificationReport
from qlink.cli import main
from qlink.density import DensityOperator
from qlink.qstate import PureState, chain, ghz, w3

GOLDEN = Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_human():
    code, out, _ = run("parse", "1/sqrt(2)(|000> + |111>)")
    assert code == 0
    assert "3-qubit state" in out
    assert "|000>" in out and "|111>" in out and "|010>" not in out


def test_parse_json_round_trip():
    code, out, _ = run("parse", "w", "--format", "json")
    assert code == 0
    assert (PureState.from_dict(json.loads(out)).amplitudes == w3().amplitudes).all()


def test_parse_normalize():
    code, _, err = run("parse", "|00> + |11>")
    assert code == 2 and "norm" in err
    code, _, _ = run("parse", "|00> + |11>", "--normalize")
    assert code == 0


def test_parse_error_reports_position():
    code, _, err = run("parse", "|0> + |2>")
    assert code == 2
    assert "position 7" in err


def test_expr_prefix_bypasses_fixture_names():
    code, out, _ = run("parse", "expr:-|1>", "--format", "json")
    assert code == 0
    assert json.loads(out)["amplitudes"] == [[0.0, 0.0], [-1.0, 0.0]]


def test_reduce_w():
    code, out, _ = run("reduce", "w", "--trace-out", "A", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["kept"] == "BC"
    assert data["concurrence"] == pytest.approx(2 / 3, abs=1e-9)
    assert data["ppt_separable"] is False
    DensityOperator.from_dict(data["reduced"])


def test_reduce_human_ghz():
    code, out, _ = run("reduce", "ghz", "-t", "A")
    assert code == 0
    assert "(separable)" in out and "rho_BC" in out


def test_reduce_single_qubit_left():
    code, out, _ = run("reduce", "ghz", "-t", "BC", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["purity"] == pytest.approx(0.5)
    assert "concurrence" not in data


@pytest.mark.parametrize("bad", ["ABC", "D", ""])
def test_reduce_bad_subset(bad):
    code, _, _ = run("reduce", "ghz", "-t", bad)
    assert code == 2


def test_measure_ghz_x():
    code, out, _ = run("measure", "ghz", "--target", "A", "--basis", "X", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [o["label"] for o in data["outcomes"]] == ["+", "-"]
    for o in data["outcomes"]:
        assert o["probability"] == pytest.approx(0.5)
        assert o["remaining_separable"] is False
        assert o["remaining_concurrence"] == pytest.approx(1.0, abs=1e-9)


def test_measure_ghz_z_human():
    code, out, _ = run("measure", "ghz", "--basis", "Z")
    assert code == 0
    assert out.count("separable, concurrence 0") == 2


def test_measure_custom_basis():
    code, out, _ = run("measure", "|0>", "--basis", "custom:0.6,0.8", "--format", "json")
    assert code == 0
    probs = [o["probability"] for o in json.loads(out)["outcomes"]]
    assert probs == pytest.approx([0.36, 0.64])


@pytest.mark.parametrize("basis", ["Y", "custom:1,1", "custom:1", "custom:a,b"])
def test_measure_bad_basis(basis):
    code, _, _ = run("measure", "ghz", "--basis", basis)
    assert code == 2


def test_measure_zero_probability_outcome():
    code, out, _ = run("measure", "|000>", "--format", "json")
    assert code == 0
    outcomes = json.loads(out)["outcomes"]
    assert outcomes[1]["probability"] == 0.0 and outcomes[1]["post_state"] is None


@pytest.mark.parametrize(
    "ref, expected",
    [("ghz", "BORROMEAN"), ("w", "THREE_HOPF"), ("product", "UNLINKED"), ("chain", "CHAIN(B)"), ("chain:0.6,0.8", "CHAIN(B)")],
)
def test_classify_fixtures(ref, expected):
    code, out, _ = run("classify", ref, "--format", "json")
    assert code == 0
    report = ClassificationReport.from_json(out)
    assert str(report.link) == expected


def test_classify_human_has_sketch():
    code, out, _ = run("classify", "w")
    assert code == 0
    assert "link: THREE_HOPF" in out and "(B)=====X=====(C)" in out


def test_classify_wrong_size():
    code, _, err = run("classify", "bell")
    assert code == 2 and "3-qubit" in err


def test_classify_tolerance_changes_verdict():
    # with a loose tolerance the weakly linked chain collapses
    code, out, _ = run("classify", "chain:0.01,0.9999499987499375", "--tol", "0.1", "--format", "json")
    assert code == 0
    assert json.loads(out)["link"] == "UNLINKED"


def test_bad_tolerance():
    assert run("classify", "ghz", "--tol", "-1")[0] == 2


def test_unknown_command_and_missing_args():
    assert run("frobnicate")[0] == 2
    assert run("reduce", "ghz")[0] == 2


def test_demo_passes_and_matches_golden():
    code, out, _ = run("demo", "--format", "json")
    assert code == 0
    data = json.loads(out)
    golden = json.loads((GOLDEN / "demo.json").read_text())
    assert data["all_pass"] and len(data["rows"]) == len(golden["rows"])
    for row, ref in zip(data["rows"], golden["rows"]):
        assert row["name"] == ref["name"] and row["pass"] == ref["pass"]
        if isinstance(ref["computed"], float):
            assert row["computed"] == pytest.approx(ref["computed"], abs=1e-12)
        else:
            assert row["computed"] == ref["computed"]


def test_demo_json_is_byte_stable():
    assert run("demo", "--format", "json")[1] == run("demo", "--format", "json")[1]


def test_demo_tight_tolerance_fails():
    code, out, _ = run("demo", "--tol", "1e-17")
    assert code == 1
    assert "FAIL" in out


def test_demo_human_summary():
    code, out, _ = run("demo")
    assert code == 0
    assert out.rstrip().endswith("rows pass")


def test_packaged_fixtures_match_manifest():
    assert fixtures.verify() == []


def test_regenerated_fixtures_are_byte_identical(tmp_path):
    fixtures.write_fixtures(tmp_path)
    for f in sorted(fixtures.PACKAGED_DIR.iterdir()):
        assert (tmp_path / f.name).read_bytes() == f.read_bytes(), f.name


def test_fixture_values():
    assert (fixtures.resolve("ghz").amplitudes == ghz(3).amplitudes).all()
    assert (fixtures.resolve("ghz6").amplitudes == ghz(6).amplitudes).all()
    assert (fixtures.resolve("chain:0.6,0.8").amplitudes == chain(0.6, 0.8).amplitudes).all()


def test_fixture_directory_override(tmp_path, monkeypatch):
    (tmp_path / "w.json").write_text(ghz(3).to_json())
    code, out, _ = run("classify", "w", "--fixtures", str(tmp_path), "--format", "json")
    assert json.loads(out)["link"] == "BORROMEAN"
    monkeypatch.setenv(fixtures.ENV_VAR, str(tmp_path))
    code, out, _ = run("classify", "w", "--format", "json")
    assert json.loads(out)["link"] == "BORROMEAN"


def test_missing_fixture_directory(tmp_path):
    assert run("classify", "ghz", "--fixtures", str(tmp_path / "nope"))[0] == 2


def test_corrupted_fixture_detected(tmp_path):
    fixtures.write_fixtures(tmp_path)
    (tmp_path / "w.json").write_text("{}")
    assert fixtures.verify(tmp_path) == ["w.json"]
    assert fixtures.main(["--verify", str(tmp_path)]) == 1
    code, _, err = run("classify", "w", "--fixtures", str(tmp_path))
    assert code == 2 and "PureState" in err
    (tmp_path / "w.json").write_text("not json")
    assert run("classify", "w", "--fixtures", str(tmp_path))[0] == 2


def test_fixture_errors():
    assert run("classify", "chain:0.6", "--format", "json")[0] == 2
    assert run("classify", "ghz:3")[0] == 2
