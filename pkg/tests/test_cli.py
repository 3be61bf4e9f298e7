import json

import pytest

from hyperwall.cli import main
from lattice_fixtures import DELTA, H

RANK2_DOC = {
    "picard_basis": [list(H), list(DELTA)],
    "g": [3, -1],
    "m": [2, 1],
}


@pytest.fixture
def rank2_file(tmp_path):
    path = tmp_path / "rank2.json"
    path.write_text(json.dumps(RANK2_DOC))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLatticeInfo:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "lattice-info")
        assert code == 0
        assert "rank: 23" in out
        assert "signature: (3, 20)" in out
        assert "determinant: 2" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "lattice-info", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["rank"] == 23
        assert report["signature"] == [3, 20]
        assert report["determinant"] == 2
        assert report["basis_labels"][0] == "e1"
        assert report["basis_labels"][-1] == "delta"


class TestWalls:
    def test_default_targets(self, capsys, rank2_file):
        code, out, _ = run(capsys, "walls", "--input", rank2_file, "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert [w["picard"] for w in report["walls"]] == [[0, 1]]
        wall = report["walls"][0]
        assert wall["square"] == -2 and wall["div"] == 2
        assert wall["kind"] == "divisorial_half"
        assert wall["dual_square"] == "-1/2"
        assert len(wall["ambient"]) == 23

    def test_targets_override_with_cap(self, capsys, tmp_path):
        doc = {"picard_basis": RANK2_DOC["picard_basis"], "g": [3, -1]}
        path = tmp_path / "nom.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(
            capsys,
            "walls",
            "--input",
            str(path),
            "--targets",
            "-10:2",
            "--level-cap",
            "60",
            "--format",
            "json",
        )
        assert code == 0
        report = json.loads(out)
        assert [w["picard"] for w in report["walls"]] == [[2, -3], [2, 3]]
        assert all(w["kind"] == "lagrangian_plane" for w in report["walls"])

    def test_missing_bound_is_validation_error(self, capsys, tmp_path):
        doc = {"picard_basis": RANK2_DOC["picard_basis"], "g": [3, -1]}
        path = tmp_path / "nobound.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2
        assert "level_cap" in err

    def test_options_from_file(self, capsys, tmp_path):
        doc = {
            "picard_basis": RANK2_DOC["picard_basis"],
            "g": [3, -1],
            "options": {"targets": [[-10, 2]], "level_cap": 60},
        }
        path = tmp_path / "opts.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "walls", "--input", str(path), "--format", "json")
        assert code == 0
        assert [w["picard"] for w in json.loads(out)["walls"]] == [[2, -3], [2, 3]]


class TestAmple:
    def test_not_nef(self, capsys, rank2_file):
        code, out, _ = run(capsys, "ample", "--input", rank2_file, "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "not_nef"
        assert report["certainty"] == "conjectural"
        assert report["witnesses"][0]["picard"] == [0, 1]
        assert report["witnesses"][0]["pairing_with_m"] == -2

    def test_ample_when_m_equals_g(self, capsys, tmp_path):
        doc = dict(RANK2_DOC, m=[3, -1])
        path = tmp_path / "mg.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "ample", "--input", str(path), "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "ample"
        assert report["certainty"] == "proven"
        assert report["witnesses"] == []

    def test_missing_m_rejected(self, capsys, tmp_path):
        doc = {"picard_basis": RANK2_DOC["picard_basis"], "g": [3, -1]}
        path = tmp_path / "nom.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "ample", "--input", str(path))
        assert code == 2
        assert "'m'" in err

    def test_non_ample_polarization_exits_three(self, capsys, tmp_path):
        doc = dict(RANK2_DOC, g=[1, 0])
        path = tmp_path / "badg.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "ample", "--input", str(path))
        assert code == 3
        assert "not ample" in err


class TestNefThreshold:
    def test_fixture(self, capsys, rank2_file):
        code, out, _ = run(capsys, "nef-threshold", "--input", rank2_file, "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["tau"] == "1/2"
        assert [w["picard"] for w in report["walls"]] == [[0, 1]]

    def test_text_output(self, capsys, rank2_file):
        code, out, _ = run(capsys, "nef-threshold", "--input", rank2_file)
        assert code == 0
        assert "tau: 1/2" in out

    def test_precondition_exit_code(self, capsys, tmp_path):
        doc = dict(RANK2_DOC, m=[1, 1])  # isotropic m
        path = tmp_path / "iso.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "nef-threshold", "--input", str(path))
        assert code == 3
        assert "(m, m)" in err


class TestClassify:
    def test_delta(self, capsys, rank2_file):
        rho = ",".join(str(x) for x in DELTA)
        code, out, _ = run(
            capsys, "classify", "--input", rank2_file, "--rho", rho, "--format", "json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["kind"] == "divisorial_half"
        assert report["square"] == -2 and report["div"] == 2
        assert report["dual_square"] == "-1/2"
        assert report["dc_values"] == [-1, -2]
        assert report["picard_coords"] == ["0", "1"]

    def test_vector_outside_span(self, capsys, rank2_file):
        coords = [0] * 23
        coords[2] = 1
        coords[3] = -1
        rho = ",".join(str(x) for x in coords)
        code, out, _ = run(
            capsys, "classify", "--input", rank2_file, "--rho", rho, "--format", "json"
        )
        assert code == 0
        assert json.loads(out)["picard_coords"] is None

    def test_bad_rho_rejected(self, capsys, rank2_file):
        code, _, err = run(capsys, "classify", "--input", rank2_file, "--rho", "1,2,3")
        assert code == 2
        assert "23" in err

    def test_nonnegative_square_rejected(self, capsys, rank2_file):
        rho = ",".join(str(x) for x in H)
        code, _, err = run(capsys, "classify", "--input", rank2_file, "--rho", rho)
        assert code == 2
        assert "negative square" in err


class TestLagrangian:
    def test_report(self, capsys):
        code, out, _ = run(capsys, "lagrangian", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["eliminant"]["quadratic"] == "23x^2+20x-2100=0"
        assert report["eliminant"]["coefficients"] == [23, 20, -2100]
        assert report["roots"] == ["-10", "210/23"]
        admissible = [s for s in report["solutions"] if s["admissible"]]
        assert admissible == [
            {"lambda_square": "-10", "a": "1/20", "b": "1/8", "admissible": True}
        ]

    def test_text(self, capsys):
        code, out, _ = run(capsys, "lagrangian")
        assert code == 0
        assert "23x^2+20x-2100=0" in out
        assert "inadmissible" in out


class TestInputValidation:
    def test_invalid_json_reports_line(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"picard_basis": [[1,2,\n???')
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2
        assert "line" in err

    def test_unknown_field_rejected(self, capsys, tmp_path):
        doc = dict(RANK2_DOC, extra=1)
        path = tmp_path / "extra.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2
        assert "extra" in err

    def test_unknown_option_rejected(self, capsys, tmp_path):
        doc = dict(RANK2_DOC, options={"bogus": 1})
        path = tmp_path / "opt.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2
        assert "bogus" in err

    def test_wrong_vector_length(self, capsys, tmp_path):
        doc = {"picard_basis": [[1, 2, 3]], "g": [1]}
        path = tmp_path / "short.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2
        assert "picard_basis[0]" in err

    def test_dependent_basis_rejected(self, capsys, tmp_path):
        doc = {
            "picard_basis": [list(H), [2 * x for x in H]],
            "g": [1, 0],
        }
        path = tmp_path / "dep.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2
        assert "dependent" in err

    def test_integer_strings_accepted(self, capsys, tmp_path):
        doc = {
            "picard_basis": RANK2_DOC["picard_basis"],
            "g": ["3", "-1"],
            "m": ["2", "1"],
        }
        path = tmp_path / "strs.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "ample", "--input", str(path), "--format", "json")
        assert code == 0
        assert json.loads(out)["status"] == "not_nef"

    def test_float_rejected(self, capsys, tmp_path):
        doc = dict(RANK2_DOC, g=[3.5, -1])
        path = tmp_path / "float.json"
        path.write_text(json.dumps(doc))
        code, _, err = run(capsys, "walls", "--input", str(path))
        assert code == 2

    def test_integers_beyond_double_precision(self, capsys, tmp_path):
        # coordinates around 10^20 must survive exactly (as strings or
        # JSON numbers); the verdict for m = g is ample either way
        big = 10**20
        doc = {
            "picard_basis": RANK2_DOC["picard_basis"],
            "g": [str(3 * big), str(-big)],
            "m": [3 * big, -big],
        }
        path = tmp_path / "big.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "ample", "--input", str(path), "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "ample"
        assert report["input"]["g"] == [3 * big, -big]

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "walls", "--input", "/nonexistent.json")
        assert code == 2
        assert "cannot read" in err


class TestRoundTrip:
    def test_rerun_is_identical(self, capsys, rank2_file):
        code, first, _ = run(capsys, "ample", "--input", rank2_file, "--format", "json")
        assert code == 0
        code, second, _ = run(capsys, "ample", "--input", rank2_file, "--format", "json")
        assert first == second

    def test_echoed_input_reproduces_report(self, capsys, tmp_path, rank2_file):
        code, out, _ = run(capsys, "nef-threshold", "--input", rank2_file, "--format", "json")
        assert code == 0
        report = json.loads(out)
        echoed = tmp_path / "echo.json"
        echoed.write_text(json.dumps(report["input"]))
        code, out2, _ = run(capsys, "nef-threshold", "--input", str(echoed), "--format", "json")
        assert code == 0
        assert json.loads(out2) == report
