import json
import math
import pathlib

from homsurf import cli
from homsurf.catalogue import ROWS, enumerate_catalogue, labels

GOLDEN = pathlib.Path(__file__).parent / "golden" / "catalogue_labels.txt"


def test_row_count_and_uniqueness():
    ls = labels()
    assert len(ls) >= 50
    assert len(set(ls)) == len(ls)


def test_catalogue_matches_golden():
    want = GOLDEN.read_text().split()
    assert labels() == want


def test_catalogue_order():
    ls = labels()
    assert ls[:3] == ["A1", "A2", "A3"]
    assert ls[-1] == "D3"
    assert ls.index("Bβ1") < ls.index("Bβ1A0") < ls.index("Bβ2")


def test_filter_c_rows():
    got = [r.label for r in enumerate_catalogue("C")]
    assert got == ["C2", "C2′", "C3", "C5", "C5′", "C6", "C7", "C8", "C9", "C9′"]
    assert enumerate_catalogue("ZZZ") == []
    assert [r.label for r in enumerate_catalogue("Bb2")] == ["Bβ2", "Bβ2′"]


def test_unspecified_stabilizers_are_flagged():
    by_label = {r.label: r for r in ROWS}
    assert by_label["D2_3"].stabilizer == "unspecified-in-paper"
    assert by_label["Bβ2′"].stabilizer.endswith("/?")
    assert by_label["A2"].stabilizer == "GL(2,C)"


def test_policy_column_consistency():
    from homsurf.families import quotient_policy

    by_label = {r.label: r for r in ROWS}
    for label in ("A1", "C3", "C8", "D3", "Bγ4"):
        assert by_label[label].quotient_policy == "none"
        assert quotient_policy(label).kind == "none"
    for label in ("C2", "C5", "D1", "D2", "Bβ1", "Bβ2", "C9"):
        assert by_label[label].quotient_policy == "policy"
        assert quotient_policy(label).kind == "policy"


# ---------------------------------------------------------------------------
# the command line


def test_cli_catalogue(capsys):
    assert cli.main(["catalogue"]) == 0
    out = capsys.readouterr().out
    assert "A1" in out and "D3" in out
    assert cli.main(["catalogue", "--filter", "C", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["label"] for r in rows] == [r.label for r in enumerate_catalogue("C")]


def test_cli_classify_uaff(tmp_path, capsys):
    f = tmp_path / "gens.json"
    f.write_text(
        json.dumps(
            {"ambient": "uaff", "generators": [{"a": {"re": 0, "im": 0}, "b": {"re": 1, "im": 0}}]}
        )
    )
    assert cli.main(["classify", str(f)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["label"] == "D2_1"


def test_cli_classify_c2(tmp_path, capsys):
    f = tmp_path / "gens.json"
    f.write_text(
        json.dumps(
            {"ambient": "C2", "generators": [[{"re": 1, "im": 0}, {"re": 0, "im": 0}]]}
        )
    )
    assert cli.main(["classify", str(f)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["label"] == "D1_1"


def test_cli_classify_qd(tmp_path, capsys):
    f = tmp_path / "gens.json"
    divisor = {
        "points": [
            {"re": 0.0, "im": 0.0, "mult": 1},
            {"re": 0.0, "im": 2 * math.pi, "mult": 1},
        ]
    }
    f.write_text(
        json.dumps(
            {
                "ambient": "qd",
                "divisor": divisor,
                "generators": [
                    {"w": {"re": 1, "im": 0}, "s": {"re": 0, "im": 0}},
                    {"w": {"re": 0, "im": 0}, "s": {"re": 1, "im": 0}},
                ],
            }
        )
    )
    assert cli.main(["classify", str(f)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["label"] == "Bβ1D"


def test_cli_classify_bad_ambient(tmp_path, capsys):
    f = tmp_path / "gens.json"
    f.write_text(json.dumps({"ambient": "nope", "generators": []}))
    assert cli.main(["classify", str(f)]) == 2


def test_cli_classify_non_discrete_is_input_error(tmp_path, capsys):
    f = tmp_path / "gens.json"
    f.write_text(
        json.dumps(
            {
                "ambient": "uaff",
                "generators": [
                    {"a": {"re": 0, "im": 0}, "b": {"re": 1, "im": 0}},
                    {"a": {"re": 0, "im": 0}, "b": {"re": math.sqrt(2), "im": 0}},
                ],
            }
        )
    )
    assert cli.main(["classify", str(f)]) == 2


def test_cli_act_d1(tmp_path, capsys):
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    e.write_text(json.dumps({"v": [{"re": 1, "im": 0}, {"re": 2, "im": 0}]}))
    p.write_text(json.dumps({"z": {"re": 0, "im": 0}, "w": {"re": 0, "im": 0}}))
    assert cli.main(["act", "--family", "D1", "--element", str(e), "--point", str(p)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["z"]["re"] == 1 and out["w"]["re"] == 2


def test_cli_act_d2_matrix_oracle_value(tmp_path, capsys):
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    e.write_text(json.dumps({"a": {"re": 0, "im": math.pi}, "b": {"re": 0, "im": 0}}))
    p.write_text(json.dumps({"a": {"re": 0, "im": 0}, "b": {"re": 1, "im": 0}}))
    assert cli.main(["act", "--family", "D2", "--element", str(e), "--point", str(p)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["a"]["im"] - math.pi) < 1e-12
    assert abs(out["b"]["re"] + 1.0) < 1e-12


def test_cli_act_bb1_with_cover(tmp_path, capsys):
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    divisor = {
        "points": [
            {"re": 0.0, "im": 0.0, "mult": 1},
            {"re": 0.0, "im": 2 * math.pi, "mult": 1},
        ]
    }
    fjson = {
        "terms": [
            {"lambda": {"re": 0.0, "im": 0.0}, "coeffs": [{"re": 0.5, "im": 0.0}]}
        ]
    }
    e.write_text(
        json.dumps({"divisor": divisor, "t": {"re": 1, "im": 0}, "f": fjson, "cover": {"n": 1}})
    )
    p.write_text(json.dumps({"z": {"re": 0, "im": 0}, "w": {"re": 0, "im": 0}}))
    assert cli.main(
        ["act", "--family", "Bb1", "--element", str(e), "--point", str(p), "--cover", "B"]
    ) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["cover"] == "B"
    # cover (e^{2 pi i z}, w) of the translated point (1, 0.5)
    assert abs(out["point"][0]["re"] - 1.0) < 1e-9
    assert abs(out["point"][1]["re"] - 0.5) < 1e-9


def test_cli_act_bb1_double_origin(tmp_path, capsys):
    # divisor 2[0], g = (1, z), x = (0, 0) -> (1, 1)
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    divisor = {"points": [{"re": 0.0, "im": 0.0, "mult": 2}]}
    fjson = {
        "terms": [
            {"lambda": {"re": 0.0, "im": 0.0}, "coeffs": [{"re": 0.0, "im": 0.0}, {"re": 1.0, "im": 0.0}]}
        ]
    }
    e.write_text(json.dumps({"divisor": divisor, "t": {"re": 1, "im": 0}, "f": fjson}))
    p.write_text(json.dumps({"z": {"re": 0, "im": 0}, "w": {"re": 0, "im": 0}}))
    assert cli.main(["act", "--family", "Bβ1", "--element", str(e), "--point", str(p)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["z"]["re"] - 1.0) < 1e-12 and abs(out["w"]["re"] - 1.0) < 1e-12


def test_cli_act_cover_with_torus_output(tmp_path, capsys):
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    divisor = {
        "points": [
            {"re": 0.0, "im": 0.0, "mult": 1},
            {"re": 0.0, "im": 2 * math.pi, "mult": 1},
        ]
    }
    fjson = {"terms": []}
    e.write_text(
        json.dumps(
            {
                "divisor": divisor,
                "t": {"re": 0.25, "im": 0},
                "f": fjson,
                "cover": {"n": 1, "tau": {"re": 0.2, "im": 1.3}},
            }
        )
    )
    p.write_text(json.dumps({"z": {"re": 0, "im": 0}, "w": {"re": 0.5, "im": 0}}))
    assert cli.main(
        ["act", "--family", "Bb1", "--element", str(e), "--point", str(p), "--cover", "G"]
    ) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["cover"] == "G"
    assert "torus" in out["point"][1]
    assert abs(out["point"][1]["torus"]["re"] - 0.5) < 1e-12


def test_cli_act_cover_bb2(tmp_path, capsys):
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    divisor = {
        "points": [
            {"re": 0.0, "im": 0.0, "mult": 1},
            {"re": 0.0, "im": 2 * math.pi, "mult": 1},
        ]
    }
    e.write_text(
        json.dumps(
            {
                "divisor": divisor,
                "t": {"re": 1.0, "im": 0},
                "lambda": {"re": 2.0, "im": 0},
                "f": {"terms": []},
                "cover": {"n": 1},
            }
        )
    )
    p.write_text(json.dumps({"z": {"re": 0, "im": 0}, "w": {"re": 1.0, "im": 0}}))
    assert cli.main(
        ["act", "--family", "Bb2", "--element", str(e), "--point", str(p), "--cover", "Bb2"]
    ) == 0
    out = json.loads(capsys.readouterr().out)
    # (z, w) -> (z + 1, 2w) then covered by (e^{2 pi i z}, w)
    assert abs(out["point"][0]["re"] - 1.0) < 1e-9
    assert abs(out["point"][1]["re"] - 2.0) < 1e-9


def test_cli_act_bg1_plane(tmp_path, capsys):
    e = tmp_path / "e.json"
    p = tmp_path / "p.json"
    e.write_text(
        json.dumps(
            {
                "n": 2,
                "c": {"re": 2.0, "im": 0.0},
                "lam": {"re": math.log(2), "im": 0.0},
                "b": {"re": 0, "im": 0},
                "poly": [{"re": 0, "im": 0}] * 3,
            }
        )
    )
    p.write_text(json.dumps({"z": {"re": 1, "im": 0}, "w": {"re": 1, "im": 0}}))
    assert cli.main(["act", "--family", "Bg1", "--element", str(e), "--point", str(p)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(out["z"]["re"] - 2.0) < 1e-10 and abs(out["w"]["re"] - 4.0) < 1e-10


def test_cli_act_unknown_family(tmp_path):
    e = tmp_path / "e.json"
    e.write_text("{}")
    assert cli.main(["act", "--family", "QQ7", "--element", str(e), "--point", str(e)]) == 2


def test_cli_verify_single_family(capsys):
    assert cli.main(["verify", "D2", "--samples", "25", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "D2" in out and "pass" in out


def test_cli_verify_unknown_suite(capsys):
    assert cli.main(["verify", "QQQ", "--samples", "5", "--seed", "1"]) == 2


def test_cli_verify_json(capsys):
    assert cli.main(["verify", "C9", "--samples", "25", "--seed", "2", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["family"] == "C9" and rows[0]["passed"]
    names = " ".join(rows[0]["checks"])
    assert "quadric" in names


def test_cli_verify_determinism(capsys):
    assert cli.main(["verify", "Bβ1", "--samples", "25", "--seed", "5", "--json"]) == 0
    first = capsys.readouterr().out
    assert cli.main(["verify", "Bβ1", "--samples", "25", "--seed", "5", "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
