import io
import json
import subprocess
import sys

import pytest

from mindisc.cli import main
from mindisc.documents import CurveDocument, ResultDocument, emit


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def doc(**kw):
    return json.dumps(kw)


class TestEllipticMinimize:
    def test_scaled(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["elliptic-minimize", "--json"], doc(kind="elliptic", a=[0, 0, 0, 0, 64])
        )
        assert code == 0
        res = json.loads(out)
        assert res["minimal_model"] == {"kind": "elliptic", "a": ["0", "0", "0", "0", "1"]}
        assert res["transformation"]["u"] == "2"
        assert res["discriminant_after"] == "-432"

    def test_unchanged(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["elliptic-minimize", "--json"], doc(kind="elliptic", a=[0, 0, 0, -1, 0])
        )
        res = json.loads(out)
        assert code == 0
        assert res["minimal_model"]["a"] == ["0", "0", "0", "-1", "0"]
        assert res["transformation"] == {"u": "1", "r": "0", "s": "0", "t": "0"}

    def test_singular(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["elliptic-minimize"], doc(kind="elliptic", a=[0] * 5))
        assert code == 3
        assert "singular" in err

    def test_table(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys,
            monkeypatch,
            ["elliptic-minimize", "--certificate"],
            doc(kind="elliptic", a=["0", "0", "0", "0", "64"]),
        )
        assert code == 0
        assert "minimal model" in out and "[0, 0, 0, 0, 1]" in out
        assert "at p = 2" in out

    def test_file_argument(self, capsys, monkeypatch, tmp_path):
        path = tmp_path / "curve.json"
        path.write_text(doc(kind="elliptic", a=[0, 0, 0, 0, 64]))
        code, out, _ = run(capsys, monkeypatch, ["elliptic-minimize", "--json", str(path)])
        assert code == 0 and json.loads(out)["transformation"]["u"] == "2"

    def test_missing_file(self, capsys, monkeypatch, tmp_path):
        code, _, _ = run(capsys, monkeypatch, ["elliptic-minimize", str(tmp_path / "nope")])
        assert code == 2

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            doc(kind="elliptic", a=[0, 0, 0, 1]),
            doc(kind="elliptic", a=[0, 0, 0, "x", 1]),
            doc(kind="elliptic", a=[0, 0, 0, 1.5, 1]),
            doc(kind="hyperbolic", a=[0, 0, 0, 1, 1]),
            doc(kind="superelliptic", n=3, f=[1, 0, 0, 0, 1]),
        ],
    )
    def test_malformed(self, capsys, monkeypatch, text):
        code, _, _ = run(capsys, monkeypatch, ["elliptic-minimize"], text)
        assert code == 2

    def test_huge_integers_survive(self, capsys, monkeypatch):
        a6 = str(5 * 7**60)
        code, out, _ = run(capsys, monkeypatch, ["elliptic-minimize", "--json"], doc(kind="elliptic", a=["0", "0", "0", "0", a6]))
        res = json.loads(out)
        assert code == 0
        assert res["transformation"]["u"] == str(7**10)
        assert res["minimal_model"]["a"][4] == "5"


class TestSuperMinimize:
    def test_scaled(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["super-minimize", "--json"], doc(kind="superelliptic", n=3, f=[4096, 0, 0, 0, 1])
        )
        res = json.loads(out)
        assert code == 0
        assert res["minimal_model"]["f"] == ["1", "0", "0", "0", "1"]
        assert res["transformation"] == {"u": "2"}

    def test_unchanged(self, capsys, monkeypatch):
        code, out, _ = run(
            capsys, monkeypatch, ["super-minimize", "--json"], doc(kind="superelliptic", n=2, f=[1, 1, 0, 0, 0, 0, 1])
        )
        res = json.loads(out)
        assert code == 0 and res["transformation"] == {"u": "1"}
        assert res["minimal_model"]["f"] == ["1", "1", "0", "0", "0", "0", "1"]

    def test_singular(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["super-minimize"], doc(kind="superelliptic", n=3, f=[0, 0, 0, 0, 1]))
        assert code == 3

    def test_descending_input(self, capsys, monkeypatch):
        text = doc(kind="superelliptic", n=3, f=[1, 0, 0, 0, 4096], order="descending")
        code, out, _ = run(capsys, monkeypatch, ["super-minimize", "--json"], text)
        assert code == 0 and json.loads(out)["transformation"] == {"u": "2"}

    def test_certificate(self, capsys, monkeypatch):
        text = doc(kind="superelliptic", n=2, f=[2**12, 2**10, 0, 0, 0, 0, 1])
        code, out, _ = run(capsys, monkeypatch, ["super-minimize", "--json", "--certificate"], text)
        res = json.loads(out)
        assert res["certificate"] == {"101": "certified_minimal", "431": "certified_minimal"}
        assert res["factored_minimal_discriminant"] == {"sign": "-1", "factors": [["101", "1"], ["431", "1"]]}


class TestDiscriminant:
    def test_form(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["discriminant", "--form=-1,0,1", "--json"])
        assert code == 0
        assert json.loads(out) == {"discriminant": "4", "factorization": {"sign": "1", "factors": [["2", "2"]]}}

    def test_repeated_root(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["discriminant", "--form", "[0,0,1]", "--json"])
        assert code == 0
        assert json.loads(out) == {"discriminant": "0", "factorization": None}

    def test_elliptic(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["discriminant"], doc(kind="elliptic", a=[0, 0, 0, 0, 1]))
        assert code == 0
        assert out.strip() == "-432 = -1 * 2^4 * 3^3"

    def test_singular_elliptic_reports_zero(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["discriminant"], doc(kind="elliptic", a=[0] * 5))
        assert code == 0 and out.startswith("0")

    def test_superelliptic(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["discriminant"], doc(kind="superelliptic", n=3, f=[1, 0, 0, 0, 1]))
        assert out.strip() == "256 = 2^8"

    def test_degenerate(self, capsys, monkeypatch):
        code, _, err = run(capsys, monkeypatch, ["discriminant", "--form=1,0,0"])
        assert code == 2 and "degenerate" in err


class TestTransvectant:
    def test_omega(self, capsys, monkeypatch):
        code, out, _ = run(capsys, monkeypatch, ["transvectant", "1,0,1", "1,0,1", "2", "--json"])
        assert code == 0
        assert json.loads(out)["coefficients"] == ["2"]

    def test_product(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["transvectant", "1,2", "[1,1]", "0"])
        assert out.strip() == "[1, 3, 2]"

    def test_self_first(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["transvectant", "3,1,4,1", "3,1,4,1", "1"])
        assert out.strip() == "[0, 0, 0, 0, 0]"

    def test_rational_output(self, capsys, monkeypatch):
        _, out, _ = run(capsys, monkeypatch, ["transvectant", "1,0,0,1", "0,1,1", "1"])
        assert "/" in out

    def test_order_too_large(self, capsys, monkeypatch):
        code, _, _ = run(capsys, monkeypatch, ["transvectant", "1,0,1", "1,0,1", "3"])
        assert code == 2


def test_bad_usage_exits_2(capsys, monkeypatch):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_batch(capsys, monkeypatch, tmp_path):
    lines = [
        doc(kind="elliptic", a=[0, 0, 0, 0, 64]),
        doc(kind="elliptic", a=[0, 0, 0, 0, 0]),
        "{broken",
        doc(kind="elliptic", a=[1, -1, 1, 0, 0]),
    ]
    path = tmp_path / "batch.jsonl"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, monkeypatch, ["elliptic-minimize", "--json", "--batch", str(path)])
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert code == 3
    assert [r.get("exit_code", 0) for r in rows] == [0, 3, 2, 0]


def test_batch_parallel_matches_serial(capsys, monkeypatch, tmp_path):
    lines = [doc(kind="superelliptic", n=3, f=[k * 4096, 0, 0, 0, 1]) for k in range(1, 13)]
    path = tmp_path / "batch.jsonl"
    path.write_text("\n".join(lines))
    _, serial, _ = run(capsys, monkeypatch, ["super-minimize", "--json", "--batch", str(path)])
    _, parallel, _ = run(capsys, monkeypatch, ["super-minimize", "--json", "--batch", str(path), "--jobs", "3"])
    assert serial == parallel


def test_result_round_trip():
    from mindisc.documents import minimize_superelliptic, parse_json

    res = minimize_superelliptic(
        CurveDocument("superelliptic", n=2, f=(4096, 1024, 0, 0, 0, 0, 1), point=(0, 64)), certificate=True
    )
    text = emit(res)
    assert emit(ResultDocument.from_dict(parse_json(text))) == text
    assert res.minimal_model.point == (0, 64)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "mindisc", "elliptic-minimize", "--json"],
        input=doc(kind="elliptic", a=[0, 0, 0, 0, 64]),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["discriminant_after"] == "-432"
