import io
import json
import math

import pytest

from bpaprob.cli import main
from bpaprob.documents import parse_bpa

EX1 = "frame: w1 w2 w3 w4\nw1 w2 w3 w4: 1\n"
EX2 = "frame: w1 w2 w3\nw1: 0.4\nw2: 0.05\nw3: 0.1\nw1 w2: 0.1\nw1 w3: 0.2\nw1 w2 w3: 0.15\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"ex1.bpa": EX1, "ex2.bpa": EX2, "bad.bpa": "frame: a b\na: 0.6\n"}.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def values(text):
    rows = [ln.split("\t") for ln in text.splitlines() if "\t" in ln]
    return {k: float(v) for k, v in rows}


def test_transform_example1(files):
    code, out = run("transform", files["ex1.bpa"], "--method", "entropy-match")
    assert code == 0
    assert list(values(out).values()) == pytest.approx([0.25] * 4, abs=1e-6)
    assert "regime: above-max" in out
    assert "entropy base: 2 (bits)" in out


def test_transform_example2(files):
    code, out = run("transform", files["ex2.bpa"])
    assert code == 0
    assert list(values(out).values()) == pytest.approx([0.4, 0.3, 0.3], abs=1e-6)


@pytest.mark.parametrize("method", ["pignistic", "plausibility", "relative-belief", "proportional"])
def test_transform_baselines(files, method):
    code, out = run("transform", files["ex2.bpa"], "--method", method, "--base", "e")
    assert code == 0
    assert sum(values(out).values()) == pytest.approx(1.0, abs=1e-5)
    assert "e (nats)" in out


def test_transform_undefined(files):
    code, _ = run("transform", files["ex1.bpa"], "--method", "relative-belief")
    assert code == 1


def test_entropy(files):
    code, out = run("entropy", files["ex2.bpa"])
    assert code == 0 and "deng entropy: 3.180776" in out
    assert "shannon" not in out
    p = files["ex2.bpa"].replace("ex2", "bayes")
    open(p, "w").write("frame: a b\na: 0.5\nb: 0.5\n")
    code, out = run("entropy", p, "--base", "2")
    assert "deng entropy: 1.000000" in out and "shannon entropy: 1.000000" in out


def test_bounds(files):
    code, out = run("bounds", files["ex2.bpa"])
    assert code == 0
    assert "w1     0.400000  0.850000" in out
    assert "w2     0.050000  0.300000" in out
    assert "w3     0.100000  0.450000" in out


def test_validate(files):
    assert run("validate", files["ex2.bpa"])[0] == 0
    code, out = run("validate", files["bad.bpa"])
    assert code == 1 and "invalid" in out


def test_validate_capacity(tmp_path):
    p = tmp_path / "big.bpa"
    labels = " ".join(f"x{i}" for i in range(31))
    p.write_text(f"frame: {labels}\nx0: 1\n")
    assert run("validate", str(p))[0] == 2
    assert run("bounds", str(p))[0] == 2


def test_parse_failure_exit_code(files):
    assert run("transform", files["bad.bpa"])[0] == 1
    assert run("bounds", "/nonexistent/file.bpa")[0] == 1


def test_compare_table_and_csv(files, tmp_path):
    code, out = run("compare", files["ex2.bpa"])
    assert code == 0 and "entropy-match" in out and "deng entropy: 3.180776" in out
    code, out = run("compare", "--batch", str(tmp_path), "--csv")
    # bad.bpa fails to parse, so batch mode reports an error
    assert code == 1
    (tmp_path / "bad.bpa").unlink()
    code, out = run("compare", "--batch", str(tmp_path), "--csv", "--jobs", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1 + 2 * 5
    assert "ex1.bpa" in lines[1] and "ex2.bpa" in lines[-1]


def test_random_roundtrip():
    code, out = run("random", "--n", "3", "--focal", "4", "--seed", "7")
    assert code == 0
    frame, m = parse_bpa(out)
    assert frame.n == 3 and len(m) == 4
    code2, out2 = run("random", "--n", "3", "--focal", "4", "--seed", "7")
    assert out == out2
    code, out = run("random", "--n", "3", "--focal", "4", "--seed", "7", "--json")
    assert json.loads(out)["frame"] == ["w1", "w2", "w3"]


def test_random_out_of_range():
    assert run("random", "--n", "2", "--focal", "4", "--seed", "1")[0] == 1


def test_precision_flag(files):
    code, out = run("--precision", "3", "transform", files["ex2.bpa"])
    assert "w1\t0.400" in out and "0.400000" not in out
