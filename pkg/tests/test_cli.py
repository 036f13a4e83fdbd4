import io
import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from finpotent.cli import format_operator, main, parse_operator
from finpotent.finite_potent import COUNTABLE, FinitePotentOperator
from finpotent.generators import make_rng, random_any
from finpotent.matrix import Matrix
from finpotent.orders import shared_core_pair

A, B = shared_core_pair()


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, op in (("A", A), ("B", B)):
        p = tmp_path / f"{name}.json"
        p.write_text(format_operator(op, name))
        paths[name] = str(p)
    for name, rows in (("zero", [[0, 0], [0, 0]]), ("P", [[1, 0], [0, 0]]), ("I", [[1, 0], [0, 1]])):
        p = tmp_path / f"{name}.json"
        p.write_text(format_operator(FinitePotentOperator.from_rows(rows), name))
        paths[name] = str(p)
    return paths


def test_inspect_index_two_matrix(files):
    code, out, _ = run("inspect", files["A"])
    assert code == 0
    assert "index: 2, EP: false, W = span{e1,e2}" in out.splitlines()
    assert "U = span{e3,e4,e5}" in out


def test_inverse_core_refused(files):
    code, out, err = run("inverse", "--kind", "core", files["A"])
    assert code == 2
    assert out == ""
    assert "core inverse exists iff index ≤ 1" in err
    assert "index 2" in err


def test_inverse_drazin_prints_operator_file(files):
    code, out, _ = run("inverse", "--kind", "drazin", files["A"])
    assert code == 0
    doc = json.loads(out)
    assert doc["name"] == "drazin(A)"
    assert doc["entries"] == [[1, 1, "1/29"], [2, 2, "1/33"]]


def test_order_general_core_both_ways(files):
    for a, b in (("A", "B"), ("B", "A")):
        code, out, _ = run("order", "--relation", "general-core", files[a], files[b])
        assert code == 0
        assert "verdict: true" in out


def test_order_core_refuses_index_two(files):
    code, _, err = run("order", "--relation", "core", files["A"], files["B"])
    assert code == 2
    assert "index ≤ 1" in err


def test_hasse_writes_dot(files, tmp_path):
    dot = tmp_path / "h.dot"
    code, _, _ = run("hasse", "--relation", "core", files["I"], files["zero"], files["P"], "--out", str(dot))
    assert code == 0
    text = dot.read_bytes().decode()
    assert '"zero" -> "P";' in text and '"P" -> "I";' in text
    assert "\r" not in text


def test_hasse_general_core_flags_pair(files):
    code, out, _ = run("hasse", "--relation", "general-core", files["A"], files["B"])
    assert code == 0
    assert '// not antisymmetric: "A" <-> "B"' in out


def test_demo_csv():
    code, out, _ = run("demo", "nonclosed-image", "--max-m", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "m,target_norm,preimage_norm"
    assert lines[-1].endswith(",2.0")


def test_verify_file(files):
    code, out, _ = run("verify", files["P"])
    assert code == 0
    assert "FAIL" not in out


def test_verify_random_deterministic():
    first = run("verify", "--suite", "random", "--seed", "4", "--count", "2", "--dim", "3")
    second = run("verify", "--suite", "random", "--seed", "4", "--count", "2", "--dim", "3")
    assert first == second
    code, out, _ = first
    assert code == 0
    assert out.startswith("seed: 4\n")


def test_verify_needs_exactly_one_source(files):
    assert run("verify")[0] == 2
    assert run("verify", files["A"], "--suite", "random")[0] == 2


def test_bad_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "field": "rational",\n  "ambient": {"kind": "finite", "dim": 2},\n  "entries": [[1, 1, "1"],]\n}\n')
    code, _, err = run("inspect", str(p))
    assert code == 2
    assert f"{p}:4:" in err


def test_bad_entry_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "field": "rational",\n  "ambient": {"kind": "finite", "dim": 2},\n  "entries": [\n    [1, 1, "1"],\n    [3, 1, "1"]\n  ]\n}\n')
    code, _, err = run("inspect", str(p))
    assert code == 2
    assert f"{p}:6:5: index 3 outside 1..2" in err


@pytest.mark.parametrize("text,needle", [
    ('{"field": "real", "ambient": {"kind": "finite", "dim": 2}}', "field must be"),
    ('{"field": "rational", "ambient": {"kind": "finite", "dim": 0}}', "positive integer"),
    ('{"field": "rational", "ambient": {"kind": "finite", "support": 2}}', "dim"),
    ('{"field": "rational", "ambient": {"kind": "finite", "dim": 2}, "entries": [[1, 1, "0.5"]]}', "malformed"),
    ('{"field": "rational", "ambient": {"kind": "finite", "dim": 2}, "entries": [[1, 1, {"re": "1", "im": "1"}]]}', "entry (1, 1)"),
    ('{"field": "rational", "ambient": {"kind": "finite", "dim": 2}, "entries": [[1, 1, "1"], [1, 1, "2"]]}', "duplicate"),
    ('{"field": "rational", "ambient": {"kind": "finite", "dim": 2}, "extra": 1}', "unknown key"),
    ('[1, 2]', "top level"),
])
def test_parse_errors(text, needle):
    with pytest.raises(Exception) as info:
        parse_operator(text, "x.json")
    assert needle in str(info.value)
    assert str(info.value).startswith("x.json:1:")


def test_missing_file():
    code, _, err = run("inspect", "/nonexistent/op.json")
    assert code == 2
    assert "cannot read" in err


def test_unknown_kind_is_usage_error(files):
    assert run("inverse", "--kind", "bott-duffin", files["A"])[0] == 2


@given(st.integers(0, 10**6), st.sampled_from(["real", "complex"]), st.booleans())
@settings(max_examples=30, deadline=None)
def test_round_trip(seed, field, countable):
    op = random_any(3, make_rng(seed), field, ambient=COUNTABLE if countable else "finite")
    name, back = parse_operator(format_operator(op, "x"))
    assert back == op and name == "x"


def test_round_trip_zero_without_name():
    z = FinitePotentOperator(Matrix.zeros(2, 2), COUNTABLE)
    name, back = parse_operator(format_operator(z))
    assert back == z and name is None


def test_console_entry_no_color(files):
    env = dict(os.environ, NO_COLOR="1")
    proc = subprocess.run(
        [sys.executable, "-m", "finpotent", "verify", files["P"]],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert "\x1b[" not in proc.stdout
    assert "PASS" in proc.stdout
