import json

import pytest

from matchroots.cli import main
from matchroots.graph import graph6_decode, graph6_encode, path_graph
from matchroots.matching import matching_polynomial
from matchroots.poly import format_poly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_mu_friendship(capsys):
    code, out, _ = run(capsys, "mu", "F(2)")
    assert code == 0
    assert out.splitlines()[0] == "x^5-6x^3+5x"
    assert "matching vector: 1 6 5" in out
    assert "max matching: 2" in out


def test_mu_charpoly_on_path(capsys):
    p4 = graph6_encode(path_graph(4)).decode()
    code, out, _ = run(capsys, "mu", "--charpoly", p4)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "x^4-3x^2+1"
    assert "charpoly: x^4-3x^2+1" in lines
    assert "forest: true" in lines


def test_mu_single_vertex(capsys):
    assert run(capsys, "mu", "@")[1].splitlines()[0] == "x"


def test_mu_json_round_trip(capsys):
    code, out, _ = run(capsys, "mu", "--format", "json", "--charpoly", "F(2)")
    d = json.loads(out)
    assert code == 0
    assert format_poly(matching_polynomial(graph6_decode(d["graph6"]))) == d["mu"]
    assert d["forest"] is False


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "T(2,3)")
    assert code == 0 and "z: 5" in out and "family: T(2,3)" in out
    assert run(capsys, "classify", "K_2")[1].startswith("z: 2")
    code, out, _ = run(capsys, "classify", "--format", "json", "L(1,2)")
    d = json.loads(out)
    assert d["z"] == 5
    assert [r["value"] for r in d["roots"]] == ["-√5", "-1", "0", "1", "√5"]


@pytest.mark.parametrize("argv, expected", [
    (("-n", "5", "--connected", "--count"), "21"),
    (("-n", "4", "--connected", "--count"), "6"),
    (("-n", "6", "--count"), "156"),
])
def test_enumerate_counts(capsys, argv, expected):
    code, out, _ = run(capsys, "enumerate", *argv)
    assert code == 0 and out.strip() == expected


def test_enumerate_threads_do_not_change_output(capsys):
    one = run(capsys, "enumerate", "-n", "6", "--connected")[1]
    two = run(capsys, "enumerate", "-n", "6", "--connected", "--threads", "2")[1]
    assert one == two
    assert len(one.splitlines()) == 112


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "-n", "11", "--count")
    assert code == 2 and "outside" in err


def test_verify_appendix(capsys, tmp_path):
    report = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", "appendix", "--report", str(report), "--no-timing")
    assert code == 0
    lines = [json.loads(line) for line in report.read_text(encoding="utf-8").splitlines()]
    rows = [d for d in lines if d["claim"][9:10].isdigit()]
    assert len(rows) == 30 and all(d["status"] == "confirmed" for d in rows)
    assert all(d["elapsed_ms"] == 0 for d in lines)
    assert "0 counterexample(s)" in out


def test_verify_comatching(capsys):
    code, out, _ = run(capsys, "verify", "comatching:K(4,3;1)", "--format", "json")
    (d,) = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [w["name"] for w in d["witnesses"]] == ["K_{1,5} ∪ K_3"]


def test_verify_friendship_small_cap(capsys):
    code, out, _ = run(capsys, "verify", "exceptions:friendship", "--cap", "7", "--format", "json")
    reports = {d["claim"]: d for d in map(json.loads, out.splitlines())}
    assert code == 0
    f2 = reports["exceptions:friendship:F(2)=S(2,4)"]
    assert [w["name"] for w in f2["witnesses"] if w["name"] != "5.11"] == ["5.10"]
    assert "matching unique" in reports["exceptions:friendship:F(3)=S(3,6)"]["notes"]


def test_verify_reports_are_deterministic(capsys):
    a = run(capsys, "verify", "classification", "--cap", "6", "--no-timing", "--format", "json")[1]
    b = run(capsys, "verify", "classification", "--cap", "6", "--no-timing", "--format", "json", "--threads", "2")[1]
    assert a == b


def test_verify_counterexample_exit_code(capsys):
    # the L(t,2) listing omits t = 2, which the search finds non-unique
    code, out, _ = run(capsys, "verify", "exceptions:L(t,2)", "--cap", "7")
    assert code == 1
    assert "counterexample" in out and "L(2,2)" in out


@pytest.mark.parametrize("argv", [
    ("verify", "nonsense"),
    ("verify", "exceptions:Q"),
    ("verify", "appendix", "--cap", "11"),
    ("mu", "K(1,2"),
    ("classify", "E??"),
    ("enumerate", "-n", "3", "--threads", "0"),
    (),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_parse_error_is_annotated(capsys):
    code, _, err = run(capsys, "mu", "K_3 + X(1)")
    assert code == 2
    assert err.splitlines()[-1] == "  " + " " * 6 + "^"


def test_iso(capsys):
    assert run(capsys, "iso", "F(2)", "S(2,4)")[1].strip() == "isomorphic: true"
    assert run(capsys, "iso", "F(2)", "5.10")[1].strip() == "isomorphic: false"
