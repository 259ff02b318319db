import json
from fractions import Fraction

import pytest

from conftest import INSTANCES
from fcmj.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


FIG1 = str(INSTANCES / "figure1.json")
FC15 = str(INSTANCES / "fcmj15.json")


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", FIG1, '{"1":4,"2":6}')
    assert code == 0
    assert "total = 5/3 (≈1.6667)" in out


def test_eval_schedule_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text('{"1":4,"2":6}')
    code, out, _ = run(capsys, "--json", "eval", FIG1, str(path))
    assert code == 0
    assert json.loads(out)["total"] == "5/3"


def test_eval_infeasible(capsys):
    code, _, err = run(capsys, "eval", FIG1, '{"1":6,"2":6}')
    assert code == 3
    assert "component 1" in err


def test_eval_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert run(capsys, "eval", str(bad), '{"1":1}')[0] == 2
    assert run(capsys, "eval", FIG1, "{oops")[0] == 2
    assert run(capsys, "eval", str(tmp_path / "missing.json"), '{"1":1}')[0] == 2


def test_invalid_instance_exit_2(capsys, tmp_path):
    path = tmp_path / "i.json"
    path.write_text('{"root":"1","nodes":[{"id":"0","kind":"module","setup_cost":"1"},'
                    '{"id":"1","kind":"component","setup_cost":"1","cycle_limit":2}],"edges":[["0","1"]]}')
    code, _, err = run(capsys, "solve", str(path))
    assert code == 2 and "root must be a module" in err


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", FC15)
    assert code == 0 and "(q1,q2)=(15,10), value 3151/15" in out
    code, out, _ = run(capsys, "solve", FIG1)
    assert "(q1,q2)=(5,5), value 6/5" in out


def test_solve_single_component(capsys, tmp_path):
    path = tmp_path / "one.json"
    path.write_text('{"root":"m","nodes":[{"id":"m","kind":"module","setup_cost":"0"},'
                    '{"id":"c","kind":"component","setup_cost":"7","cycle_limit":4}],"edges":[["m","c"]]}')
    code, out, _ = run(capsys, "--json", "solve", str(path))
    assert code == 0
    assert json.loads(out)["optimal_schedule"] == {"c": 4}


def test_solve_budget(capsys):
    code, _, err = run(capsys, "solve", FIG1, "--budget", "1")
    assert code == 4
    assert "best incumbent" in err


def test_trigger_mode_flag(capsys):
    two = str(INSTANCES / "two_level.json")
    _, a, _ = run(capsys, "--json", "solve", two)
    _, b, _ = run(capsys, "--json", "--trigger-mode", "direct-children", "solve", two)
    assert json.loads(a)["optimal_value"] != json.loads(b)["optimal_value"]
    assert run(capsys, "--trigger-mode", "sideways", "solve", two)[0] == 2


def test_subset_cap_flag(capsys):
    code, _, err = run(capsys, "eval", FIG1, '{"1":4,"2":6}', "--subset-cap", "1")
    assert code == 2 and "subset cap" in err


def test_simulate(capsys):
    code, out, _ = run(capsys, "simulate", FIG1, '{"1":4,"2":6}', "--horizon", "12")
    assert code == 0 and "= 5/3" in out
    code, out, _ = run(capsys, "simulate", FIG1, '{"1":1,"2":1}', "--horizon", "1")
    assert "= 6 " in out
    code, out, _ = run(capsys, "--json", "simulate", FIG1, '{"1":4,"2":6}')
    assert json.loads(out) == {"horizon": 12, "average_cost": "5/3"}


def test_factor(capsys):
    assert run(capsys, "factor", "15")[1].strip() == "15 = 3 · 5"
    assert run(capsys, "factor", "97")[1].strip() == "97 is prime"
    assert run(capsys, "factor", "1")[1].strip() == "1 = (empty product)"
    assert run(capsys, "factor", "abc")[0] == 2
    assert run(capsys, "factor", "0")[0] == 2


def test_factor_trace_json(capsys):
    code, out, _ = run(capsys, "--json", "factor", "12", "--trace")
    data = json.loads(out)
    assert data["factors"] == [2, 2, 3]
    assert data["trace"]["target"] == 12
    assert data["trace"]["instance"]["nodes"][1]["cycle_limit"] == 12
    code, out, _ = run(capsys, "factor", "15", "--trace")
    first, rest = out.split("\n", 1)
    assert first == "15 = 3 · 5"
    assert json.loads(rest)["divisor"] == 5


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "15")
    assert code == 0 and "gcd = 5" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "7")
    assert code == 0 and "step 1: pass" in out and "prime input" in out
    assert run(capsys, "verify", "3")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", FIG1, '{"1":4,"2":6}'),
        ("solve", FC15),
        ("simulate", FIG1, '{"1":4,"2":6}'),
        ("verify", "15"),
    ],
)
def test_text_and_json_agree(capsys, argv):
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, "--json", *argv)
    data = json.loads(js)
    exact = [v for v in _walk(data) if isinstance(v, str) and "/" in v]
    assert exact
    for v in exact:
        assert v in text
        Fraction(v)


def _walk(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _walk(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _walk(v)
    else:
        yield obj
