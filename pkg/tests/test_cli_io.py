"""Problem file round trips, result documents, and CLI behavior."""

import json
import random
from fractions import Fraction

import pytest

from pblp import Method, build_tolp, cli_main, decompose, parse_problem
from pblp.breakpoints import enumerate_breakpoints
from pblp.cli_io import (
    COMPUTE_ERROR,
    MISMATCH,
    PARSE_ERROR,
    USAGE_ERROR,
    emit_plot_data,
    emit_problem,
    emit_solution,
    run_check,
)
from pblp.errors import BadCase, DimensionMismatch, ParseError
from conftest import INSTANCE_DIR
from instance_gen import random_pblp
from pblp import Case

F = Fraction

MINIMAL = """\
case: 2
vars: 2
row: >= 1 1 1   # one useful row
c1: 1 0
c2: 0 1
d1: 1 1
"""


def test_parse_reads_comments_senses_and_fractions():
    p = parse_problem(MINIMAL)
    assert p.case is Case.TWO
    assert p.n == 2
    assert p.rows == ((F(1), F(1)),)
    assert p.rhs == (F(1),)
    p = parse_problem(MINIMAL.replace(">= 1 1 1", "<= 1/2 -0.25 3"))
    assert p.rows == ((F(1, 2), F(-1, 4)),)
    assert p.rhs == (F(3),)


def test_problem_text_round_trips_through_emit(example1, example2, example2_case1):
    for p in (example1, example2, example2_case1):
        assert parse_problem(emit_problem(p)) == p
    rng = random.Random(5)
    for trial in range(6):
        case = Case.ONE if trial % 2 == 0 else Case.TWO
        p = random_pblp(rng, case)
        assert parse_problem(emit_problem(p)) == p


@pytest.mark.parametrize(
    "mangle, exc",
    [
        (lambda s: s.replace("case: 2\n", ""), ParseError),
        (lambda s: s.replace("case: 2", "case: 3"), BadCase),
        (lambda s: s.replace("vars: 2", "vars: two"), ParseError),
        (lambda s: s.replace("vars: 2", "vars: 0"), ParseError),
        (lambda s: s + "case: 1\n", ParseError),
        (lambda s: s + "mystery: 1\n", ParseError),
        (lambda s: s.replace("row: >= 1 1 1   # one useful row\n", ""), ParseError),
        (lambda s: s.replace("row: >= 1 1 1", "row: >> 1 1 1"), ParseError),
        (lambda s: s.replace("row: >= 1 1 1", "row: >= 1 1"), DimensionMismatch),
        (lambda s: s.replace("c1: 1 0", "c1: 1 0 0"), DimensionMismatch),
        (lambda s: s.replace("row: >= 1 1 1", "row: >= 1 x 1"), ParseError),
        (lambda s: s.replace("d1: 1 1", "d1: 0 0"), ParseError),
        (lambda s: s.replace("case: 2", "case 2"), ParseError),
    ],
)
def test_parse_rejects_malformed_problems(mangle, exc):
    with pytest.raises(exc):
        parse_problem(mangle(MINIMAL))


def test_solution_document_is_exact_json(example2):
    sol = enumerate_breakpoints(example2, Method.LP)
    doc = json.loads(emit_solution(example2, sol))
    assert doc["case"] == "2"
    assert doc["method"] == "lp"
    assert [e["image"] for e in doc["images"]] == [
        ["0", "5", "5"],
        ["5", "10", "0"],
        ["15", "0", "2"],
    ]
    assert doc["breakpoints"] == ["1", "5"]
    assert doc["intervals"] == [
        {"lower": "0", "upper": "1"},
        {"lower": "1", "upper": "inf"},
        {"lower": "0", "upper": "5"},
    ]
    assert doc["axis"][0] == {
        "lower": "0",
        "upper": "1",
        "lower_closed": True,
        "upper_closed": True,
        "witnesses": [0, 2],
    }
    assert doc["stats"]["interval_lp_solves"] == 2 * len(doc["images"])
    assert doc["stats"]["lp_solves"] > doc["stats"]["interval_lp_solves"]


def test_solution_document_is_byte_identical_across_runs(example2):
    first = emit_solution(example2, enumerate_breakpoints(example2, Method.LP))
    second = emit_solution(example2, enumerate_breakpoints(example2, Method.LP))
    assert first == second


def test_method_choice_changes_only_the_reported_route(example2):
    lp_doc = json.loads(
        emit_solution(example2, enumerate_breakpoints(example2, Method.LP))
    )
    ad_doc = json.loads(
        emit_solution(example2, enumerate_breakpoints(example2, Method.ADAPTED))
    )
    assert lp_doc["method"] == "lp" and ad_doc["method"] == "adapted"
    for key in ("images", "components", "intervals", "breakpoints", "axis"):
        assert lp_doc[key] == ad_doc[key]


def test_plot_data_has_exact_records_and_lossy_comments(example2):
    dec = decompose(build_tolp(example2))
    text = emit_plot_data(dec, example2.case, (F(1), F(5)))
    lines = text.splitlines()
    polygons = [l for l in lines if l.startswith("polygon,")]
    segments = [l for l in lines if l.startswith("segment,")]
    assert len(polygons) == 3
    assert polygons[0].startswith("polygon,0 5 5,1/5,3/10,")
    assert segments == [
        "segment,1,0,1/2,1/2,0",
        "segment,5,0,1/6,1/6,0",
    ]
    approx = [l for l in lines if l.startswith("# approx")]
    assert len(approx) == 5
    assert all(l.endswith("(lossy)") for l in approx)


def test_run_check_passes_the_bounded_example(example1, capsys):
    assert run_check(example1) == []


def test_run_check_skips_the_oracle_on_unbounded_sets(example2, capsys):
    assert run_check(example2) == []
    assert "vertex oracle skipped" in capsys.readouterr().err


# -- the command line ---------------------------------------------------------


def _instance(name):
    return str(INSTANCE_DIR / name)


def test_cli_solve_writes_json_and_a_timing_line(capsys):
    code = cli_main(["solve", _instance("example2.pblp")])
    out, err = capsys.readouterr()
    assert code == 0
    doc = json.loads(out)
    assert doc["breakpoints"] == ["1", "5"]
    assert "LP solves" in err


def test_cli_quiet_silences_stderr(capsys):
    code = cli_main(["solve", _instance("example2.pblp"), "--quiet"])
    out, err = capsys.readouterr()
    assert code == 0
    assert err == ""


def test_cli_solve_output_is_deterministic(capsys):
    cli_main(["solve", _instance("example1.pblp"), "--quiet"])
    first = capsys.readouterr().out
    cli_main(["solve", _instance("example1.pblp"), "--quiet"])
    second = capsys.readouterr().out
    assert first == second


def test_cli_decompose_and_sweep(capsys):
    code = cli_main(["decompose", _instance("example1.pblp"), "--quiet"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(doc["images"]) == 4
    code = cli_main(
        ["sweep", _instance("example2.pblp"), "--lambda-max", "6",
         "--steps", "60", "--quiet"]
    )
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["changes"] == [
        {"from": "1", "to": "11/10"},
        {"from": "49/10", "to": "5"},
    ]


def test_cli_plot_out_writes_the_plot_file(tmp_path, capsys):
    target = tmp_path / "plot.txt"
    code = cli_main(
        ["solve", _instance("example2.pblp"), "--plot-out", str(target), "--quiet"]
    )
    capsys.readouterr()
    assert code == 0
    content = target.read_text()
    assert "segment,1,0,1/2,1/2,0" in content
    assert "polygon,0 5 5," in content


def test_cli_check_passes_on_all_bundled_instances(capsys):
    for name in ("example1.pblp", "example2.pblp", "example2_case1.pblp"):
        assert cli_main(["check", _instance(name), "--quiet"]) == 0
    capsys.readouterr()


def test_cli_exit_codes_for_bad_input(tmp_path, capsys):
    assert cli_main(["solve", str(tmp_path / "missing.pblp")]) == PARSE_ERROR
    bad = tmp_path / "bad.pblp"
    bad.write_text(MINIMAL.replace("case: 2", "case: 9"))
    assert cli_main(["solve", str(bad)]) == PARSE_ERROR
    assert cli_main(["frobnicate", _instance("example1.pblp")]) == USAGE_ERROR
    assert cli_main([]) == USAGE_ERROR
    assert cli_main(["--help"]) == 0
    capsys.readouterr()


def test_cli_turns_bad_option_values_into_clean_errors(tmp_path, capsys):
    inst = _instance("example2.pblp")
    assert cli_main(["sweep", inst, "--lambda-max", "6", "--steps", "0"]) == USAGE_ERROR
    assert cli_main(["sweep", inst, "--lambda-max", "-2", "--steps", "5"]) == USAGE_ERROR
    gone = str(tmp_path / "nodir" / "plot.txt")
    assert cli_main(["solve", inst, "--plot-out", gone, "--quiet"]) == PARSE_ERROR
    err = capsys.readouterr().err
    assert "Traceback" not in err
    assert "error:" in err


def test_cli_reports_computational_failures(tmp_path, capsys):
    # minimizing -x over x >= 1 is unbounded for every weight
    unbounded = tmp_path / "unbounded.pblp"
    unbounded.write_text(
        "case: 1\nvars: 1\nrow: >= 1 1\nc1: -1\nc2: 0\nd1: 1\n"
    )
    assert cli_main(["solve", str(unbounded)]) == COMPUTE_ERROR
    assert "error:" in capsys.readouterr().err


def test_cli_check_reports_mismatches(monkeypatch, capsys):
    """Wire a deliberately wrong oracle in and make sure the check
    command notices and uses its own exit code."""
    monkeypatch.setattr(
        "pblp.cli_io.extreme_nondominated_bruteforce", lambda t: ()
    )
    code = cli_main(["check", _instance("example1.pblp")])
    err = capsys.readouterr().err
    assert code == MISMATCH
    assert "MISMATCH" in err
