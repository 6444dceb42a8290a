import json
from random import Random

import pytest

from formt.errors import DuplicateTestIdError, SchemaError, UnboundVariableError
from formt.form import Form, parse_form, print_form, simplify
from formt.mutation import classify_true_mutants, enumerate_mutants
from formt.randgen import random_form
from formt.testbase import (
    TestCase,
    load_tests,
    parse_tests,
    report_from_dict,
    report_to_dict,
    run_kill_analysis,
    validate_origin,
)

ORIGIN = parse_form("(qs)pr", single_letter_atoms=True)
ALL_FALSE = {"q": False, "s": False, "p": False, "r": False}


def mutants_of(form):
    return classify_true_mutants(form, enumerate_mutants(form))


# ---------------------------------------------------------------------------
# parsing


def test_parse_total_test():
    tests = parse_tests({"tests": [{"assign": dict(ALL_FALSE), "expect": True}]})
    assert tests[0].id == "t1"
    assert tests[0].expected is True


def test_parse_partial_residual():
    tests = parse_tests({"tests": [{"assign": {"p": True}, "expect": "true"}]})
    assert isinstance(tests[0].expected, Form)
    assert print_form(tests[0].expected) == "()"


def test_parse_residual_logic_then_form_syntax():
    tests = parse_tests(
        {"tests": [{"assign": {}, "expect": "q or s"}, {"assign": {}, "expect": "(q s)"}]}
    )
    assert print_form(tests[0].expected) == "q s"
    assert print_form(tests[1].expected) == "(q s)"


def test_parse_empty_assignment_accepted():
    tests = parse_tests({"tests": [{"assign": {}, "expect": True}]})
    assert tests[0].assignment == {}


def test_parse_schema_errors():
    with pytest.raises(SchemaError):
        parse_tests([])
    with pytest.raises(SchemaError):
        parse_tests({"tests": [{"assign": {"p": 1}, "expect": True}]})
    with pytest.raises(SchemaError):
        parse_tests({"tests": [{"assign": {}}]})
    with pytest.raises(SchemaError):
        parse_tests({"tests": [{"assign": {}, "expect": "((("}]})
    with pytest.raises(DuplicateTestIdError):
        parse_tests(
            {"tests": [{"id": "x", "assign": {}, "expect": True}] * 2}
        )


def test_load_tests(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"tests": [{"assign": {}, "expect": False}]}))
    assert len(load_tests(path)) == 1


# ---------------------------------------------------------------------------
# origin validation


def test_validate_origin_pass_and_fail():
    tests = parse_tests(
        {
            "tests": [
                {"id": "good", "assign": dict(ALL_FALSE), "expect": True},
                {"id": "bad", "assign": dict(ALL_FALSE), "expect": False},
            ]
        }
    )
    assert validate_origin(ORIGIN, tests) == ["bad"]


def test_validate_partial_residual():
    tests = parse_tests({"tests": [{"assign": {"p": True}, "expect": "true"}]})
    assert validate_origin(ORIGIN, tests) == []


def test_validate_unknown_variable():
    tests = parse_tests({"tests": [{"assign": {"zz": True}, "expect": True}]})
    with pytest.raises(UnboundVariableError):
        validate_origin(ORIGIN, tests)
    # warn mode keeps going
    tests = parse_tests({"tests": [{"assign": {"zz": True, "a": True}, "expect": True}]})
    assert validate_origin(parse_form("a"), tests, strict_vars=False) == []


def test_validate_trivial_single_atom():
    tests = parse_tests({"tests": [{"assign": {"a": True}, "expect": True}]})
    assert validate_origin(parse_form("a"), tests) == []


# ---------------------------------------------------------------------------
# kill analysis


def test_kill_paper_narrative():
    mutants = mutants_of(ORIGIN)
    killing = parse_tests({"tests": [{"assign": dict(ALL_FALSE), "expect": True}]})
    report = run_kill_analysis(ORIGIN, mutants, killing)
    del0 = next(m for m in report.mutants if m.id == "del@0")
    assert del0.info.killed is True
    assert del0.info.percent_failing == 1.0

    sparing = parse_tests(
        {"tests": [{"assign": {"p": True, "q": False, "s": False, "r": False}, "expect": True}]}
    )
    report = run_kill_analysis(ORIGIN, mutants, sparing)
    del0 = next(m for m in report.mutants if m.id == "del@0")
    assert del0.info.killed is False
    assert del0.info.percent_failing == 0.0


def test_empty_test_base():
    report = run_kill_analysis(ORIGIN, mutants_of(ORIGIN), [])
    assert report.mutation_score == 0.0
    assert all(not m.info.killed for m in report.mutants)


def test_partial_test_kills_semantically():
    # substitute p:=T into the delete mutant "q s p r" gives a tautology-free
    # residual different from "()", so the partial test kills it
    tests = parse_tests({"tests": [{"assign": {"p": True}, "expect": "true"}]})
    report = run_kill_analysis(ORIGIN, mutants_of(ORIGIN), tests)
    del0 = next(m for m in report.mutants if m.id == "del@0")
    assert del0.info.killed is False  # q s () r is also TRUE-equivalent
    wrap_root = next(m for m in report.mutants if m.id == "wrap@root")
    assert wrap_root.info.killed is True


def test_degenerate_full_equivalence_test():
    tests = parse_tests({"tests": [{"assign": {}, "expect": "(q s) p r"}]})
    report = run_kill_analysis(ORIGIN, mutants_of(ORIGIN), tests)
    assert all(m.info.killed for m in report.mutants if m.is_true)


def test_monotonicity_adding_tests():
    rng = Random(41)
    base = {"tests": [{"assign": dict(ALL_FALSE), "expect": True}]}
    extended = {
        "tests": base["tests"]
        + [{"assign": {"p": True, "q": True, "s": False, "r": False}, "expect": True}]
    }
    mutants = mutants_of(ORIGIN)
    r1 = run_kill_analysis(ORIGIN, mutants, parse_tests(base))
    r2 = run_kill_analysis(ORIGIN, mutants, parse_tests(extended))
    killed1 = {m.id for m in r1.mutants if m.info.killed}
    killed2 = {m.id for m in r2.mutants if m.info.killed}
    assert killed1 <= killed2


def test_equivalent_mutants_never_killed_by_valid_tests():
    rng = Random(43)
    for _ in range(40):
        origin = simplify(random_form(rng, max_vars=4, max_depth=4))
        mutants = mutants_of(origin)
        # valid test base: expectations computed from the origin itself
        from formt.form import assignments, eval_form, variables

        tests = [
            TestCase(f"t{i}", a, eval_form(origin, a))
            for i, a in enumerate(assignments(variables(origin)))
        ]
        report = run_kill_analysis(origin, mutants, tests)
        for m in report.mutants:
            if m.is_true is False:
                assert not m.info.killed


def test_percent_failing_zero_iff_not_killed():
    tests = parse_tests({"tests": [{"assign": dict(ALL_FALSE), "expect": True}]})
    report = run_kill_analysis(ORIGIN, mutants_of(ORIGIN), tests)
    for m in report.mutants:
        assert (m.info.percent_failing == 0) == (not m.info.killed)


def test_report_round_trip():
    tests = parse_tests({"tests": [{"assign": dict(ALL_FALSE), "expect": True}]})
    report = run_kill_analysis(ORIGIN, mutants_of(ORIGIN), tests)
    d = report_to_dict(report)
    back = report_from_dict(json.loads(json.dumps(d)))
    assert report_to_dict(back) == d
