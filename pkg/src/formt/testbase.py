"""Test bases: loading, origin validation, kill analysis, report I/O.

A test case binds some or all variables and states an expected outcome:
a Boolean for total assignments, or a residual expression otherwise.
A test base kills a mutant when at least one test's expectation fails
against the mutated form.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from typing import Mapping

from . import logic as L
from .errors import (
    DuplicateTestIdError,
    FormtError,
    SchemaError,
    TooManyVariablesError,
    UnboundVariableError,
)
from .form import (
    EMPTY,
    TRUE,
    Form,
    equivalent,
    eval_form,
    parse_form,
    print_form,
    simplify,
    str_to_path,
    substitute,
    variables,
)
from .mutation import Mutant, MutantInfo
from .translate import to_form

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TestCase:
    __test__ = False  # keep pytest from collecting this

    id: str
    assignment: Mapping[str, bool]
    expected: bool | Form
    expected_text: str | None = None  # original residual text, for echoing

    def expected_form(self) -> Form:
        if isinstance(self.expected, Form):
            return self.expected
        return TRUE if self.expected else EMPTY

    def expect_json(self):
        if isinstance(self.expected, bool):
            return self.expected
        return self.expected_text if self.expected_text is not None else print_form(
            self.expected
        )


@dataclass
class KillReport:
    origin: Form  # the form the mutants were generated from
    simplified: Form
    mutants: list[Mutant]
    mutation_score: float
    equivalent_count: int
    unknown_count: int
    tests_total: int
    origin_failures: list[str]

    @property
    def true_count(self) -> int:
        return sum(1 for m in self.mutants if m.is_true is True)

    @property
    def killed_true_count(self) -> int:
        return sum(
            1 for m in self.mutants if m.is_true is True and m.info and m.info.killed
        )


# ---------------------------------------------------------------------------
# Test file parsing


def parse_expectation(text: str) -> tuple[Form, str]:
    """A residual expectation: logic syntax first, then form syntax."""
    try:
        return to_form(L.parse_logic(text)), text
    except FormtError:
        return parse_form(text), text


def parse_tests(doc) -> list[TestCase]:
    """Validate the {"tests": [...]} document and build TestCases."""
    if not isinstance(doc, dict):
        raise SchemaError("expected a JSON object", "$")
    if "tests" not in doc:
        raise SchemaError("missing key 'tests'", "$")
    raw = doc["tests"]
    if not isinstance(raw, list):
        raise SchemaError("'tests' must be an array", "$.tests")
    out: list[TestCase] = []
    seen: set[str] = set()
    for idx, entry in enumerate(raw):
        where = f"$.tests[{idx}]"
        if not isinstance(entry, dict):
            raise SchemaError("test must be an object", where)
        unknown = set(entry) - {"id", "assign", "expect"}
        if unknown:
            raise SchemaError(f"unknown key(s) {sorted(unknown)}", where)
        test_id = entry.get("id", f"t{idx + 1}")
        if not isinstance(test_id, str):
            raise SchemaError("'id' must be a string", f"{where}.id")
        if test_id in seen:
            raise DuplicateTestIdError(test_id)
        seen.add(test_id)
        assign = entry.get("assign", {})
        if not isinstance(assign, dict):
            raise SchemaError("'assign' must be an object", f"{where}.assign")
        for name, value in assign.items():
            if not isinstance(value, bool):
                raise SchemaError(
                    "assignment values must be booleans", f"{where}.assign.{name}"
                )
        if "expect" not in entry:
            raise SchemaError("missing key 'expect'", where)
        expect = entry["expect"]
        if isinstance(expect, bool):
            out.append(TestCase(test_id, dict(assign), expect))
        elif isinstance(expect, str):
            try:
                expected, text = parse_expectation(expect)
            except FormtError as exc:
                raise SchemaError(
                    f"unparseable expectation: {exc}", f"{where}.expect"
                ) from exc
            out.append(TestCase(test_id, dict(assign), expected, text))
        else:
            raise SchemaError(
                "'expect' must be a boolean or an expression string", f"{where}.expect"
            )
    return out


def load_tests(path) -> list[TestCase]:
    with open(path, encoding="utf-8") as fh:
        return parse_tests(json.load(fh))


# ---------------------------------------------------------------------------
# Evaluation


def check_test(
    form: Form,
    origin_vars: set[str],
    test: TestCase,
    var_cap: int | None = None,
) -> bool:
    """True when the form meets the test's expectation.

    Total assignment with Boolean expectation: direct evaluation.
    Anything else: substitute, then semantic comparison with the
    expected residual. May raise TooManyVariablesError.
    """
    total = origin_vars <= set(test.assignment)
    if total and isinstance(test.expected, bool):
        return eval_form(form, test.assignment) == test.expected
    residual = substitute(form, test.assignment)
    return equivalent(residual, test.expected_form(), var_cap)


def validate_origin(
    origin: Form,
    tests: list[TestCase],
    var_cap: int | None = None,
    strict_vars: bool = True,
) -> list[str]:
    """Ids of tests whose expectation disagrees with the origin.

    A non-empty result is a warning, not an error. Tests binding
    variables absent from the origin raise unless strict_vars is off.
    """
    origin_vars = variables(origin)
    failed: list[str] = []
    for test in tests:
        extra = set(test.assignment) - origin_vars
        if extra:
            if strict_vars:
                raise UnboundVariableError(extra)
            log.warning("test %s binds unknown variable(s) %s", test.id, sorted(extra))
        try:
            ok = check_test(origin, origin_vars, test, var_cap)
        except TooManyVariablesError:
            ok = True  # undecided, do not flag
        if not ok:
            failed.append(test.id)
    return failed


def run_kill_analysis(
    origin: Form,
    mutants: list[Mutant],
    tests: list[TestCase],
    var_cap: int | None = None,
    origin_failures: list[str] | None = None,
) -> KillReport:
    """Evaluate every mutant against every test and aggregate the score.

    The mutation score counts killed true mutants over all true
    mutants; equivalent and unknown mutants are reported separately.
    """
    origin_vars = variables(origin)
    evaluated: list[Mutant] = []
    for m in mutants:
        failing: list[str] = []
        unknown: list[str] = []
        for test in tests:
            try:
                if not check_test(m.mutated, origin_vars, test, var_cap):
                    failing.append(test.id)
            except TooManyVariablesError:
                unknown.append(test.id)
        total = len(tests)
        info = MutantInfo(
            tests_total=total,
            tests_failing=len(failing),
            percent_failing=len(failing) / total if total else 0.0,
            killed=len(failing) >= 1,
            failing_test_ids=tuple(failing),
            unknown_test_ids=tuple(unknown),
        )
        evaluated.append(replace(m, info=info))
    true_mutants = [m for m in evaluated if m.is_true is True]
    killed = sum(1 for m in true_mutants if m.info.killed)
    score = killed / len(true_mutants) if true_mutants else 0.0
    return KillReport(
        origin=origin,
        simplified=simplify(origin),
        mutants=evaluated,
        mutation_score=score,
        equivalent_count=sum(1 for m in evaluated if m.is_true is False),
        unknown_count=sum(1 for m in evaluated if m.is_true is None),
        tests_total=len(tests),
        origin_failures=list(origin_failures or []),
    )


# ---------------------------------------------------------------------------
# Report serialization (the interchange format between `test` and `render`)


def mutant_to_dict(m: Mutant) -> dict:
    out = {
        "id": m.id,
        "operator": m.operator,
        "path": "root" if not m.target else ".".join(str(i) for i in m.target),
        "form": print_form(m.mutated),
        "status": m.status,
    }
    if m.info is not None:
        out["info"] = {
            "testsTotal": m.info.tests_total,
            "testsFailing": m.info.tests_failing,
            "percentFailing": m.info.percent_failing,
            "killed": m.info.killed,
            "failingTestIds": list(m.info.failing_test_ids),
            "unknownTestIds": list(m.info.unknown_test_ids),
        }
    return out


def mutant_from_dict(d: dict) -> Mutant:
    info = None
    if "info" in d:
        i = d["info"]
        info = MutantInfo(
            tests_total=i["testsTotal"],
            tests_failing=i["testsFailing"],
            percent_failing=i["percentFailing"],
            killed=i["killed"],
            failing_test_ids=tuple(i.get("failingTestIds", ())),
            unknown_test_ids=tuple(i.get("unknownTestIds", ())),
        )
    status = d.get("status", "unknown")
    is_true = None if status == "unknown" else status == "true"
    return Mutant(
        id=d["id"],
        operator=d["operator"],
        target=str_to_path(d["path"]),
        mutated=parse_form(d["form"]),
        is_true=is_true,
        info=info,
    )


def report_to_dict(report: KillReport) -> dict:
    return {
        "origin": print_form(report.origin),
        "simplified": print_form(report.simplified),
        "mutationScore": report.mutation_score,
        "trueCount": report.true_count,
        "equivalentCount": report.equivalent_count,
        "unknownCount": report.unknown_count,
        "testsTotal": report.tests_total,
        "originFailures": report.origin_failures,
        "mutants": [mutant_to_dict(m) for m in report.mutants],
    }


def report_from_dict(d: dict) -> KillReport:
    return KillReport(
        origin=parse_form(d["origin"]),
        simplified=parse_form(d["simplified"]),
        mutants=[mutant_from_dict(m) for m in d["mutants"]],
        mutation_score=d["mutationScore"],
        equivalent_count=d["equivalentCount"],
        unknown_count=d["unknownCount"],
        tests_total=d.get("testsTotal", 0),
        origin_failures=list(d.get("originFailures", ())),
    )
