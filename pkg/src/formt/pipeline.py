"""End-to-end wiring shared by the CLI and the HTTP service."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import logic as L
from .form import Form, simplify
from .mutation import Mutant, classify_true_mutants, enumerate_mutants
from .testbase import KillReport, TestCase, run_kill_analysis, validate_origin
from .translate import to_form


@dataclass
class Analysis:
    spec_text: str
    expr: L.LogicExpr
    translated: Form
    simplified: Form
    raw: bool
    mutants: list[Mutant]

    @property
    def base(self) -> Form:
        """The form the mutants were generated from."""
        return self.translated if self.raw else self.simplified


def analyze_spec(spec_text: str, raw: bool = False, var_cap: int | None = None) -> Analysis:
    """Parse, translate, simplify, enumerate and classify mutants."""
    expr = L.parse_logic(spec_text)
    translated = to_form(expr)
    simplified = simplify(translated)
    base = translated if raw else simplified
    mutants = classify_true_mutants(base, enumerate_mutants(base), var_cap)
    return Analysis(spec_text, expr, translated, simplified, raw, mutants)


def evaluate_tests(
    analysis: Analysis,
    tests: list[TestCase],
    var_cap: int | None = None,
    strict_vars: bool = False,
) -> KillReport:
    failures = validate_origin(analysis.base, tests, var_cap, strict_vars=strict_vars)
    return run_kill_analysis(
        analysis.base, analysis.mutants, tests, var_cap, origin_failures=failures
    )
