"""formt: mutation testing of logical specifications via form calculus."""

from .form import (
    Atom,
    Form,
    Mark,
    enumerate_nodes,
    equivalent,
    eval_form,
    node_at,
    parse_form,
    print_form,
    simplify,
    substitute,
    variables,
)
from .logic import eval_logic, parse_logic, print_logic
from .mutation import (
    Mutant,
    MutantInfo,
    classify_true_mutants,
    enumerate_delete_mutants,
    enumerate_mutants,
    enumerate_wrap_mutants,
)
from .pipeline import Analysis, analyze_spec, evaluate_tests
from .testbase import (
    KillReport,
    TestCase,
    load_tests,
    parse_tests,
    run_kill_analysis,
    validate_origin,
)
from .translate import to_form, to_logic

__all__ = [
    "Analysis",
    "Atom",
    "Form",
    "KillReport",
    "Mark",
    "Mutant",
    "MutantInfo",
    "TestCase",
    "analyze_spec",
    "classify_true_mutants",
    "enumerate_delete_mutants",
    "enumerate_mutants",
    "enumerate_nodes",
    "enumerate_wrap_mutants",
    "equivalent",
    "eval_form",
    "eval_logic",
    "evaluate_tests",
    "load_tests",
    "node_at",
    "parse_form",
    "parse_logic",
    "parse_tests",
    "print_form",
    "print_logic",
    "run_kill_analysis",
    "simplify",
    "substitute",
    "to_form",
    "to_logic",
    "validate_origin",
    "variables",
]
