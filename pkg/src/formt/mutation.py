"""Mutant generation and true/equivalent classification.

Two operators, always applied once to the origin: Delete removes a
single mark (splicing its content into the parent space) and Wrap adds
a mark around one existing item or around a space's whole content.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import TooManyVariablesError
from .form import (
    Form,
    Mark,
    NodePath,
    enumerate_nodes,
    equivalent,
    node_at,
    path_to_str,
    replace_at,
)

DELETE = "delete"
WRAP = "wrap"


@dataclass(frozen=True)
class MutantInfo:
    tests_total: int = 0
    tests_failing: int = 0
    percent_failing: float = 0.0
    killed: bool = False
    failing_test_ids: tuple[str, ...] = ()
    unknown_test_ids: tuple[str, ...] = ()


@dataclass(frozen=True)
class Mutant:
    id: str
    operator: str  # DELETE or WRAP
    target: NodePath
    mutated: Form
    is_true: bool | None = None  # None = unknown (variable cap exceeded)
    info: MutantInfo | None = None

    @property
    def status(self) -> str:
        if self.is_true is None:
            return "unknown"
        return "true" if self.is_true else "equivalent"


def enumerate_delete_mutants(origin: Form) -> list[Mutant]:
    """One mutant per mark item, in document pre-order."""
    out: list[Mutant] = []
    for path, kind in enumerate_nodes(origin):
        if kind != "mark":
            continue
        mark = node_at(origin, path)
        assert isinstance(mark, Mark)
        mutated = replace_at(origin, path, mark.items)
        out.append(Mutant(f"del@{path_to_str(path)}", DELETE, path, mutated))
    return out


def enumerate_wrap_mutants(origin: Form) -> list[Mutant]:
    """One mutant per wrap target: every item plus every space content.

    Wrapping a mark item and wrapping that mark's content produce the
    same tree, as does wrapping a single-item space's content and its
    item; duplicates are emitted once, first target wins.
    """
    out: list[Mutant] = []
    seen: set[Form] = set()
    for path, kind in enumerate_nodes(origin):
        if kind == "space":
            mutated = Form((Mark(origin.items),))
        else:
            item = node_at(origin, path)
            mutated = replace_at(origin, path, (Mark((item,)),))
        if mutated in seen:
            continue
        seen.add(mutated)
        out.append(Mutant(f"wrap@{path_to_str(path)}", WRAP, path, mutated))
    return out


def enumerate_mutants(origin: Form) -> list[Mutant]:
    return enumerate_delete_mutants(origin) + enumerate_wrap_mutants(origin)


def classify_true_mutants(
    origin: Form, mutants: list[Mutant], var_cap: int | None = None
) -> list[Mutant]:
    """Mark each mutant as true (inequivalent to origin) via truth table.

    A variable count beyond the cap yields is_true=None; the mutant is
    kept and flagged, never dropped.
    """
    out: list[Mutant] = []
    for m in mutants:
        try:
            is_true: bool | None = not equivalent(origin, m.mutated, var_cap)
        except TooManyVariablesError:
            is_true = None
        out.append(replace(m, is_true=is_true))
    return out


@dataclass
class EquivalentRateSurvey:
    """Aggregate equivalent-mutant statistics over a corpus of origins."""

    origins: int = 0
    mutants: int = 0
    true_mutants: int = 0
    equivalent_mutants: int = 0
    unknown_mutants: int = 0
    origins_with_equivalents: int = 0
    per_origin: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def equivalent_rate(self) -> float:
        return self.equivalent_mutants / self.mutants if self.mutants else 0.0

    def summary(self) -> str:
        return (
            f"origins={self.origins} mutants={self.mutants} "
            f"true={self.true_mutants} equivalent={self.equivalent_mutants} "
            f"unknown={self.unknown_mutants} "
            f"equivalent_rate={self.equivalent_rate:.4f} "
            f"origins_with_equivalents={self.origins_with_equivalents}"
        )


def survey_equivalent_mutants(
    origins, var_cap: int | None = None
) -> EquivalentRateSurvey:
    from .form import print_form

    survey = EquivalentRateSurvey()
    for origin in origins:
        mutants = classify_true_mutants(origin, enumerate_mutants(origin), var_cap)
        eq = sum(1 for m in mutants if m.is_true is False)
        survey.origins += 1
        survey.mutants += len(mutants)
        survey.true_mutants += sum(1 for m in mutants if m.is_true is True)
        survey.equivalent_mutants += eq
        survey.unknown_mutants += sum(1 for m in mutants if m.is_true is None)
        if eq:
            survey.origins_with_equivalents += 1
        survey.per_origin.append((print_form(origin), len(mutants), eq))
    return survey
