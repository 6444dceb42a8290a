import pytest

from formt import logic as L
from formt.errors import (
    EmptyInputError,
    LogicSyntaxError,
    UnboundQuantifierError,
    UnsupportedQuantifierError,
)
from formt.logic import parse_logic, print_logic
from formt.randgen import random_logic_expr
from random import Random


def atoms(*names):
    return tuple(L.Atom(n) for n in names)


def test_single_implication():
    assert parse_logic("p -> q") == L.Implies(L.Atom("p"), L.Atom("q"))


def test_dilemma_expression():
    e = parse_logic("((p -> q) and (r -> s) and (q or s)) -> (p or r)")
    expected = L.Implies(
        L.And(
            (
                L.Implies(L.Atom("p"), L.Atom("q")),
                L.Implies(L.Atom("r"), L.Atom("s")),
                L.Or(atoms("q", "s")),
            )
        ),
        L.Or(atoms("p", "r")),
    )
    assert e == expected


def test_double_negation_not_simplified():
    assert parse_logic("not not a") == L.Not(L.Not(L.Atom("a")))


def test_flattening_nary():
    e = parse_logic("a and b and c")
    assert e == L.And(atoms("a", "b", "c"))
    e = parse_logic("a or b or c or d")
    assert e == L.Or(atoms("a", "b", "c", "d"))


def test_arrow_right_associative():
    assert parse_logic("a -> b -> c") == L.Implies(
        L.Atom("a"), L.Implies(L.Atom("b"), L.Atom("c"))
    )


def test_fat_arrow_alias():
    assert parse_logic("a => b") == parse_logic("a -> b")


def test_keywords_case_insensitive_atoms_case_sensitive():
    assert parse_logic("a AND b") == L.And(atoms("a", "b"))
    assert parse_logic("A") != parse_logic("a")


def test_comments_and_whitespace():
    assert parse_logic("# heading\np -> q  # tail\n") == parse_logic("p -> q")


def test_forall_sugar():
    e = parse_logic("forall x: a(x) -> b(x)")
    assert e == L.ForallImplies("x", L.Atom("a"), L.Atom("b"))


def test_forall_composite_bodies():
    e = parse_logic("forall x: a(x) and b(x) -> c(x) or d(x)")
    assert e == L.ForallImplies(
        "x", L.And(atoms("a", "b")), L.Or(atoms("c", "d"))
    )


def test_forall_wrong_variable_rejected():
    with pytest.raises(UnboundQuantifierError):
        parse_logic("forall x: a(y) -> b(x)")


def test_forall_bare_atom_rejected():
    with pytest.raises(UnboundQuantifierError):
        parse_logic("forall x: a -> b(x)")


def test_exists_rejected_anywhere():
    with pytest.raises(UnsupportedQuantifierError):
        parse_logic("p or exists")
    with pytest.raises(UnsupportedQuantifierError):
        parse_logic("EXISTS x: a(x)")


def test_empty_input():
    with pytest.raises(EmptyInputError):
        parse_logic("")
    with pytest.raises(EmptyInputError):
        parse_logic("  # only a comment\n")


def test_syntax_error_carries_position():
    with pytest.raises(LogicSyntaxError) as exc:
        parse_logic("p ->\n-> q")
    assert exc.value.line == 2
    assert exc.value.column == 1


def test_print_examples():
    assert print_logic(L.Implies(L.Atom("p"), L.Atom("q"))) == "(p -> q)"
    assert print_logic(L.Or(atoms("q", "s"))) == "(q or s)"
    assert print_logic(L.Not(L.Atom("a"))) == "(not a)"
    assert print_logic(L.ForallImplies("x", L.Atom("a"), L.Atom("b"))) == (
        "(forall x: a(x) -> b(x))"
    )


def test_round_trip_random():
    rng = Random(7)
    for _ in range(300):
        e = random_logic_expr(rng)
        assert parse_logic(print_logic(e)) == e


def test_round_trip_forall():
    e = parse_logic("forall t: p(t) and q(t) -> r(t)")
    assert parse_logic(print_logic(e)) == e
