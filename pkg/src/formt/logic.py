"""Conventional logic syntax: AST, parser, printer, direct evaluation.

Accepted connectives: not, and, or, -> (alias =>), plus the monadic
universal sugar `forall x: A -> B` whose bodies consist of predicate
applications of the bound variable. `exists` is rejected outright.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .errors import (
    EmptyInputError,
    LogicSyntaxError,
    UnboundQuantifierError,
    UnsupportedQuantifierError,
)

LogicExpr = Union["Atom", "Const", "Not", "And", "Or", "Implies", "ForallImplies"]


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    inner: LogicExpr


@dataclass(frozen=True)
class And:
    conjuncts: tuple[LogicExpr, ...]  # length >= 2

    def __post_init__(self):
        assert len(self.conjuncts) >= 2


@dataclass(frozen=True)
class Or:
    disjuncts: tuple[LogicExpr, ...]  # length >= 2

    def __post_init__(self):
        assert len(self.disjuncts) >= 2


@dataclass(frozen=True)
class Implies:
    antecedent: LogicExpr
    consequent: LogicExpr


@dataclass(frozen=True)
class ForallImplies:
    bound_var: str
    antecedent: LogicExpr
    consequent: LogicExpr


# ---------------------------------------------------------------------------
# Tokenizer

_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>\#[^\n]*)
      | (?P<arrow>->|=>)
      | (?P<lparen>\()
      | (?P<rparen>\))
      | (?P<colon>:)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)

_KEYWORDS = {"and", "or", "not", "forall", "exists", "true", "false"}


@dataclass(frozen=True)
class _Tok:
    kind: str  # arrow | lparen | rparen | colon | ident | kw:<word> | eof
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    line = 1
    line_start = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos - line_start + 1
            raise LogicSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        tok_text = m.group()
        col = pos - line_start + 1
        if kind in ("ws", "comment"):
            line += tok_text.count("\n")
            if "\n" in tok_text:
                line_start = pos + tok_text.rindex("\n") + 1
        elif kind == "ident" and tok_text.lower() in _KEYWORDS:
            word = tok_text.lower()
            if word == "exists":
                raise UnsupportedQuantifierError(
                    "existential quantification is not supported", line, col
                )
            toks.append(_Tok("kw:" + word, tok_text, line, col))
        else:
            toks.append(_Tok(kind, tok_text, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, len(text) - line_start + 1))
    return toks


# ---------------------------------------------------------------------------
# Parser
#
# expr := impl
# impl := or ('->' impl)?            right-associative
# or   := and ('or' and)*            flattened n-ary
# and  := unary ('and' unary)*       flattened n-ary
# unary:= 'not' unary | atom | '(' expr ')' | 'forall' IDENT ':' or '->' impl


class _Parser:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.i = 0
        self.bound: str | None = None

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Tok:
        tok = self.next()
        if tok.kind != kind:
            raise LogicSyntaxError(
                f"expected {what}, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.column,
            )
        return tok

    def parse(self) -> LogicExpr:
        e = self.impl()
        tok = self.peek()
        if tok.kind != "eof":
            raise LogicSyntaxError(
                f"unexpected trailing {tok.text!r}", tok.line, tok.column
            )
        return e

    def impl(self) -> LogicExpr:
        left = self.disj()
        if self.peek().kind == "arrow":
            self.next()
            return Implies(left, self.impl())
        return left

    def disj(self) -> LogicExpr:
        parts = [self.conj()]
        while self.peek().kind == "kw:or":
            self.next()
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self) -> LogicExpr:
        parts = [self.unary()]
        while self.peek().kind == "kw:and":
            self.next()
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self) -> LogicExpr:
        tok = self.peek()
        if tok.kind == "kw:not":
            self.next()
            return Not(self.unary())
        if tok.kind == "kw:true":
            self.next()
            return Const(True)
        if tok.kind == "kw:false":
            self.next()
            return Const(False)
        if tok.kind == "lparen":
            self.next()
            e = self.impl()
            self.expect("rparen", "')'")
            return e
        if tok.kind == "kw:forall":
            return self.forall()
        if tok.kind == "ident":
            return self.atom()
        raise LogicSyntaxError(
            f"expected an expression, found {tok.text or 'end of input'!r}",
            tok.line,
            tok.column,
        )

    def atom(self) -> LogicExpr:
        tok = self.expect("ident", "an identifier")
        if self.peek().kind == "lparen":
            # monadic predicate application
            open_tok = self.next()
            var = self.expect("ident", "a variable")
            self.expect("rparen", "')'")
            if self.bound is None:
                raise LogicSyntaxError(
                    "predicate application outside forall",
                    open_tok.line,
                    open_tok.column,
                )
            if var.text != self.bound:
                raise UnboundQuantifierError(
                    f"predicate {tok.text!r} applied to {var.text!r}, "
                    f"but the bound variable is {self.bound!r}",
                    var.line,
                    var.column,
                )
            return Atom(tok.text)
        if self.bound is not None:
            raise UnboundQuantifierError(
                f"bare atom {tok.text!r} inside forall; "
                f"write {tok.text}({self.bound})",
                tok.line,
                tok.column,
            )
        return Atom(tok.text)

    def forall(self) -> LogicExpr:
        kw = self.next()
        if self.bound is not None:
            raise LogicSyntaxError("nested forall is not supported", kw.line, kw.column)
        var = self.expect("ident", "a bound variable")
        self.expect("colon", "':'")
        self.bound = var.text
        try:
            antecedent = self.disj()
            self.expect("arrow", "'->'")
            consequent = self.impl()
        finally:
            self.bound = None
        return ForallImplies(var.text, antecedent, consequent)


def parse_logic(text: str) -> LogicExpr:
    toks = _tokenize(text)
    if toks[0].kind == "eof":
        raise EmptyInputError("no expression in input")
    return _Parser(toks).parse()


# ---------------------------------------------------------------------------
# Printing / evaluation


def print_logic(e: LogicExpr, _bound: str | None = None) -> str:
    """Fully parenthesized rendering; parse_logic round-trips it."""
    if isinstance(e, Atom):
        return e.name if _bound is None else f"{e.name}({_bound})"
    if isinstance(e, Const):
        return "true" if e.value else "false"
    if isinstance(e, Not):
        return f"(not {print_logic(e.inner, _bound)})"
    if isinstance(e, And):
        return "(" + " and ".join(print_logic(c, _bound) for c in e.conjuncts) + ")"
    if isinstance(e, Or):
        return "(" + " or ".join(print_logic(d, _bound) for d in e.disjuncts) + ")"
    if isinstance(e, Implies):
        return f"({print_logic(e.antecedent, _bound)} -> {print_logic(e.consequent, _bound)})"
    if isinstance(e, ForallImplies):
        a = print_logic(e.antecedent, e.bound_var)
        b = print_logic(e.consequent, e.bound_var)
        return f"(forall {e.bound_var}: {a} -> {b})"
    raise TypeError(f"not a LogicExpr: {e!r}")


def logic_variables(e: LogicExpr) -> set[str]:
    if isinstance(e, Atom):
        return {e.name}
    if isinstance(e, Const):
        return set()
    if isinstance(e, Not):
        return logic_variables(e.inner)
    if isinstance(e, And):
        return set().union(*(logic_variables(c) for c in e.conjuncts))
    if isinstance(e, Or):
        return set().union(*(logic_variables(d) for d in e.disjuncts))
    if isinstance(e, (Implies, ForallImplies)):
        return logic_variables(e.antecedent) | logic_variables(e.consequent)
    raise TypeError(f"not a LogicExpr: {e!r}")


def eval_logic(e: LogicExpr, assignment: Mapping[str, bool]) -> bool:
    """Direct recursive evaluation; the oracle for translation checks."""
    if isinstance(e, Atom):
        return assignment[e.name]
    if isinstance(e, Const):
        return e.value
    if isinstance(e, Not):
        return not eval_logic(e.inner, assignment)
    if isinstance(e, And):
        return all(eval_logic(c, assignment) for c in e.conjuncts)
    if isinstance(e, Or):
        return any(eval_logic(d, assignment) for d in e.disjuncts)
    if isinstance(e, (Implies, ForallImplies)):
        return (not eval_logic(e.antecedent, assignment)) or eval_logic(
            e.consequent, assignment
        )
    raise TypeError(f"not a LogicExpr: {e!r}")
