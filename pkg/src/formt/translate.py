"""Translation between conventional logic and form calculus.

Forward: AND a b -> ((a)(b)) generalized n-ary, OR -> concatenation,
NOT b -> (b), a -> b and forall-implication -> (a)b.

Backward: spaces become ORs, marks become NOTs, except the all-marks
pattern ((A)(B)...) which reads back as an AND. Implication
reconstruction is intentionally not attempted.
"""

from __future__ import annotations

from . import logic as L
from .form import Atom, Form, Item, Mark


def to_form(e: L.LogicExpr) -> Form:
    return Form(_expr_items(e))


def _expr_items(e: L.LogicExpr) -> tuple[Item, ...]:
    if isinstance(e, L.Atom):
        return (Atom(e.name),)
    if isinstance(e, L.Const):
        return (Mark(()),) if e.value else ()
    if isinstance(e, L.Not):
        return (Mark(_expr_items(e.inner)),)
    if isinstance(e, L.Or):
        out: tuple[Item, ...] = ()
        for d in e.disjuncts:
            out += _expr_items(d)
        return out
    if isinstance(e, L.And):
        return (Mark(tuple(Mark(_expr_items(c)) for c in e.conjuncts)),)
    if isinstance(e, (L.Implies, L.ForallImplies)):
        return (Mark(_expr_items(e.antecedent)),) + _expr_items(e.consequent)
    raise TypeError(f"not a LogicExpr: {e!r}")


def to_logic(f: Form) -> L.LogicExpr:
    return space_to_logic(f.items)


def space_to_logic(items: tuple[Item, ...]) -> L.LogicExpr:
    if not items:
        return L.Const(False)
    parts = tuple(item_to_logic(i) for i in items)
    return parts[0] if len(parts) == 1 else L.Or(parts)


def item_to_logic(item: Item) -> L.LogicExpr:
    if isinstance(item, Atom):
        return L.Atom(item.name)
    if not item.items:
        return L.Const(True)
    if len(item.items) >= 2 and all(isinstance(i, Mark) for i in item.items):
        return L.And(tuple(space_to_logic(i.items) for i in item.items))
    return L.Not(space_to_logic(item.items))
