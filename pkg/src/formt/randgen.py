"""Seeded random generators for property suites and rate surveys."""

from __future__ import annotations

from random import Random

from . import logic as L
from .form import Atom, Form, Item, Mark

ATOM_POOL = ("a", "b", "c", "d", "e", "f", "g", "h")


def random_logic_expr(rng: Random, max_atoms: int = 8, max_depth: int = 6) -> L.LogicExpr:
    pool = ATOM_POOL[:max_atoms]

    def gen(depth: int) -> L.LogicExpr:
        if depth <= 0:
            return L.Atom(rng.choice(pool))
        kind = rng.choices(
            ("atom", "not", "and", "or", "implies", "const"),
            weights=(30, 15, 20, 20, 13, 2),
        )[0]
        if kind == "atom":
            return L.Atom(rng.choice(pool))
        if kind == "const":
            return L.Const(rng.random() < 0.5)
        if kind == "not":
            return L.Not(gen(depth - 1))
        if kind == "implies":
            return L.Implies(gen(depth - 1), gen(depth - 1))
        n = rng.randint(2, 3)
        parts = tuple(gen(depth - 1) for _ in range(n))
        return L.And(parts) if kind == "and" else L.Or(parts)

    return gen(rng.randint(1, max_depth))


def random_form(rng: Random, max_vars: int = 8, max_depth: int = 6) -> Form:
    pool = ATOM_POOL[:max_vars]

    def gen_item(depth: int) -> Item:
        if depth <= 0 or rng.random() < 0.45:
            return Atom(rng.choice(pool))
        return Mark(gen_space(depth - 1))

    def gen_space(depth: int) -> tuple[Item, ...]:
        return tuple(gen_item(depth) for _ in range(rng.randint(0, 3)))

    return Form(tuple(gen_item(rng.randint(1, max_depth)) for _ in range(rng.randint(1, 4))))


def random_form_with_nodes(rng: Random, max_nodes: int, max_vars: int = 8) -> Form:
    """A form whose node count is capped, for layout stress tests."""
    pool = ATOM_POOL[:max_vars]
    budget = rng.randint(1, max_nodes)

    def gen_space(depth: int) -> tuple[Item, ...]:
        nonlocal budget
        items: list[Item] = []
        while budget > 0 and rng.random() < 0.7:
            budget -= 1
            if depth >= 6 or rng.random() < 0.5:
                items.append(Atom(rng.choice(pool)))
            else:
                items.append(Mark(gen_space(depth + 1)))
        return tuple(items)

    return Form(gen_space(0))
