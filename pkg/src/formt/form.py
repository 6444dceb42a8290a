"""Spencer-Brown form calculus: representation, semantics, simplification.

A form is a Space: an ordered sequence of items. An item is either an
Atom (a named variable) or a Mark, whose content is again a Space. The
value of a Space is the OR of its items (empty Space = FALSE); a Mark
negates its content; "()" is therefore TRUE.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .errors import (
    BadAtomError,
    InvalidPathError,
    TooManyVariablesError,
    UnbalancedBracketError,
    UnboundVariableError,
)

DEFAULT_VAR_CAP = 20
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Mark:
    items: tuple["Item", ...] = ()


Item = Union[Atom, Mark]
NodePath = tuple[int, ...]


@dataclass(frozen=True)
class Form:
    """A complete expression: the root Space."""

    items: tuple[Item, ...] = ()


EMPTY = Form(())
TRUE = Form((Mark(()),))


def var_cap_default() -> int:
    env = os.environ.get("FORMT_VAR_CAP")
    return int(env) if env else DEFAULT_VAR_CAP


# ---------------------------------------------------------------------------
# Parsing / printing


def parse_form(text: str, *, single_letter_atoms: bool = False) -> Form:
    """Parse bracket syntax into a Form.

    Juxtaposition is concatenation, whitespace is insignificant. With
    single_letter_atoms every letter is its own atom, so paper-style
    strings like "(qs)pr" parse without separators.
    """
    stack: list[list[Item]] = [[]]
    opens: list[int] = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch == "(":
            stack.append([])
            opens.append(pos)
            pos += 1
        elif ch == ")":
            if len(stack) == 1:
                raise UnbalancedBracketError("unmatched ')'", pos)
            content = tuple(stack.pop())
            opens.pop()
            stack[-1].append(Mark(content))
            pos += 1
        elif single_letter_atoms:
            if not (ch.isalpha() or ch == "_"):
                raise BadAtomError(f"bad atom character {ch!r}", pos)
            stack[-1].append(Atom(ch))
            pos += 1
        else:
            m = _IDENT.match(text, pos)
            if not m:
                raise BadAtomError(f"bad atom character {ch!r}", pos)
            stack[-1].append(Atom(m.group()))
            pos = m.end()
    if opens:
        raise UnbalancedBracketError("unclosed '('", opens[-1])
    return Form(tuple(stack[0]))


def print_form(f: Form, *, compact: bool = False) -> str:
    """Render a Form back to bracket syntax.

    compact joins atoms without spaces (paper style); it requires every
    atom name to be a single character.
    """
    sep = "" if compact else " "
    if compact:
        for name in variables(f):
            if len(name) > 1:
                raise ValueError(f"atom {name!r} too long for compact printing")

    def item(i: Item) -> str:
        if isinstance(i, Atom):
            return i.name
        return "(" + sep.join(item(c) for c in i.items) + ")"

    return sep.join(item(i) for i in f.items)


# ---------------------------------------------------------------------------
# Structure


def variables(f: Form) -> set[str]:
    out: set[str] = set()

    def walk(items):
        for i in items:
            if isinstance(i, Atom):
                out.add(i.name)
            else:
                walk(i.items)

    walk(f.items)
    return out


def node_count(f: Form) -> int:
    def count(items) -> int:
        return sum(1 + (count(i.items) if isinstance(i, Mark) else 0) for i in items)

    return count(f.items)


def enumerate_nodes(f: Form) -> list[tuple[NodePath, str]]:
    """Root Space first, then every item in pre-order document order."""
    out: list[tuple[NodePath, str]] = [((), "space")]

    def walk(items, prefix: NodePath):
        for idx, item in enumerate(items):
            path = prefix + (idx,)
            if isinstance(item, Mark):
                out.append((path, "mark"))
                walk(item.items, path)
            else:
                out.append((path, "atom"))

    walk(f.items, ())
    return out


def node_at(f: Form, path: NodePath):
    """The node addressed by path: the root Form for (), else an Item."""
    if not path:
        return f
    items = f.items
    node = None
    for idx in path:
        if node is not None:
            if not isinstance(node, Mark):
                raise InvalidPathError(path)
            items = node.items
        if idx < 0 or idx >= len(items):
            raise InvalidPathError(path)
        node = items[idx]
    return node


def replace_at(f: Form, path: NodePath, replacement: tuple[Item, ...]) -> Form:
    """Splice replacement in place of the item at path."""
    if not path:
        raise InvalidPathError(path)
    node_at(f, path)  # validate

    def rebuild(items: tuple[Item, ...], rest: NodePath) -> tuple[Item, ...]:
        idx = rest[0]
        if len(rest) == 1:
            return items[:idx] + replacement + items[idx + 1 :]
        target = items[idx]
        assert isinstance(target, Mark)
        new_mark = Mark(rebuild(target.items, rest[1:]))
        return items[:idx] + (new_mark,) + items[idx + 1 :]

    return Form(rebuild(f.items, path))


def path_to_str(path: NodePath) -> str:
    return "root" if not path else ".".join(str(i) for i in path)


def str_to_path(text: str) -> NodePath:
    if text == "root" or text == "":
        return ()
    try:
        return tuple(int(part) for part in text.split("."))
    except ValueError:
        raise InvalidPathError((text,))


# ---------------------------------------------------------------------------
# Semantics


def eval_form(f: Form, assignment: Mapping[str, bool]) -> bool:
    missing = variables(f) - set(assignment)
    if missing:
        raise UnboundVariableError(missing)

    def space(items) -> bool:
        return any(item(i) for i in items)

    def item(i: Item) -> bool:
        if isinstance(i, Atom):
            return assignment[i.name]
        return not space(i.items)

    return space(f.items)


def substitute(f: Form, assignment: Mapping[str, bool]) -> Form:
    """Bind atoms: TRUE becomes an empty mark "()", FALSE is deleted."""

    def space(items) -> tuple[Item, ...]:
        out: list[Item] = []
        for i in items:
            if isinstance(i, Atom):
                if i.name in assignment:
                    if assignment[i.name]:
                        out.append(Mark(()))
                    # FALSE: drop the atom
                else:
                    out.append(i)
            else:
                out.append(Mark(space(i.items)))
        return tuple(out)

    return Form(space(f.items))


def assignments(names) -> Iterator[dict[str, bool]]:
    names = sorted(names)
    for values in itertools.product((False, True), repeat=len(names)):
        yield dict(zip(names, values))


def equivalent(f: Form, g: Form, var_cap: int | None = None) -> bool:
    """Exhaustive truth-table comparison over the union of variables."""
    cap = var_cap if var_cap is not None else var_cap_default()
    names = variables(f) | variables(g)
    if len(names) > cap:
        raise TooManyVariablesError(len(names), cap)
    return all(eval_form(f, a) == eval_form(g, a) for a in assignments(names))


# ---------------------------------------------------------------------------
# Simplification

# Equality modulo commutativity: spaces compare as multisets.


def canon_key(item: Item):
    if isinstance(item, Atom):
        return (0, item.name)
    return (1, tuple(sorted(canon_key(i) for i in item.items)))


def _space_key(items) -> tuple:
    return tuple(sorted(canon_key(i) for i in items))


def _is_empty_mark(item: Item) -> bool:
    return isinstance(item, Mark) and not item.items


def _rewrite_once(items: tuple[Item, ...]) -> tuple[Item, ...] | None:
    """Apply the highest-priority rule at its leftmost position, or None."""
    # crossing: (()) as an item vanishes
    for idx, it in enumerate(items):
        if isinstance(it, Mark) and len(it.items) == 1 and _is_empty_mark(it.items[0]):
            return items[:idx] + items[idx + 1 :]
    # reflexion: ((S)) as an item splices S
    for idx, it in enumerate(items):
        if isinstance(it, Mark) and len(it.items) == 1 and isinstance(it.items[0], Mark):
            return items[:idx] + it.items[0].items + items[idx + 1 :]
    # integration: () among siblings dominates the space
    if len(items) >= 2 and any(_is_empty_mark(i) for i in items):
        return (Mark(()),)
    # iteration: drop a duplicate sibling (keep the leftmost)
    seen: set = set()
    for idx, it in enumerate(items):
        key = canon_key(it)
        if key in seen:
            return items[:idx] + items[idx + 1 :]
        seen.add(key)
    # complement: X alongside (X) collapses to ()
    keys = [canon_key(i) for i in items]
    for idx, it in enumerate(items):
        if isinstance(it, Mark) and len(it.items) == 1:
            inner = canon_key(it.items[0])
            if any(j != idx and keys[j] == inner for j in range(len(items))):
                return (Mark(()),)
    # occultation: X alongside ( ... (X) ... ) deletes the outer mark
    for idx, it in enumerate(items):
        if isinstance(it, Mark):
            for sub in it.items:
                if isinstance(sub, Mark) and len(sub.items) == 1:
                    inner = canon_key(sub.items[0])
                    if any(j != idx and keys[j] == inner for j in range(len(items))):
                        return items[:idx] + items[idx + 1 :]
    return None


def _simplify_space(items: tuple[Item, ...]) -> tuple[Item, ...]:
    items = tuple(
        Mark(_simplify_space(i.items)) if isinstance(i, Mark) else i for i in items
    )
    while True:
        rewritten = _rewrite_once(items)
        if rewritten is None:
            return items
        items = rewritten


def simplify(f: Form) -> Form:
    """Rewrite to a fixed point, innermost-first, leftmost-first.

    Rules: crossing, reflexion, integration, iteration, complement,
    occultation, in that priority order. Every rule strictly reduces
    node count, so this terminates; the result is semantically
    equivalent but not guaranteed minimal.
    """
    return Form(_simplify_space(f.items))
