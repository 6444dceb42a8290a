"""Scene graph of nested shapes with kill styling, and its SVG rendering.

Marks become nested boxes, atoms become labels, wrap mutants become
annotation rings around their target. Delete-mutant kill status styles
the target mark itself; grouping modes permute sibling placement only,
never the shape multiset. Output is deterministic byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DanglingMutantRefError, InvalidPathError
from .form import Form, Mark, NodePath, enumerate_nodes, node_at, path_to_str
from .logic import print_logic
from .mutation import DELETE, WRAP, Mutant
from .testbase import KillReport
from .translate import item_to_logic, to_logic

GROUPING_MODES = ("document", "byVariables", "byDepth", "byKillSector", "byKillCount")

DEFAULT_CONFIG = {
    "padding": 12.0,  # inside marks and the root frame
    "gap": 14.0,  # between siblings; must exceed 2 * ringMargin
    "ringMargin": 4.0,  # wrap annotation inflation
    "sectorGutter": 36.0,  # extra space between kill sectors
    "margin": 16.0,  # around the root frame
    "atomHeight": 24.0,
    "charWidth": 8.0,
    "atomPadding": 5.0,
    "palette": {
        "none": "#37474f",
        "killed": "#2e7d32",
        "notKilled": "#c62828",
        "equivalent": "#757575",
        "unknown": "#ef6c00",
    },
}


@dataclass
class Shape:
    id: str
    path: str
    kind: str  # mark | atomLabel | rootFrame | wrapAnnotation
    x: float
    y: float
    width: float
    height: float
    stroke_kind: str = "solid"
    fill_class: str = "none"
    shape_class: str = "rectangle"  # rectangle | ellipse
    label: str | None = None
    tooltip: str | None = None
    mutant_ref: str | None = None


@dataclass
class SceneGraph:
    grouping: str
    width: float
    height: float
    shapes: list[Shape] = field(default_factory=list)


def merge_config(config: dict | None) -> dict:
    merged = dict(DEFAULT_CONFIG)
    if config:
        for key, value in config.items():
            if key == "palette":
                merged["palette"] = {**DEFAULT_CONFIG["palette"], **value}
            else:
                merged[key] = value
    return merged


def _mutant_fill(m: Mutant) -> str:
    if m.is_true is None:
        return "unknown"
    if m.is_true is False:
        return "equivalent"
    if m.info is None:
        return "none"
    return "killed" if m.info.killed else "notKilled"


def _round(v: float) -> float:
    return round(v + 0.0, 2)


class _Layout:
    def __init__(self, expr: Form, report: KillReport | None, grouping: str, cfg: dict):
        if grouping not in GROUPING_MODES:
            raise ValueError(f"unknown grouping mode {grouping!r}")
        self.expr = expr
        self.grouping = grouping
        self.cfg = cfg
        self.delete_by_path: dict[NodePath, Mutant] = {}
        self.wrap_by_path: dict[NodePath, Mutant] = {}
        valid_paths = {path for path, _ in enumerate_nodes(expr)}
        if report is not None:
            for m in report.mutants:
                if m.target not in valid_paths:
                    raise DanglingMutantRefError(m.id, m.target)
                if m.operator == DELETE:
                    self.delete_by_path[m.target] = m
                elif m.operator == WRAP:
                    self.wrap_by_path[m.target] = m
        self.geoms: dict[NodePath, tuple[float, float, float, float]] = {}
        self._not_killed_cache: dict[NodePath, int] = {}

    # -- grouping keys ------------------------------------------------

    def _subtree_vars(self, item) -> tuple[str, ...]:
        from .form import Form as F, variables

        if isinstance(item, Mark):
            return tuple(sorted(variables(F(item.items))))
        return (item.name,)

    def _depth(self, item) -> int:
        if isinstance(item, Mark):
            return 1 + max((self._depth(i) for i in item.items), default=0)
        return 0

    def _not_killed_count(self, path: NodePath) -> int:
        if path in self._not_killed_cache:
            return self._not_killed_cache[path]
        count = 0
        for source in (self.delete_by_path, self.wrap_by_path):
            for target, m in source.items():
                if target[: len(path)] == path and _mutant_fill(m) == "notKilled":
                    count += 1
        self._not_killed_cache[path] = count
        return count

    def _order(self, items, prefix: NodePath) -> tuple[list[int], set[int]]:
        """Layout order of child indices, plus indices preceded by a gutter."""
        indices = list(range(len(items)))
        mode = self.grouping
        if mode == "byVariables":
            indices.sort(key=lambda i: self._subtree_vars(items[i]))
        elif mode == "byDepth":
            indices.sort(key=lambda i: self._depth(items[i]))
        elif mode == "byKillCount":
            indices.sort(key=lambda i: -self._not_killed_count(prefix + (i,)))
        elif mode == "byKillSector" and prefix == ():
            indices.sort(key=lambda i: 1 if self._not_killed_count((i,)) else 0)
            for pos in range(1, len(indices)):
                clean = self._not_killed_count((indices[pos - 1],)) == 0
                dirty = self._not_killed_count((indices[pos],)) > 0
                if clean and dirty:
                    return indices, {pos}
        return indices, set()

    # -- measurement and placement -------------------------------------

    def _measure(self, item) -> tuple[float, float]:
        cfg = self.cfg
        if not isinstance(item, Mark):
            w = 2 * cfg["atomPadding"] + cfg["charWidth"] * len(item.name)
            return (w, cfg["atomHeight"])
        if not item.items:
            return (cfg["atomHeight"], cfg["atomHeight"])
        sizes = [self._measure(i) for i in item.items]
        w = sum(s[0] for s in sizes) + cfg["gap"] * (len(sizes) - 1) + 2 * cfg["padding"]
        h = max(s[1] for s in sizes) + 2 * cfg["padding"]
        return (w, h)

    def _row_size(self, items, prefix: NodePath) -> tuple[float, float, int]:
        _, gutters = self._order(items, prefix)
        sizes = [self._measure(i) for i in items]
        w = sum(s[0] for s in sizes) + self.cfg["gap"] * max(len(sizes) - 1, 0)
        w += self.cfg["sectorGutter"] * len(gutters)
        h = max((s[1] for s in sizes), default=0.0)
        return (w, h, len(gutters))

    def _place_row(self, items, prefix: NodePath, x: float, y: float, row_h: float):
        order, gutters = self._order(items, prefix)
        cursor = x
        for pos, idx in enumerate(order):
            if pos in gutters:
                cursor += self.cfg["sectorGutter"]
            item = items[idx]
            w, h = self._measure(item)
            top = y + (row_h - h) / 2
            path = prefix + (idx,)
            self.geoms[path] = (cursor, top, w, h)
            if isinstance(item, Mark) and item.items:
                pad = self.cfg["padding"]
                self._place_row(item.items, path, cursor + pad, top + pad, h - 2 * pad)
            cursor += w + self.cfg["gap"]

    def run(self) -> SceneGraph:
        cfg = self.cfg
        pad, margin = cfg["padding"], cfg["margin"]
        row_w, row_h, _ = self._row_size(self.expr.items, ())
        frame_w = row_w + 2 * pad if self.expr.items else 2 * pad + cfg["atomHeight"]
        frame_h = row_h + 2 * pad if self.expr.items else 2 * pad + cfg["atomHeight"]
        fx, fy = margin, margin
        self.geoms[()] = (fx, fy, frame_w, frame_h)
        self._place_row(self.expr.items, (), fx + pad, fy + pad, frame_h - 2 * pad)

        scene = SceneGraph(
            grouping=self.grouping,
            width=_round(frame_w + 2 * margin),
            height=_round(frame_h + 2 * margin),
        )
        counter = 0

        def add(shape: Shape) -> Shape:
            nonlocal counter
            shape.id = f"s{counter}"
            counter += 1
            scene.shapes.append(shape)
            return shape

        # root frame
        add(
            Shape(
                id="",
                path="root",
                kind="rootFrame",
                x=_round(fx),
                y=_round(fy),
                width=_round(frame_w),
                height=_round(frame_h),
                tooltip=print_logic(to_logic(self.expr)),
            )
        )
        # marks and atom labels, document order
        for path, kind in enumerate_nodes(self.expr)[1:]:
            item = node_at(self.expr, path)
            x, y, w, h = self.geoms[path]
            shape = Shape(
                id="",
                path=path_to_str(path),
                kind="mark" if kind == "mark" else "atomLabel",
                x=_round(x),
                y=_round(y),
                width=_round(w),
                height=_round(h),
                label=None if kind == "mark" else item.name,
                tooltip=print_logic(item_to_logic(item)),
            )
            if kind == "mark":
                mutant = self.delete_by_path.get(path)
                if mutant is not None:
                    fill = _mutant_fill(mutant)
                    shape.fill_class = fill
                    shape.shape_class = "rectangle" if fill == "notKilled" else "ellipse"
                    shape.mutant_ref = mutant.id
            add(shape)
        # wrap annotation rings, enumeration order of their targets
        ring = cfg["ringMargin"]
        for path, _ in enumerate_nodes(self.expr):
            mutant = self.wrap_by_path.get(path)
            if mutant is None:
                continue
            x, y, w, h = self.geoms[path]
            fill = _mutant_fill(mutant)
            target_class = "rectangle"
            for s in scene.shapes:
                if s.path == path_to_str(path) and s.kind in ("mark", "rootFrame"):
                    target_class = s.shape_class
            add(
                Shape(
                    id="",
                    path=path_to_str(path),
                    kind="wrapAnnotation",
                    x=_round(x - ring),
                    y=_round(y - ring),
                    width=_round(w + 2 * ring),
                    height=_round(h + 2 * ring),
                    stroke_kind="dashed" if fill == "notKilled" else "solid",
                    fill_class=fill,
                    shape_class=target_class,
                    mutant_ref=mutant.id,
                )
            )
        return scene


def build_scene(
    expr: Form,
    report: KillReport | None = None,
    grouping: str = "document",
    config: dict | None = None,
) -> SceneGraph:
    return _Layout(expr, report, grouping, merge_config(config)).run()


# ---------------------------------------------------------------------------
# Serialization


def scene_to_dict(scene: SceneGraph) -> dict:
    shapes = []
    for s in scene.shapes:
        d = {
            "id": s.id,
            "path": s.path,
            "kind": s.kind,
            "geometry": {"x": s.x, "y": s.y, "width": s.width, "height": s.height},
            "style": {
                "strokeKind": s.stroke_kind,
                "fillClass": s.fill_class,
                "shapeClass": s.shape_class,
            },
        }
        if s.label is not None:
            d["label"] = s.label
        if s.tooltip is not None:
            d["tooltip"] = s.tooltip
        if s.mutant_ref is not None:
            d["mutantRef"] = s.mutant_ref
        shapes.append(d)
    return {
        "grouping": scene.grouping,
        "width": scene.width,
        "height": scene.height,
        "shapes": shapes,
    }


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(scene: SceneGraph, config: dict | None = None) -> bytes:
    """Deterministic SVG 1.1: identical scenes yield identical bytes."""
    cfg = merge_config(config)
    palette = cfg["palette"]
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(scene.width)}" height="{_fmt(scene.height)}" '
        f'viewBox="0 0 {_fmt(scene.width)} {_fmt(scene.height)}">',
        "<style>",
        "shape-rendering: geometricPrecision;",
    ]
    for name in sorted(palette):
        color = palette[name]
        opacity = "0" if name == "none" else "0.15"
        lines.append(
            f".fill-{name}{{stroke:{color};fill:{color};fill-opacity:{opacity};}}"
        )
    lines += [
        ".shape{stroke-width:1.5;}",
        ".wrapAnnotation{fill-opacity:0;stroke-width:1.2;}",
        ".stroke-dashed{stroke-dasharray:6 4;}",
        "text{font-family:monospace;font-size:14px;fill:#111;}",
        "</style>",
    ]
    for s in scene.shapes:
        attrs = f'data-path="{_esc(s.path)}"'
        if s.mutant_ref is not None:
            attrs += f' data-mutant="{_esc(s.mutant_ref)}"'
        lines.append(f"<g {attrs}>")
        cls = f"shape {s.kind} fill-{s.fill_class} stroke-{s.stroke_kind}"
        if s.kind == "atomLabel":
            cx = s.x + s.width / 2
            cy = s.y + s.height / 2
            lines.append(
                f'<text class="{s.kind}" x="{_fmt(cx)}" y="{_fmt(cy)}" '
                f'text-anchor="middle" dominant-baseline="central">{_esc(s.label or "")}</text>'
            )
        elif s.shape_class == "ellipse":
            cx = s.x + s.width / 2
            cy = s.y + s.height / 2
            lines.append(
                f'<ellipse class="{cls}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                f'rx="{_fmt(s.width / 2)}" ry="{_fmt(s.height / 2)}"/>'
            )
        else:
            lines.append(
                f'<rect class="{cls}" x="{_fmt(s.x)}" y="{_fmt(s.y)}" '
                f'width="{_fmt(s.width)}" height="{_fmt(s.height)}" rx="6"/>'
            )
        if s.tooltip:
            lines.append(f"<title>{_esc(s.tooltip)}</title>")
        lines.append("</g>")
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
