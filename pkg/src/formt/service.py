"""Local HTTP JSON API over the pipeline.

One project at a time; writes are serialized behind a lock and replace
an immutable snapshot, so concurrent readers never observe torn state.
Any test edit discards the cached report; /evaluate recomputes it.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field, replace

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from .errors import FormtError, InvalidPathError, TooManyVariablesError
from .form import enumerate_nodes, node_at, path_to_str, print_form, str_to_path
from .layout import GROUPING_MODES, build_scene, render_svg, scene_to_dict
from .logic import print_logic
from .pipeline import Analysis, analyze_spec, evaluate_tests
from .testbase import (
    KillReport,
    TestCase,
    mutant_to_dict,
    parse_tests,
    report_to_dict,
    validate_origin,
)
from .translate import item_to_logic, to_logic


@dataclass(frozen=True)
class Settings:
    var_cap: int | None = None
    raw: bool = False
    grouping: str = "document"
    palette: dict | None = None

    def to_json(self) -> dict:
        return {
            "varCap": self.var_cap,
            "raw": self.raw,
            "grouping": self.grouping,
            "palette": self.palette,
        }

    @staticmethod
    def from_json(d: dict | None) -> "Settings":
        d = d or {}
        grouping = d.get("grouping", "document")
        if grouping not in GROUPING_MODES:
            raise ValueError(f"unknown grouping mode {grouping!r}")
        return Settings(
            var_cap=d.get("varCap"),
            raw=bool(d.get("raw", False)),
            grouping=grouping,
            palette=d.get("palette"),
        )


@dataclass(frozen=True)
class ProjectState:
    analysis: Analysis
    settings: Settings
    tests: tuple[TestCase, ...] = ()
    report: KillReport | None = None


@dataclass
class Store:
    lock: threading.Lock = field(default_factory=threading.Lock)
    state: ProjectState | None = None


def _error(status: int, code: str, message: str, detail: dict | None = None):
    return JSONResponse(
        status_code=status,
        content={"error": {"code": code, "message": message, "detail": detail or {}}},
    )


def _test_to_json(t: TestCase) -> dict:
    return {"id": t.id, "assign": dict(t.assignment), "expect": t.expect_json()}


def _project_summary(state: ProjectState) -> dict:
    a = state.analysis
    return {
        "translated": print_form(a.translated),
        "simplified": print_form(a.simplified),
        "base": "raw" if a.raw else "simplified",
        "nodes": [
            {"path": path_to_str(p), "kind": kind} for p, kind in enumerate_nodes(a.base)
        ],
        "mutantCount": len(a.mutants),
        "testCount": len(state.tests),
    }


def create_app() -> FastAPI:
    app = FastAPI(title="formt", docs_url=None, redoc_url=None)
    store = Store()
    app.state.store = store

    @app.exception_handler(FormtError)
    async def formt_error_handler(_req, exc: FormtError):
        status = 400
        if isinstance(exc, TooManyVariablesError):
            status = 422
        elif isinstance(exc, InvalidPathError):
            status = 404
        return _error(status, exc.code, str(exc), exc.detail())

    @app.exception_handler(RequestValidationError)
    async def validation_handler(_req, exc: RequestValidationError):
        return _error(400, "SchemaError", "invalid request", {"errors": exc.errors()})

    def require_state() -> ProjectState:
        state = store.state
        if state is None:
            raise _NoProject()
        return state

    class _NoProject(Exception):
        pass

    @app.exception_handler(_NoProject)
    async def no_project_handler(_req, _exc):
        return _error(409, "NoProject", "no project loaded; POST /project first")

    async def read_body_json(request: Request):
        raw = await request.body()
        import json as _json

        try:
            return _json.loads(raw.decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            return None

    # -- project ------------------------------------------------------

    @app.post("/project")
    async def post_project(request: Request):
        raw = await request.body()
        doc = await read_body_json(request)
        if isinstance(doc, dict) and "spec" in doc:
            spec_text = doc["spec"]
            settings = Settings.from_json(doc.get("settings"))
        else:
            spec_text = raw.decode("utf-8")
            settings = Settings()
        analysis = analyze_spec(spec_text, raw=settings.raw, var_cap=settings.var_cap)
        with store.lock:
            store.state = ProjectState(analysis=analysis, settings=settings)
        return _project_summary(store.state)

    @app.get("/project")
    async def get_project():
        state = require_state()
        return {
            "spec": state.analysis.spec_text,
            "tests": [_test_to_json(t) for t in state.tests],
            "settings": state.settings.to_json(),
            "report": report_to_dict(state.report) if state.report else None,
        }

    @app.put("/project")
    async def put_project(request: Request):
        doc = await read_body_json(request)
        if not isinstance(doc, dict) or "spec" not in doc:
            return _error(400, "SchemaError", "project bundle must contain 'spec'")
        settings = Settings.from_json(doc.get("settings"))
        analysis = analyze_spec(doc["spec"], raw=settings.raw, var_cap=settings.var_cap)
        tests = tuple(parse_tests({"tests": doc.get("tests", [])}))
        with store.lock:
            store.state = ProjectState(analysis=analysis, settings=settings, tests=tests)
        return _project_summary(store.state)

    # -- mutants --------------------------------------------------------

    @app.get("/mutants")
    async def get_mutants():
        state = require_state()
        mutants = state.report.mutants if state.report else state.analysis.mutants
        return {"mutants": [mutant_to_dict(m) for m in mutants]}

    # -- tests ----------------------------------------------------------

    def _validate(state: ProjectState, tests: tuple[TestCase, ...]) -> list[str]:
        return validate_origin(
            state.analysis.base, list(tests), state.settings.var_cap, strict_vars=False
        )

    @app.put("/tests")
    async def put_tests(request: Request):
        state = require_state()
        doc = await read_body_json(request)
        tests = tuple(parse_tests(doc if doc is not None else {}))
        failures = _validate(state, tests)
        with store.lock:
            store.state = replace(state, tests=tests, report=None)
        return {"tests": len(tests), "originFailures": failures}

    @app.post("/tests")
    async def post_test(request: Request):
        state = require_state()
        doc = await read_body_json(request)
        existing = [_test_to_json(t) for t in state.tests]
        tests = tuple(parse_tests({"tests": existing + [doc]}))
        failures = _validate(state, tests)
        with store.lock:
            store.state = replace(state, tests=tests, report=None)
        return {"tests": len(tests), "originFailures": failures}

    # -- evaluation -------------------------------------------------------

    @app.post("/evaluate")
    async def post_evaluate():
        state = require_state()
        report = evaluate_tests(
            state.analysis, list(state.tests), state.settings.var_cap
        )
        with store.lock:
            store.state = replace(state, report=report)
        body = report_to_dict(report)
        overflowed = report.unknown_count > 0 or any(
            m.info and m.info.unknown_test_ids for m in report.mutants
        )
        if overflowed:
            # variable cap exceeded somewhere: the report still carries
            # every decidable outcome, with the rest flagged unknown
            return JSONResponse(status_code=422, content=body)
        return body

    # -- scene ------------------------------------------------------------

    def _scene(state: ProjectState, grouping: str | None):
        mode = grouping or state.settings.grouping
        if mode not in GROUPING_MODES:
            return None
        config = {"palette": state.settings.palette} if state.settings.palette else None
        return build_scene(state.analysis.base, state.report, mode, config)

    @app.get("/scene")
    async def get_scene(grouping: str | None = None):
        state = require_state()
        scene = _scene(state, grouping)
        if scene is None:
            return _error(400, "BadGrouping", f"unknown grouping mode {grouping!r}")
        return scene_to_dict(scene)

    @app.get("/scene.svg")
    async def get_scene_svg(grouping: str | None = None):
        state = require_state()
        scene = _scene(state, grouping)
        if scene is None:
            return _error(400, "BadGrouping", f"unknown grouping mode {grouping!r}")
        config = {"palette": state.settings.palette} if state.settings.palette else None
        return Response(content=render_svg(scene, config), media_type="image/svg+xml")

    # -- node re-translation ------------------------------------------------

    @app.get("/node/{path}/logic")
    async def get_node_logic(path: str):
        state = require_state()
        node_path = str_to_path(path)
        node = node_at(state.analysis.base, node_path)
        if node_path:
            expr = item_to_logic(node)
        else:
            expr = to_logic(node)
        return {"path": path, "logic": print_logic(expr)}

    return app


def serve(port: int = 8000, project_file: str | None = None, host: str = "127.0.0.1"):
    """Run the service; optionally preload a project bundle from disk."""
    import json

    import uvicorn

    app = create_app()
    if project_file:
        with open(project_file, encoding="utf-8") as fh:
            doc = json.load(fh)
        settings = Settings.from_json(doc.get("settings"))
        analysis = analyze_spec(doc["spec"], raw=settings.raw, var_cap=settings.var_cap)
        tests = tuple(parse_tests({"tests": doc.get("tests", [])}))
        app.state.store.state = ProjectState(
            analysis=analysis, settings=settings, tests=tests
        )
    uvicorn.run(app, host=host, port=port)
