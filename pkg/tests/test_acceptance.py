"""Acceptance suite: one test per criterion, printing a pass line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import json
import time
from pathlib import Path
from random import Random

from fastapi.testclient import TestClient

from formt.cli import main as cli_main
from formt.form import (
    Form,
    Mark,
    assignments,
    enumerate_nodes,
    equivalent,
    eval_form,
    parse_form,
    simplify,
    substitute,
    variables,
)
from formt.layout import build_scene, render_svg
from formt.logic import eval_logic, logic_variables, parse_logic
from formt.mutation import (
    classify_true_mutants,
    enumerate_delete_mutants,
    enumerate_mutants,
    enumerate_wrap_mutants,
    survey_equivalent_mutants,
)
from formt.randgen import random_form, random_form_with_nodes, random_logic_expr
from formt.service import create_app
from formt.testbase import parse_tests, run_kill_analysis
from formt.translate import to_form

from test_layout import check_geometry

GOLDEN = Path(__file__).parent / "golden"
DILEMMA = "((p -> q) and (r -> s) and (q or s)) -> (p or r)"


def pf(text):
    return parse_form(text, single_letter_atoms=True)


def _ok(name):
    print(f"PASS {name}")


def test_worked_example_pipeline():
    start = time.perf_counter()
    translated = to_form(parse_logic(DILEMMA))
    simplified = simplify(translated)
    assert translated == pf("(( ((p)q) ((r)s) (qs) )) pr")
    assert simplified == pf("(qs)pr")
    assert time.perf_counter() - start < 1.0
    _ok("worked-example pipeline: translation and simplification match exactly")


def test_mutation_example():
    origin = pf("(qs)pr")
    deletes = enumerate_delete_mutants(origin)
    assert len(deletes) == 1
    assert deletes[0].mutated == pf("qspr")
    wraps = {m.id: m for m in enumerate_wrap_mutants(origin)}
    assert wraps["wrap@0"].mutated == pf("((qs))pr")
    assert simplify(wraps["wrap@0"].mutated) == simplify(deletes[0].mutated)
    _ok("mutation example: unique delete mutant qspr; ((qs))pr simplifies to it")


def test_kill_semantics():
    origin = pf("(qs)pr")
    mutants = classify_true_mutants(origin, enumerate_mutants(origin))

    killing = parse_tests(
        {"tests": [{"assign": {"p": False, "q": False, "r": False, "s": False}, "expect": True}]}
    )
    report = run_kill_analysis(origin, mutants, killing)
    del0 = next(m for m in report.mutants if m.id == "del@0")
    assert del0.info.killed and del0.info.percent_failing == 1.0

    sparing = parse_tests(
        {"tests": [{"assign": {"p": True, "q": False, "r": False, "s": False}, "expect": True}]}
    )
    report = run_kill_analysis(origin, mutants, sparing)
    del0 = next(m for m in report.mutants if m.id == "del@0")
    assert not del0.info.killed and del0.info.percent_failing == 0.0
    _ok("kill semantics: all-FALSE kills qspr; the sparing test does not")


def test_translation_faithfulness_property():
    start = time.perf_counter()
    rng = Random(101)
    for _ in range(1000):
        e = random_logic_expr(rng, max_atoms=8, max_depth=6)
        f = to_form(e)
        for a in assignments(logic_variables(e)):
            assert eval_logic(e, a) == eval_form(f, a)
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _ok(f"translation faithfulness: 1000 random expressions exhaustive ({elapsed:.1f}s)")


def test_simplifier_soundness_property():
    rng = Random(103)
    for _ in range(1000):
        f = random_form(rng, max_vars=8)
        s = simplify(f)
        assert equivalent(f, s)
        assert simplify(s) == s
    _ok("simplifier soundness: 1000 random forms equivalent and idempotent")


def test_wrap_delete_duality_property():
    rng = Random(107)
    checked = 0
    for _ in range(500):
        f = random_form(rng)
        deletes = {m.target: m for m in enumerate_delete_mutants(f)}
        wraps = {m.target: m for m in enumerate_wrap_mutants(f)}
        for target, dm in deletes.items():
            if target in wraps:
                assert simplify(wraps[target].mutated) == simplify(dm.mutated)
                checked += 1
    assert checked > 0
    _ok(f"wrap/delete duality: 500 random forms, {checked} mark targets")


def _brute_truth_vector(f: Form, names) -> list[bool]:
    # independent oracle: ground-substitute, then simplify to ()/empty
    out = []
    for a in assignments(names):
        ground = simplify(substitute(f, a))
        assert ground in (Form(()), Form((Mark(()),)))
        out.append(ground == Form((Mark(()),)))
    return out


def _has_empty_mark(f: Form) -> bool:
    def walk(items):
        return any(
            isinstance(i, Mark) and (not i.items or walk(i.items)) for i in items
        )

    return walk(f.items)


def test_appendix_a_verification():
    # the documented counterexample to the paper's blanket claim
    origin = parse_form("(p) q (q)")
    mutants = classify_true_mutants(origin, enumerate_delete_mutants(origin))
    assert next(m for m in mutants if m.id == "del@0").is_true is False

    # random simplified corpus: verifier must agree with the brute oracle
    rng = Random(109)
    corpus = []
    while len(corpus) < 200:
        f = simplify(to_form(random_logic_expr(rng, max_atoms=6, max_depth=5)))
        if not _has_empty_mark(f):
            corpus.append(f)
    for origin in corpus:
        names = sorted(variables(origin))
        origin_vec = _brute_truth_vector(origin, names)
        for m in classify_true_mutants(origin, enumerate_mutants(origin)):
            mutant_vec = _brute_truth_vector(m.mutated, names)
            assert m.is_true == (mutant_vec != origin_vec)
    survey = survey_equivalent_mutants(corpus)
    print(f"equivalent-mutant rate report: {survey.summary()}")
    _ok("appendix A verification: counterexample flagged; verifier matches oracle")


def test_layout_invariants():
    rng = Random(113)
    for _ in range(200):
        f = random_form_with_nodes(rng, 200)
        mutants = classify_true_mutants(f, enumerate_mutants(f), var_cap=8)
        report = run_kill_analysis(f, mutants, [])
        scene = build_scene(f, report)
        check_geometry(f, scene)
    probe = build_scene(pf("(qs)pr"), None, "byVariables")
    assert render_svg(probe) == render_svg(build_scene(pf("(qs)pr"), None, "byVariables"))
    _ok("layout invariants: 200 random forms; SVG byte-identical across runs")


def test_cli_golden_files(capsys, tmp_path):
    spec = str(GOLDEN / "dilemma.spec")
    cases = [
        (["translate", spec], "translate.golden"),
        (["mutate", spec], "mutate.golden"),
        (["test", spec, str(GOLDEN / "dilemma.tests.json")], "test.golden"),
    ]
    for argv, golden_name in cases:
        assert cli_main(argv) == 0
        out = capsys.readouterr().out
        assert out == (GOLDEN / golden_name).read_text(), golden_name
    _ok("CLI golden files: translate, mutate, test byte-identical")


def test_service_round_trip():
    client = TestClient(create_app())
    assert client.post("/project", content=DILEMMA).status_code == 200
    put = client.put(
        "/tests",
        json={
            "tests": [
                {"id": "t1", "assign": {"p": False, "q": False, "r": False, "s": False},
                 "expect": True}
            ]
        },
    )
    assert put.status_code == 200
    report = client.post("/evaluate").json()
    scene = client.get("/scene").json()
    by_id = {m["id"]: m for m in report["mutants"]}
    refs = 0
    for shape in scene["shapes"]:
        ref = shape.get("mutantRef")
        if not ref:
            continue
        refs += 1
        expected = "killed" if by_id[ref]["info"]["killed"] else "notKilled"
        assert shape["style"]["fillClass"] == expected
    assert refs == len(report["mutants"])
    _ok("service round-trip: scene style classes match the kill report")
