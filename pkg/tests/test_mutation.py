from random import Random

from formt.form import (
    Form,
    Mark,
    enumerate_nodes,
    node_count,
    parse_form,
    print_form,
    simplify,
)
from formt.mutation import (
    classify_true_mutants,
    enumerate_delete_mutants,
    enumerate_mutants,
    enumerate_wrap_mutants,
    survey_equivalent_mutants,
)
from formt.randgen import random_form


def pf(text):
    return parse_form(text, single_letter_atoms=True)


def test_delete_paper_example():
    ms = enumerate_delete_mutants(pf("(qs)pr"))
    assert [(m.id, print_form(m.mutated)) for m in ms] == [("del@0", "q s p r")]


def test_delete_empty_mark():
    ms = enumerate_delete_mutants(pf("()"))
    assert len(ms) == 1
    assert ms[0].mutated == Form(())


def test_delete_nested():
    ms = enumerate_delete_mutants(pf("((a)b)c"))
    assert [(m.id, print_form(m.mutated)) for m in ms] == [
        ("del@0", "(a) b c"),
        ("del@0.0", "(a b) c"),
    ]


def test_wrap_paper_example():
    ms = {m.id: m for m in enumerate_wrap_mutants(pf("(qs)pr"))}
    assert print_form(ms["wrap@0"].mutated) == "((q s)) p r"
    assert print_form(ms["wrap@root"].mutated) == "((q s) p r)"
    assert print_form(ms["wrap@1"].mutated) == "(q s) (p) r"


def test_wrap_single_atom():
    ms = enumerate_wrap_mutants(pf("a"))
    assert len(ms) == 1  # root-content wrap and atom wrap coincide
    assert print_form(ms[0].mutated) == "(a)"


def test_classify_paper_example():
    origin = pf("(qs)pr")
    ms = classify_true_mutants(origin, enumerate_mutants(origin))
    by_id = {m.id: m for m in ms}
    assert by_id["del@0"].is_true is True
    assert all(m.is_true is True for m in ms)


def test_classify_appendix_a_counterexample():
    origin = parse_form("(p) q (q)")
    ms = classify_true_mutants(origin, enumerate_delete_mutants(origin))
    by_id = {m.id: m for m in ms}
    assert by_id["del@0"].is_true is False  # equivalent: both are tautologies
    assert print_form(by_id["del@0"].mutated) == "p q (q)"


def test_classify_wrap_negation_true():
    origin = parse_form("a")
    ms = classify_true_mutants(origin, enumerate_wrap_mutants(origin))
    assert ms[0].is_true is True


def test_classify_cap_exceeded_is_unknown():
    names = " ".join(f"v{i}" for i in range(6))
    origin = parse_form(f"({names})")
    ms = classify_true_mutants(origin, enumerate_mutants(origin), var_cap=5)
    assert ms and all(m.is_true is None for m in ms)
    assert all(m.status == "unknown" for m in ms)


def test_count_law_random():
    rng = Random(23)
    for _ in range(200):
        f = random_form(rng)
        marks = sum(1 for _, kind in enumerate_nodes(f) if kind == "mark")
        assert len(enumerate_delete_mutants(f)) == marks


def test_single_step_node_count():
    rng = Random(29)
    for _ in range(100):
        f = random_form(rng)
        for m in enumerate_delete_mutants(f):
            assert node_count(m.mutated) == node_count(f) - 1
        for m in enumerate_wrap_mutants(f):
            assert node_count(m.mutated) == node_count(f) + 1


def test_wrap_delete_duality_random():
    rng = Random(31)
    for _ in range(150):
        f = random_form(rng)
        deletes = {m.target: m for m in enumerate_delete_mutants(f)}
        for m in enumerate_wrap_mutants(f):
            if m.target in deletes:  # wrap targets that are marks
                assert simplify(m.mutated) == simplify(deletes[m.target].mutated)


def test_mutants_generated_from_origin_only():
    f = pf("((a)b)c")
    for m in enumerate_mutants(f):
        assert m.mutated != f


def test_survey_reports_rates():
    rng = Random(37)
    origins = [simplify(random_form(rng)) for _ in range(30)]
    survey = survey_equivalent_mutants(origins)
    assert survey.origins == 30
    assert survey.mutants == survey.true_mutants + survey.equivalent_mutants + survey.unknown_mutants
    assert 0.0 <= survey.equivalent_rate <= 1.0
    assert "equivalent_rate=" in survey.summary()
