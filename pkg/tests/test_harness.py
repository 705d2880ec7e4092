import json

import pytest

from stratset import harness
from stratset.harness import (
    Corpus,
    SuiteReport,
    default_corpus,
    find_pretensor_nonassociativity,
    product_size,
    shrink,
    suite_colimit_preservation,
    suite_equivalent_tensors,
    suite_monoidal,
    suite_op_duality,
    suite_oracles,
    worked_example_table,
)
from stratset.marking import delta, delta_k, delta_t, horn_marked, tensor
from stratset.sset import product


@pytest.fixture(scope="module")
def corpus():
    return default_corpus()


@pytest.fixture(scope="module")
def mini():
    objs = [(n, X) for n, X in default_corpus() if n in ("delta 0", "delta 1", "deltat 1", "delta 2", "deltat 2", "horn(2,0)", "deltak(2,1)", "op(horn(2,0))")]
    return Corpus(objs)


def test_corpus_contents(corpus):
    names = corpus.names()
    assert len(names) == len(set(names))
    for needed in ("delta 3", "deltat 3", "horn(3,2)", "deltak''(3,1)", "delta3eq", "deltathree(0,-1,sharp)", "join(delta 1, deltat 1)", "prod(delta 1, delta 1)"):
        assert needed in names
    assert all(len(X) <= corpus.budget for _, X in corpus)
    assert "deltathree(1,1,eq)" in corpus.excluded


def test_every_corpus_object_validates(corpus):
    for _, X in corpus:
        X.underlying.validate()
        X.validate()


@pytest.mark.parametrize("a,b", [("delta 2", "delta 1"), ("horn(2,1)", "deltak'(3,1)"), ("delta3eq", "boundary 2")])
def test_product_size_estimate_is_exact(corpus, a, b):
    X, Y = corpus.get(a), corpus.get(b)
    assert product_size(X, Y) == len(product(X.underlying, Y.underlying))


def test_worked_example_table():
    rows = worked_example_table()
    assert [(r["pretensor"], r["tensor"]) for r in rows] == harness.WORKED_EXAMPLE_EXPECTED


@pytest.mark.parametrize(
    "suite", [suite_equivalent_tensors, suite_op_duality, suite_colimit_preservation, suite_monoidal], ids=lambda f: f.__name__
)
def test_suites_pass_on_a_small_corpus(mini, suite):
    rep = suite(mini)
    assert rep.passed, rep.to_json()["failures"][:3]
    assert rep.cases


def test_oracle_suite_small(mini):
    rep = suite_oracles(mini)
    assert rep.passed and rep.records["map_problems"] > 0 and rep.records["lifting_problems"] > 0


def test_reports_are_deterministic(mini):
    a = json.dumps(suite_op_duality(mini).to_json())
    b = json.dumps(suite_op_duality(mini).to_json())
    assert a == b
    assert "seconds" not in suite_op_duality(mini).to_json()
    assert "seconds" in suite_op_duality(mini).to_json(timing=True)


def test_pretensor_is_not_associative():
    w = find_pretensor_nonassociativity()
    assert w is not None
    assert w["triple"] == ["delta 1", "delta 1", "delta 1"]


def test_colimit_suite_records_tensor_witnesses(corpus):
    rep = suite_colimit_preservation(corpus)
    assert rep.passed
    assert rep.records["tensor_non_preservation_count"] > 0


def test_shrink_reaches_a_minimal_object():
    X = delta_k(3, 1, 1)
    fails = lambda A: any(A.underlying.dims[c] == 2 for c in A.marked)
    (small,) = shrink([X], fails)
    assert fails(small)
    assert small.underlying.counts() == (3, 3, 1)


def test_failures_carry_shrunk_counterexamples(mini, monkeypatch):
    def lossy_tensor(X, Y, P=None):
        T = tensor(X, Y, P)
        return T.with_marks(set()) if len(T) > 8 else T

    monkeypatch.setattr(harness, "tensor", lossy_tensor)
    rep = suite_equivalent_tensors(Corpus([("deltat 2", delta_t(2)), ("delta 1", delta(1))]))
    assert not rep.passed
    ex = rep.counterexamples[0]
    assert ex["objects"] and ex["shrunk"]
    shrunk_sizes = [sum(o["counts"]) for o in ex["shrunk"]]
    assert sum(shrunk_sizes) < len(delta_t(2)) + len(delta(1))


def test_report_json():
    rep = SuiteReport("x")
    rep.add("a", True)
    rep.add("b", False, note=1)
    j = rep.to_json()
    assert not j["passed"] and j["failures"] == [{"case": "b", "passed": False, "note": 1}]
