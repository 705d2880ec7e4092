import pytest

from stratset.anodyne import cofibration_generator, generator, leibniz_tensor
from stratset.filtration import (
    FiltrationError,
    ProductSimplex,
    build_S0,
    classify_extra_marks,
    degeneracy_index,
    index_criterion,
    product_space,
    run_filtration,
    stage,
    target,
    triviality_filtration,
)
from stratset.marking import delta, delta_three, delta_t, tensor

DEFAULT = [(l, m) for l in (-1, 0) for m in (0, 1, 2)]
OPT_IN = [(1, 0), (1, 1), (0, 3)]


def test_degeneracy_index():
    assert degeneracy_index((0, 0, 1, 1)) == 3
    assert degeneracy_index((0, 1, 2)) is None
    s = ProductSimplex.of((0, 1, 2), (0, 0, 1), 4, 1)
    assert degeneracy_index(s) == 1 and str(s) == "[(0,0),(1,0),(2,1)]"


def test_product_space_index():
    sp = product_space(2, 1)
    c, deg = sp.normalize((0, 1, 1, 2), (0, 0, 0, 1))
    assert deg and sp.label(c) == "[(0,0),(1,0),(2,1)]"
    assert len(sp.values) == len(sp.P)


@pytest.mark.parametrize("l,m", DEFAULT + OPT_IN)
def test_certificate_passes(l, m):
    cert = run_filtration(l, m)
    assert cert.passed, cert.to_json(full=False)
    assert all(cert.checks.values())


@pytest.mark.parametrize("l,m", DEFAULT)
def test_stages_add_exactly_the_missing_marks(l, m):
    # computed directly from the two tensor products, independent of the certificate
    T = tensor(delta_three(l, -1, "sharp"), delta(m))
    f = cofibration_generator("boundary", m)
    S0 = leibniz_tensor(generator("saturation", (l,)).realized, f).domain
    cert = run_filtration(l, m)
    added = frozenset().union(*(s.added for s in cert.stages))
    assert added == T.marked - S0.marked
    assert sum(len(s.added) for s in cert.stages) == len(added)


def test_smallest_case():
    cert = run_filtration(-1, 0)
    counts = [len(s.added) for s in cert.stages]
    assert counts == [0, 4, 0, 0, 0, 0]
    labels = cert.to_json(full=False)["stages"][1]["added"]
    assert labels == ["[(0,0),(1,0)]", "[(0,0),(3,0)]", "[(1,0),(2,0)]", "[(2,0),(3,0)]"]


def test_stage_counts_in_a_mixed_case():
    cert = run_filtration(0, 2)
    assert [len(s.added) for s in cert.stages] == [11, 8, 3, 6, 1, 0]


def test_last_stage_reached_at_m3():
    cert = run_filtration(0, 3)
    assert len(cert.stages[5].added) > 0


@pytest.mark.parametrize("l,m", DEFAULT)
def test_classifier(l, m):
    extras = classify_extra_marks(l, m)
    S0, T = build_S0(l, m), target(l, m)
    assert {e.cell for e in extras} == set(T.marked - S0.marked)
    for e in extras:
        assert e.stage in range(1, 7)
        assert len(e.sigma_prime) == e.h - 1
        assert e.sigma_dprime in ((0, 1), (0, 3), (1, 2), (2, 3))


def test_single_stage_api_matches_full_run():
    l, m = 0, 1
    cur = build_S0(l, m)
    cert = run_filtration(l, m)
    for i in range(1, 7):
        cur, rec = stage(i, cur, l, m)
        assert rec.added == cert.stages[i - 1].added
    assert cur.marked == target(l, m).marked


def test_certificate_json_shapes():
    j = run_filtration(0, 1).to_json(full=True)
    assert j["params"] == {"l": 0, "m": 1}
    assert [s["stage"] for s in j["stages"]] == [1, 2, 3, 4, 5, 6]
    assert "attaching_maps" in j["stages"][1]
    assert "attaching_maps" not in run_filtration(0, 1).to_json(full=False)["stages"][1]


@pytest.mark.parametrize("l", (-1, 0, 1))
@pytest.mark.parametrize("m", (0, 1, 2))
def test_index_criterion(l, m):
    rep = index_criterion(l, m)
    assert rep["passed"], rep
    assert rep["kinds"]["sharp"]["marked"] >= rep["kinds"]["eq"]["marked"]


@pytest.mark.parametrize("p,N", [(1, 0), (2, 1)])
@pytest.mark.parametrize("m", (0, 1, 2))
def test_triviality(p, N, m):
    cert = triviality_filtration(p, m, N)
    assert cert.passed, cert.to_json()
    assert cert.below_p_differences == []


def test_triviality_target_is_the_tensor():
    cert = triviality_filtration(2, 1, 1)
    T = tensor(delta_t(2), delta(1))
    assert cert.to_json()["attached_count"] == len(cert.attached)
    assert len(cert.attached) <= len(T.marked)


def test_parameter_errors():
    with pytest.raises(FiltrationError, match="l >= -1"):
        run_filtration(-2, 0)
    with pytest.raises(FiltrationError, match="p > N"):
        triviality_filtration(1, 0, 1)
    with pytest.raises(FiltrationError, match="1..6"):
        stage(7, build_S0(-1, 0), -1, 0)
