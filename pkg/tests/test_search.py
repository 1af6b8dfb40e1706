"""Candidate pipeline and symmetric sweep drivers."""

import pytest

from circ4.analysis import BoundsTable, Classification
from circ4.search import (
    ReportRecord,
    analyze_vector,
    candidate_pipeline,
    sweep_symmetric,
    symmetric_vector_space,
)


def test_pipeline_order_24():
    records = candidate_pipeline(24)
    assert [r.strategy for r in records] == ["candidate_plus", "candidate_minus"]
    for rec in records:
        assert rec.n == 24
        assert rec.d == 8
        assert rec.proof_complete
        assert rec.self_dual
        assert rec.classification is Classification.PROPOSED_OPTIMUM
        assert rec.elapsed_ms is not None


def test_pipeline_order_16_and_22_published_rows():
    recs16 = candidate_pipeline(16)
    assert recs16[0].vector == "w110100010001011"
    assert recs16[0].d == 6
    recs22 = candidate_pipeline(22)
    assert recs22[0].vector == "w110101000010000101011"
    assert recs22[0].d == 8


def test_pipeline_requires_bound_entry():
    with pytest.raises(ValueError, match="n=14"):
        candidate_pipeline(14)


def test_symmetric_vector_space_counts():
    assert symmetric_vector_space(12) == 64
    assert symmetric_vector_space(16) == 256
    assert symmetric_vector_space(19) == 512
    assert symmetric_vector_space(1) == 1


def test_sweep_exhaustive_order_12():
    records = sweep_symmetric(12, budget=64, seed=0)
    assert len(records) == 64
    best = records[0]
    assert best.d == 6
    texts = {r.vector: r for r in records}
    assert "w10100100101" in texts
    assert texts["w10100100101"].d == 6
    # sorted by distance descending, then text
    ds = [r.d for r in records]
    assert ds == sorted(ds, reverse=True)
    # exhaustive mode ignores the seed entirely
    assert records == sweep_symmetric(12, budget=64, seed=999)
    assert all(r.seed is None and r.elapsed_ms is None for r in records)


def test_sweep_contains_published_order_16_row():
    records = sweep_symmetric(16, budget=256, seed=0)
    assert len(records) == 256
    match = [r for r in records if r.vector == "w101010010010101"]
    assert len(match) == 1
    assert match[0].d == 6
    assert match[0].proof_complete
    assert records[0].d == 6  # nothing in this space beats 6


def test_sweep_target_screens_losers():
    full = sweep_symmetric(12, budget=64, seed=0)
    screened = sweep_symmetric(12, budget=64, seed=0, target=6)
    assert {r.vector for r in screened} == {r.vector for r in full if r.d >= 6}
    for rec in screened:
        assert rec.d >= 6
        assert rec.proof_complete


def test_sweep_random_mode_is_seeded():
    a = sweep_symmetric(17, budget=8, seed=3)
    b = sweep_symmetric(17, budget=8, seed=3)
    c = sweep_symmetric(17, budget=8, seed=4)
    assert a == b
    assert len(a) == 8
    assert all(r.seed == 3 for r in a)
    assert {r.vector for r in a} != {r.vector for r in c}


def test_sweep_budget_validation():
    with pytest.raises(ValueError, match="budget"):
        sweep_symmetric(12, budget=0, seed=0)


def test_sweep_threaded_matches_serial():
    serial = sweep_symmetric(14, budget=128, seed=0, target=4)
    threaded = sweep_symmetric(14, budget=128, seed=0, target=4, workers=3)
    assert serial == threaded


def test_record_json_round_trip_and_reanalysis():
    records = sweep_symmetric(12, budget=64, seed=0)[:5]
    for rec in records:
        clone = ReportRecord.from_json_dict(rec.to_json_dict())
        assert clone == rec
        again = analyze_vector(rec.vector, timed=False)
        assert again.d == rec.d
        assert again.classification == rec.classification
        assert again.self_dual == rec.self_dual


def test_analyze_vector_with_enumerator():
    rec = analyze_vector("w10100100101", with_enumerator=True)
    assert rec.enumerator == (1, 0, 0, 0, 0, 0, 396, 0, 1485, 0, 1980, 0, 234)
    assert rec.d == 6
    assert rec.classification is Classification.OPTIMUM
