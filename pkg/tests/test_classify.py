import pytest

from kospheres.classify import (
    BOTH_ODD,
    CONJECTURE,
    KR_OBSTRUCTION,
    NICE_PAIR,
    Verdict,
    classify,
    classify_range,
    congruence_obstructed,
    consistency_audit,
)
from kospheres.hurwitz import binom_odd


@pytest.mark.parametrize(
    "n, m, verdict",
    [
        (1, 1, Verdict.ONLY_NULL_HOMOTOPIC),
        (3, 5, Verdict.ONLY_NULL_HOMOTOPIC),
        (2, 2, Verdict.EVEN_DEGREES_ONLY),
        (2, 3, Verdict.EVEN_DEGREES_ONLY),
        (3, 2, Verdict.EVEN_DEGREES_ONLY),
        (6, 7, Verdict.EVEN_DEGREES_ONLY),
        (2, 6, Verdict.EVEN_DEGREES_ONLY),
        (2, 4, Verdict.ALL_DEGREES),
        (1, 2, Verdict.ALL_DEGREES),
        (4, 3, Verdict.ALL_DEGREES),
        (16, 8, Verdict.ALL_DEGREES),
        (9, 16, Verdict.UNKNOWN_CONJECTURED_ALL),
        (4, 4, Verdict.UNKNOWN_CONJECTURED_EVEN_ONLY),
    ],
)
def test_spot_checks(n, m, verdict):
    assert classify(n, m).verdict is verdict


def test_evidence():
    st = classify(1, 1)
    assert st.evidence == BOTH_ODD and str(st).startswith("OnlyNullHomotopic (")
    st = classify(2, 2)
    assert st.evidence == KR_OBSTRUCTION and st.witness
    st = classify(2, 4)
    assert st.evidence == NICE_PAIR and st.derivation.replay() == (2, 4)
    st = classify(4, 4)
    assert st.evidence == CONJECTURE and st.binom_odd is False
    assert st.verdict.is_unknown and not classify(2, 4).verdict.is_unknown


def test_json_record():
    data = classify(2, 4).to_json()
    assert data["verdict"] == "AllDegrees"
    assert data["derivation"]["target"] == [2, 4]
    assert "witness" in classify(2, 6).to_json()


@pytest.mark.parametrize("bad", [(0, 1), (1, 0), (-2, 3)])
def test_rejects_non_positive(bad):
    with pytest.raises(ValueError):
        classify(*bad)


def test_budget_makes_pairs_unknown():
    st = classify(2, 4, max_expansions=0)
    assert st.verdict is Verdict.UNKNOWN_CONJECTURED_ALL


def test_range_is_row_major():
    pairs = [(s.n, s.m) for s in classify_range(3)]
    assert pairs == [(n, m) for n in range(1, 4) for m in range(1, 4)]


def test_range_invariants():
    table = {(s.n, s.m): s for s in classify_range(16)}
    even_only = {p for p, s in table.items() if s.verdict is Verdict.EVEN_DEGREES_ONLY}
    assert even_only == {p for p in table if congruence_obstructed(*p)}
    for (n, m), s in table.items():
        assert s.verdict is table[(m, n)].verdict
        if s.verdict is Verdict.UNKNOWN_CONJECTURED_ALL:
            assert max(n, m) > 8
        if s.verdict is Verdict.ONLY_NULL_HOMOTOPIC:
            assert n % 2 and m % 2
        if s.verdict is Verdict.ALL_DEGREES:
            assert s.derivation is not None and binom_odd(n, m)
        if s.verdict.is_unknown:
            expected = Verdict.UNKNOWN_CONJECTURED_ALL if binom_odd(n, m) else Verdict.UNKNOWN_CONJECTURED_EVEN_ONLY
            assert s.verdict is expected


@pytest.mark.parametrize("N", [8, 16])
def test_audit_is_clean(N):
    report = consistency_audit(N)
    assert report.ok, report.violations
    assert report.pairs == N * N
    assert sum(report.counts.values()) == N * N
    assert report.to_json()["ok"] is True
