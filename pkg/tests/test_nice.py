import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kospheres.bilinear import BilinearMap, base_nice, sample_sphere, verify_nice, verify_normed
from kospheres.hurwitz import binom_odd, radon_hurwitz
from kospheres.nice import (
    BASE,
    SWAP,
    HypothesisError,
    InvalidDerivation,
    NiceDerivation,
    Step,
    add_left,
    certify_nice,
    emit_regular_map,
    realize,
    replay_states,
)

EXAMPLE_5_2 = NiceDerivation((BASE, add_left(1), SWAP, add_left(2), SWAP, add_left(4)), (5, 2))


def test_step_parsing():
    assert Step.parse("AddLeft(12)") == add_left(12)
    assert Step.parse(" Swap ") == SWAP
    with pytest.raises(ValueError):
        Step.parse("AddRight(1)")
    with pytest.raises(ValueError):
        add_left(0)


def test_example_derivation_replays():
    assert EXAMPLE_5_2.replay() == (5, 2)
    assert list(replay_states(EXAMPLE_5_2)) == [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (5, 2)]
    assert str(EXAMPLE_5_2) == "Base, AddLeft(1), Swap, AddLeft(2), Swap, AddLeft(4)"


@pytest.mark.parametrize(
    "steps, target, message",
    [
        ((add_left(1),), (1, 0), "starts with Base"),
        ((BASE, add_left(1), SWAP, add_left(1)), (1, 1), "rho"),
        ((BASE, add_left(2)), (3, 0), "ends at"),
        ((BASE, BASE), (0, 0), "only appear first"),
        ((BASE, add_left(1), SWAP, add_left(2), SWAP, add_left(1)), (2, 2), "rho"),
    ],
)
def test_invalid_derivations(steps, target, message):
    d = NiceDerivation(steps, target)
    with pytest.raises(InvalidDerivation, match=message):
        d.replay()
    assert not d.is_valid()


def test_valid_moves_never_reach_even_binomial():
    # the parity check in replay is a safety net: every state reachable by
    # rho-valid moves already has an odd binomial coefficient
    seen, frontier = {(0, 0)}, [(0, 0)]
    while frontier:
        a, b = frontier.pop()
        assert binom_odd(a, b), (a, b)
        for nxt in [(b, a)] + [(a + k, b) for k in range(1, 60) if radon_hurwitz(k) > b]:
            if max(nxt) <= 60 and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    assert len(seen) > 300


def test_certify_examples():
    assert certify_nice(0, 0).steps == (BASE,)
    d = certify_nice(5, 2)
    assert d is not None and d.replay() == (5, 2)
    assert certify_nice(1, 1) is None
    assert certify_nice(16, 8) is not None
    assert certify_nice(8, 16) is not None


def test_certify_budget():
    assert certify_nice(8, 64, max_expansions=1) is None
    assert certify_nice(8, 64) is not None


def test_json_round_trip():
    data = json.loads(json.dumps(EXAMPLE_5_2.to_json()))
    assert data == {"target": [5, 2], "steps": ["Base", "AddLeft(1)", "Swap", "AddLeft(2)", "Swap", "AddLeft(4)"]}
    assert NiceDerivation.from_json(data) == EXAMPLE_5_2


@given(st.integers(0, 24), st.integers(0, 24))
@settings(max_examples=60, deadline=None)
def test_certified_implies_odd_binomial(n, m):
    d = certify_nice(n, m)
    if d is not None:
        assert binom_odd(n, m)
        assert d.replay() == (n, m)
    if not binom_odd(n, m):
        assert d is None


def test_realize_examples():
    assert realize(NiceDerivation((BASE,), (0, 0))) == base_nice()
    assert realize(certify_nice(2, 1)).shape == (3, 2, 4)
    f = realize(EXAMPLE_5_2)
    assert f.shape == (6, 3, 8)
    assert verify_normed(f) and verify_nice(f)


def test_realize_rejects_invalid():
    with pytest.raises(InvalidDerivation):
        realize(NiceDerivation((BASE, add_left(3), SWAP, add_left(1)), (1, 3)))


@pytest.mark.parametrize("n", range(0, 9))
def test_odd_pairs_with_small_n_certify(n):
    for m in range(0, 65):
        if binom_odd(n, m):
            d = certify_nice(n, m)
            assert d is not None, (n, m)
            f = realize(d)
            assert f.shape == (n + 1, m + 1, n + m + 1)


def test_pairs_with_m_below_rho():
    for n in range(1, 33):
        for m in range(radon_hurwitz(n)):
            assert certify_nice(n, m) is not None, (n, m)


def test_emit_regular_map():
    spec = emit_regular_map(realize(certify_nice(2, 1)), samples=20, seed=5)
    data = spec.to_json()
    assert (data["n"], data["m"], data["scale"], data["sphere"]) == (2, 1, "1/2", "shifted")
    assert data["certificate"]["normed"] and data["certificate"]["nice"]
    assert data["certificate"]["binom_odd"]
    assert data["certificate"]["sphere_samples"]["failures"] == 0
    assert data["polynomials"][0] == "1/2*(x1*y1)"


@pytest.mark.parametrize(
    "f, reason",
    [
        (None, "not nice"),
        (BilinearMap([[[1, 0], [0, -1]], [[0, 1], [1, 0]]]), "target dimension"),
        (base_nice(), "positive dimension"),
        (realize(certify_nice(2, 1)).with_entry(1, 1, 0, 5), "not normed"),
    ],
)
def test_emit_rejects(f, reason):
    if f is None:
        # permuting output coordinates keeps the map normed but not nice
        good = realize(certify_nice(2, 1))
        f = BilinearMap(good.mats[[1, 0, 2, 3]])
    with pytest.raises(HypothesisError, match=reason):
        emit_regular_map(f)


def test_emit_rejects_even_binomial():
    # no normed map of this shape exists at all; the error lists every failed hypothesis
    f = BilinearMap([[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]]])
    with pytest.raises(HypothesisError, match="even"):
        emit_regular_map(f)


@pytest.mark.parametrize("pair", [(2, 1), (1, 2), (4, 3), (5, 2), (8, 1), (2, 4)])
def test_shifted_sphere_samples(pair):
    f = realize(certify_nice(*pair))
    assert not list(sample_sphere(f, 60, seed=11))
    g = f.with_entry(1, 0, 1, int(f.mats[1, 0, 1]) + 1)
    assert list(sample_sphere(g, 60, seed=11))
