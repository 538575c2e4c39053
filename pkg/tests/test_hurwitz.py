import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kospheres.hurwitz import binom_odd, hr_family, hr_violations, is_signed_permutation, radon_hurwitz

from oracles import RHO_1_TO_32


@pytest.mark.parametrize("n, rho", [(1, 1), (2, 2), (4, 4), (8, 8), (12, 4), (16, 9), (32, 10), (64, 12), (256, 17)])
def test_radon_hurwitz_examples(n, rho):
    assert radon_hurwitz(n) == rho


def test_radon_hurwitz_matches_table():
    assert tuple(radon_hurwitz(n) for n in range(1, 33)) == RHO_1_TO_32


@given(st.integers(1, 10_000))
def test_radon_hurwitz_depends_on_two_part(n):
    assert radon_hurwitz(n) == radon_hurwitz(n & -n)
    assert radon_hurwitz(16 * n) == radon_hurwitz(n) + 8


@pytest.mark.parametrize("bad", [0, -3])
def test_radon_hurwitz_rejects(bad):
    with pytest.raises(ValueError):
        radon_hurwitz(bad)


@pytest.mark.parametrize("n, m, odd", [(1, 1, False), (2, 4, True), (3, 7, False), (0, 0, True), (5, 2, True)])
def test_binom_odd_examples(n, m, odd):
    assert binom_odd(n, m) is odd


@given(st.integers(0, 300), st.integers(0, 300))
def test_binom_odd_matches_math_comb(n, m):
    assert binom_odd(n, m) == (math.comb(n + m, n) % 2 == 1)


def test_small_families():
    assert [m.tolist() for m in hr_family(1, 1).mats] == [[[1]]]
    two = hr_family(2, 2).mats
    assert two[0].tolist() == [[1, 0], [0, 1]]
    assert two[1].tolist() == [[0, 1], [-1, 0]]
    assert len(hr_family(4, 4)) == 4 and hr_violations(hr_family(4, 4)) == []


@pytest.mark.parametrize("k", range(1, 65))
def test_full_families_are_exact(k):
    fam = hr_family(k, radon_hurwitz(k))
    assert len(fam) == radon_hurwitz(k)
    assert np.array_equal(fam.mats[0], np.eye(k, dtype=np.int64))
    assert all(is_signed_permutation(m) for m in fam.mats)
    assert hr_violations(fam) == []


@pytest.mark.parametrize("k", [128, 256, 48, 80])
def test_large_families_are_exact(k):
    assert hr_violations(hr_family(k, radon_hurwitz(k))) == []


def test_capacity_error():
    with pytest.raises(ValueError, match="capacity"):
        hr_family(3, 2)
    with pytest.raises(ValueError, match="capacity"):
        hr_family(16, 10)


def test_violation_detection():
    fam = hr_family(4, 3)
    broken = type(fam)(4, (fam.mats[0], fam.mats[1], fam.mats[1]))
    assert (1, 2) in hr_violations(broken)


def test_signed_permutation():
    assert is_signed_permutation(np.array([[0, -1], [1, 0]]))
    assert not is_signed_permutation(np.array([[1, 1], [0, 1]]))
    assert not is_signed_permutation(np.array([[2, 0], [0, 1]]))
