import math

import pytest

from quatsphere.errors import InsufficientSamplesError, NonPolynomialError, UnsupportedRankError
from quatsphere.spectrum import (
    DiracAssignment,
    finite_difference_degree,
    level_multiplicity,
    level_multiplicity_bruteforce,
    multiplicity_polynomial_degree,
    multiplicity_table,
    spectral_dimension,
    tail_bound,
    zeta_partial_sum,
    zeta_tail,
)
from quatsphere.weights import GammaIndex, weyl_dimension


def test_first_levels_rank_two():
    # each level is a sum of Weyl dimensions of (k, g2) weighted by copies
    for k in range(4):
        want = sum((k - g2 + 1) * weyl_dimension(2, (k, g2)) for g2 in range(k + 1))
        assert level_multiplicity(2, k).multiplicity == want
    assert level_multiplicity(2, 0).multiplicity == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_table_matches_bruteforce(n):
    table = multiplicity_table(n, 15)
    assert list(table) == [level_multiplicity_bruteforce(n, k) for k in range(16)]


def test_rank_one_rejected():
    with pytest.raises(UnsupportedRankError):
        level_multiplicity(1, 3)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_degree(n):
    assert multiplicity_polynomial_degree(n, 4 * n + 8) == 4 * n - 2


def test_degree_needs_samples():
    with pytest.raises(InsufficientSamplesError):
        multiplicity_polynomial_degree(2, 9)


def test_finite_differences():
    assert finite_difference_degree([1] * 8) == 0
    assert finite_difference_degree([k**3 - k for k in range(10)]) == 3
    with pytest.raises(NonPolynomialError):
        finite_difference_degree([2**k for k in range(12)])


def test_partial_sums():
    assert zeta_partial_sum(3, 2.5, 0) == 0
    assert zeta_partial_sum(2, 10, 1) == 13.0
    assert zeta_partial_sum(2, 8, 2) == pytest.approx(13 + 76 / 256, abs=1e-12)
    a = zeta_partial_sum(2, 7, 100)
    b = zeta_partial_sum(2, 7, 200)
    assert b >= a


def test_log_space_terms_for_large_ranks():
    v = zeta_partial_sum(40, 200.0, 50)
    assert math.isfinite(v) and v > 0


def test_tail_bound_dominates_tail():
    for n in (2, 3):
        s = 4 * n
        tail = zeta_tail(n, s, 1000)
        bound, const = tail_bound(n, s, 1000, 4 * n - 2)
        assert 0 < tail <= bound
        assert const >= 1.0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_report(n):
    rep = spectral_dimension(n)
    assert rep.polynomial_degree == 4 * n - 2
    assert rep.spectral_dimension == 4 * n - 1
    assert rep.passed
    d = rep.to_dict()
    assert d["spectral_dimension"] == 4 * n - 1


def test_equivariant_assignment():
    d = DiracAssignment.equivariant()
    assert d(GammaIndex(5, 2, 1)) == 5.0
