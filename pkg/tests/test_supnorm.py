import math

import pytest

from quatsphere import supnorm
from quatsphere.errors import DomainError
from quatsphere.oracles import closed_form_sup
from quatsphere.supnorm import GridConfig, Surrogate, ThetaPoint
from quatsphere.weights import GammaIndex

S2 = 1 / math.sqrt(2)


def test_theta_point_validation():
    ThetaPoint(0.5, 0.5, 0.5, 0.5)
    with pytest.raises(DomainError):
        ThetaPoint(1, 1, 0, 0)
    with pytest.raises(DomainError):
        ThetaPoint(-0.0001, 1, 0, 0)


def test_eval_g():
    assert supnorm.eval_g((1, 0, 1), (0, 0, 1, 0)) == 1
    assert supnorm.eval_g((1, 1, 0), ThetaPoint(S2, 0, 0, S2)) == pytest.approx(0.5)
    assert supnorm.eval_g((0, 0, 0), ThetaPoint(0.5, 0.5, 0.5, 0.5)) == 1
    with pytest.raises(DomainError):
        supnorm.eval_g((1, 0, 0), (1, 1, 1, 1))


def test_known_suprema():
    w = supnorm.sup_norm(supnorm.gamma_surrogate((1, 0, 0)))
    assert w.value == pytest.approx(1, abs=1e-12)
    assert w.argmax.w == pytest.approx(1)
    assert supnorm.sup_norm(supnorm.gamma_surrogate((1, 1, 0))).value == pytest.approx(0.5, abs=1e-9)
    f11 = supnorm.sup_norm(supnorm.fmn_surrogate(1, 1)).value
    assert f11 == pytest.approx(3 * math.sqrt(3) / 32, abs=1e-9)


@pytest.mark.parametrize("a,b,c", [(0, 0, 1), (2, 1, 0), (1, 3, 2), (4, 0, 5), (3, 3, 3), (0, 5, 1)])
def test_matches_closed_form(a, b, c):
    val = supnorm.sup_norm(Surrogate(a, b, c)).value
    assert val == pytest.approx(closed_form_sup(a, b, c), rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("a,b,c", [(1, 2, 1), (0, 2, 2), (3, 1, 0)])
def test_swap_symmetry(a, b, c):
    f = Surrogate(a, b, c)
    assert supnorm.sup_norm(f).value == pytest.approx(supnorm.sup_norm(f.swapped()).value, abs=1e-9)


def test_maximizer_examples():
    assert supnorm.theta_maximizer(1, 0).as_tuple() == pytest.approx((0.5,) * 4)
    assert supnorm.theta_maximizer(0, 1).as_tuple() == pytest.approx((0, 0, S2, S2))
    assert supnorm.theta_maximizer(2, 1).as_tuple() == pytest.approx(
        (0.408248290, 0.408248290, 0.577350269, 0.577350269), abs=1e-9)
    assert sum(supnorm.theta_maximizer_squares(3, 7)) == 1
    with pytest.raises(DomainError):
        supnorm.theta_maximizer(0, 0)


@pytest.mark.parametrize("m,n", [(1, 0), (0, 3), (4, 2), (10, 10), (7, 1)])
def test_maximizer_attains_sup(m, n):
    f = supnorm.fmn_surrogate(m, n)
    assert abs(supnorm.sup_norm(f).value - f(supnorm.theta_maximizer(m, n))) <= 1e-6


def test_ratio_regions():
    assert supnorm.region_holds(1, GammaIndex(2, 2, 0))
    assert supnorm.region_holds(2, GammaIndex(3, 1, 1))
    assert not supnorm.region_holds(3, GammaIndex(2, 0, 2))
    with pytest.raises(DomainError):
        supnorm.ratio_bound(1, (2, 0, 0))
    assert supnorm.ratio_bound(1, (3, 3, 0)) == pytest.approx(2, abs=1e-6)


def test_crosscheck_can_fire(monkeypatch):
    from quatsphere import kernels

    monkeypatch.setattr(supnorm.kernels, "sphere_grid_max",
                        lambda *a: (10.0, 0, 0, 0))
    cfg = GridConfig(resolution=31)
    with pytest.raises(supnorm.SymmetryAssumptionViolated):
        supnorm.sup_norm(Surrogate(1, 1, 1), cfg)
    assert kernels is not None


def test_cpt_examples():
    f, h = Surrogate(0, 0, 1), Surrogate(0, 1, 0)
    rep = supnorm.cpt_ratio_check(f, h, 5)
    assert rep.precondition_met and rep.passed
    assert rep.bound == pytest.approx(math.sqrt(2), rel=1e-6)
    one = supnorm.cpt_ratio_check(Surrogate(0, 0, 0), h, 3)
    assert one.ratios == pytest.approx([1, 1, 1, 1])


def test_vacuous_pairs_are_detected():
    assert supnorm.h_vanishes_on_argmax_set(Surrogate(0, 2, 0), Surrogate(1, 0, 0))
    rep = supnorm.cpt_ratio_check(Surrogate(0, 2, 0), Surrogate(1, 0, 0), 2)
    assert not rep.precondition_met


def test_random_pairs_deterministic():
    assert supnorm.random_surrogate_pairs(4, 20) == supnorm.random_surrogate_pairs(4, 20)
    pairs = supnorm.random_surrogate_pairs(4, 20)
    assert not any(supnorm.h_vanishes_on_argmax_set(f, h) for f, h in pairs)
