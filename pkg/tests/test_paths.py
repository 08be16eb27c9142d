import pytest

from quatsphere import paths
from quatsphere.errors import DomainError
from quatsphere.spectrum import DiracAssignment
from quatsphere.weights import GammaIndex


def test_all_paths_valid():
    for g in paths.gammas_up_to(20):
        rep = paths.build_path(g)
        assert rep.is_valid(), g
        excess = g.g1 - g.g2 - 2 * g.g3
        assert rep.length == (g.g1 - g.g3 if excess >= 0 else g.g2 + g.g3)


def test_example_path():
    rep = paths.build_path((3, 1, 1))
    assert [w.as_tuple() for w in rep.waypoints] == [(0, 0, 0), (1, 1, 0), (3, 1, 1)]
    assert rep.stage_lengths()["M_2+3"] == 1


def test_negative_excess_uses_m13():
    rep = paths.build_path((2, 0, 2))
    assert [m.label for m in rep.moves] == ["M_1+3", "M_1+3"]


def test_moves_respect_regions():
    g = GammaIndex(2, 0, 1)
    assert paths.MoveType.M_2_3.allowed_from(g)
    assert paths.MoveType.M_1.allowed_from(g)
    assert paths.MoveType.M_1_3.allowed_from(g)
    assert not paths.MoveType.M_1_2.allowed_from(g)


def test_eigenvalue_bound():
    assert paths.eigenvalue_bound(0, 3, (5, 5, 0)) == 15
    with pytest.raises(DomainError):
        paths.eigenvalue_bound(0, 0, (1, 0, 0))


def test_equivariant_step_bounds():
    sb = paths.verify_step_bounds(DiracAssignment.equivariant(), 15)
    assert sb.suprema == {1: 1, 2: 2, 3: 1, 4: 1}
    assert sb.c == 2


@pytest.mark.parametrize("seed", range(10))
def test_growth_bound(seed):
    d = paths.random_bounded_step_assignment(seed, 17)
    c = paths.verify_step_bounds(d, 15).c
    d0 = abs(d(GammaIndex(0, 0, 0)))
    for g in paths.gammas_up_to(15):
        assert abs(d(g)) <= paths.eigenvalue_bound(d0, c, g) + 1e-9
        assert abs(d(g)) <= d0 + c * g.g1 + 1e-9
