import random

import pytest

from quatsphere import hwv
from quatsphere.errors import DomainError
from quatsphere.oracles import fraction_rank
from quatsphere.polynomial import named_variables


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chevalley_relations(n):
    gens = hwv.build_generator_matrices(n)
    E = [list(map(list, g.matrix)) for g in gens if g.kind == "E"]
    F = [list(map(list, g.matrix)) for g in gens if g.kind == "F"]
    H = [list(map(list, g.matrix)) for g in gens if g.kind == "H"]
    assert hwv.chevalley_violations(E, F, H) == []


def test_cartan_matrix_c2():
    assert hwv.cartan_matrix(2) == [[2, -1], [-2, 2]]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_anchor_table(n):
    v = named_variables(n)
    x, y, z, w = v["x"], v["y"], v["z"], v["w"]
    E1 = hwv.generator(n, "E_1")
    assert hwv.apply_generator(E1, x) == -z
    assert hwv.apply_generator(E1, y) == -w
    assert hwv.apply_generator(E1, z).is_zero()
    assert hwv.apply_generator(E1, w).is_zero()
    for i in range(2, n + 1):
        Ei = hwv.generator(n, f"E_{i}")
        assert all(hwv.apply_generator(Ei, c).is_zero() for c in (x, y, z, w))
    H1, H2 = hwv.generator(n, "H_1"), hwv.generator(n, "H_2")
    assert [hwv.apply_generator(H1, c).coefficient_ratio(c) for c in (x, y, z, w)] == [-1, -1, 1, 1]
    assert [hwv.apply_generator(H2, c).coefficient_ratio(c) for c in (x, y, z, w)] == [1, 1, 0, 0]


def test_weights_add_on_products():
    n = 3
    v = named_variables(n)
    for H in (hwv.generator(n, f"H_{i}") for i in range(1, n + 1)):
        for a in v.values():
            for b in v.values():
                ra = hwv.apply_generator(H, a).coefficient_ratio(a)
                rb = hwv.apply_generator(H, b).coefficient_ratio(b)
                assert hwv.apply_generator(H, a * b).coefficient_ratio(a * b) == ra + rb


def test_determinant_is_killed():
    v = named_variables(2)
    det = v["x"] * v["w"] - v["y"] * v["z"]
    assert hwv.apply_generator(hwv.generator(2, "E_1"), det).is_zero()


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("l1,l2", [(1, 0), (2, 1), (3, 0), (3, 3), (4, 2)])
def test_candidates_are_highest_weight(n, l1, l2):
    fam = [hwv.hwv_candidate(l1, l2, j, n) for j in range(l1 - l2 + 1)]
    for j, p in enumerate(fam):
        rep = hwv.verify_highest_weight(p, l1, l2, n, j)
        assert rep.passed, rep.to_dict()
    assert hwv.linear_independence(fam) == (True, l1 - l2 + 1)


def test_wrong_vector_fails():
    v = named_variables(2)
    assert not hwv.verify_highest_weight(v["x"], 1, 0, 2).passed
    assert not hwv.verify_highest_weight(v["w"], 1, 1, 2).passed


def test_candidate_domain():
    with pytest.raises(DomainError):
        hwv.hwv_candidate(2, 3, 0)
    with pytest.raises(DomainError):
        hwv.generator(2, "E_7")


def test_bareiss_matches_fraction_rank():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.4 and r > 1:
            rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1 % r])]
        assert hwv.bareiss_rank(rows) == fraction_rank(rows)


def test_dependent_family():
    v = named_variables(2)
    assert hwv.linear_independence([v["x"], 2 * v["x"]]) == (False, 1)
