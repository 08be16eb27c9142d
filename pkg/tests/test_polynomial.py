import random
from fractions import Fraction

import pytest

from quatsphere.errors import DomainError
from quatsphere.polynomial import CoordinateVariable, SymPolynomial, coordinate_variables, named_variables


def random_poly(rng, variables, terms=4, deg=3):
    p = SymPolynomial()
    for _ in range(terms):
        mono = SymPolynomial.constant(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        for _ in range(rng.randint(0, deg)):
            v = rng.choice(variables)
            mono = mono * SymPolynomial.var(v.row, v.col)
        p = p + mono
    return p


def test_no_zero_coefficients():
    v = named_variables(2)
    p = v["x"] + v["y"] - v["x"]
    assert p == v["y"]
    assert (v["x"] - v["x"]).is_zero()


def test_commutative_and_canonical():
    v = named_variables(3)
    assert v["x"] * v["w"] == v["w"] * v["x"]
    assert repr((v["z"] + v["x"]) ** 2) == repr((v["x"] + v["z"]) ** 2)
    assert hash(v["x"] * v["y"]) == hash(v["y"] * v["x"])


def test_power():
    v = named_variables(2)
    p = (v["x"] + v["y"]) ** 3
    assert len(p.terms) == 4
    assert p.terms[((CoordinateVariable(1, 3), 1), (CoordinateVariable(4, 3), 2))] == 3
    with pytest.raises(DomainError):
        v["x"] ** -1


def test_variable_validation():
    with pytest.raises(DomainError):
        CoordinateVariable(0, 1)
    with pytest.raises(DomainError):
        CoordinateVariable(2, 1).check_rank(2)
    assert len(coordinate_variables(3)) == 12


def test_leibniz_rule_on_random_pairs():
    variables = coordinate_variables(2)
    images = {v: random_poly(random.Random(hash((v.row, v.col)) & 0xFFFF), variables, 2, 1)
              for v in variables}
    rng = random.Random(2024)
    for _ in range(200):
        p = random_poly(rng, variables)
        q = random_poly(rng, variables)
        D = lambda f: f.derive(images.__getitem__)
        assert D(p * q) == D(p) * q + p * D(q)
        assert D(p + q) == D(p) + D(q)


def test_coefficient_ratio():
    v = named_variables(2)
    p = v["x"] * v["w"] - v["y"] * v["z"]
    assert (3 * p).coefficient_ratio(p) == 3
    assert (p + v["x"]).coefficient_ratio(p) is None
    assert SymPolynomial().coefficient_ratio(p) == 0
