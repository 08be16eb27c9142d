"""Exit criteria at their stated tolerances; one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the summary.
"""
import pytest

from quatsphere import acceptance

RESULTS = {}


@pytest.fixture(scope="module", autouse=True)
def summary():
    yield
    print()
    for number in sorted(RESULTS):
        res = RESULTS[number]
        print(f"{res.line()}  ({res.seconds:.2f} s)")


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number):
    res = acceptance.run_criterion(number)
    RESULTS[number] = res
    print(res.line())
    assert res.passed, res.to_dict()


def test_criterion_1_runtime():
    assert RESULTS[1].seconds < 10.0


def test_criterion_5_runtime():
    assert RESULTS[5].seconds < 30.0


def test_verify_all_names_every_criterion(capsys):
    from quatsphere import cli

    code = cli.main(["verify-all"])
    err = capsys.readouterr().err
    assert code == 0
    for number in acceptance.CRITERIA:
        assert f"criterion {number:2d}:" in err
