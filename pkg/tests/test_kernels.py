import os
import subprocess
import sys

import numpy as np
import pytest

from quatsphere import kernels

py = kernels.backend_module("python")
try:
    cy = kernels.backend_module("cython")
except ImportError:  # extension not built
    cy = None

needs_cython = pytest.mark.skipif(cy is None, reason="compiled kernels not built")
CASES = [(0, 0, 0), (1, 0, 0), (2, 3, 1), (5, 0, 4), (0, 7, 2), (3, 3, 3)]


@needs_cython
@pytest.mark.parametrize("a,b,c", CASES)
def test_reduced_grid_parity(a, b, c):
    args = (a, b, c, 0.1, 1.3, 0.2, 1.5, 57)
    np.testing.assert_allclose(cy.reduced_grid_values(*args), py.reduced_grid_values(*args),
                               rtol=1e-13, atol=1e-300)
    assert cy.reduced_grid_max(*args)[1:] == py.reduced_grid_max(*args)[1:]
    assert cy.reduced_grid_max(*args)[0] == pytest.approx(py.reduced_grid_max(*args)[0], rel=1e-13)


@needs_cython
@pytest.mark.parametrize("a,b,c", CASES)
@pytest.mark.parametrize("mix", [0, 1])
def test_sphere_grid_parity(a, b, c, mix):
    r1 = cy.sphere_grid_max(a, b, c, mix, 21)
    r2 = py.sphere_grid_max(a, b, c, mix, 21)
    assert r1[0] == pytest.approx(r2[0], rel=1e-13)


def test_grid_values_are_the_family():
    vals = py.reduced_grid_values(1, 1, 1, 0.0, np.pi / 2, 0.0, np.pi / 2, 11)
    t = np.linspace(0, np.pi / 2, 11)[:, None]
    p = np.linspace(0, np.pi / 2, 11)[None, :]
    want = np.cos(t) ** 2 * np.cos(p) * np.sin(p) * np.sin(t) * np.cos(t)
    np.testing.assert_allclose(vals, want, atol=1e-15)


def test_forced_pure_python_fallback():
    env = dict(os.environ, QUATSPHERE_PURE_PYTHON="1")
    code = ("from quatsphere import kernels, supnorm; print(kernels.BACKEND); "
            "print(round(supnorm.sup_norm(supnorm.fmn_surrogate(1, 1)).value, 12))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out[0] == "python"
    assert float(out[1]) == pytest.approx(0.162379763209, abs=1e-11)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.backend_module("fortran")
