"""NumPy fallback for the compiled grid sweeps in ``_ckernels``."""
import numpy as np


def _axis(lo, hi, N):
    return lo + np.arange(N) * ((hi - lo) / (N - 1))


def reduced_grid_values(a, b, c, t0, t1, p0, p1, N):
    t = _axis(t0, t1, N)[:, None]
    ph = _axis(p0, p1, N)[None, :]
    s = np.cos(t)
    r = np.sin(t)
    return (s * np.cos(ph)) ** a * (s * np.sin(ph)) ** b * (r * s) ** c


def reduced_grid_max(a, b, c, t0, t1, p0, p1, N):
    vals = reduced_grid_values(a, b, c, t0, t1, p0, p1, N)
    flat = int(np.argmax(vals))
    i, j = divmod(flat, N)
    return float(vals[i, j]), i, j


def sphere_grid_max(a, b, c, mix_xz, N):
    h = (np.pi / 2.0) / (N - 1)
    ang = np.arange(N) * h
    al = ang[:, None, None]
    be = ang[None, :, None]
    ps = ang[None, None, :]
    x = np.cos(al)
    y = np.sin(al) * np.cos(be)
    z = np.sin(al) * np.sin(be) * np.cos(ps)
    w = np.sin(al) * np.sin(be) * np.sin(ps)
    mix = x * z + y * w if mix_xz else x * w + y * z
    vals = z**a * w**b * mix**c
    flat = int(np.argmax(vals))
    i, rem = divmod(flat, N * N)
    j, k = divmod(rem, N)
    return float(vals[i, j, k]), i, j, k
