# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid sweeps for products z^a w^b m^c on the sphere octant.

Mirror of ``_pykernels``; the two must return the same argmax up to
floating-point ties.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, M_PI

cnp.import_array()


cdef inline double ipow(double x, int k) nogil:
    cdef double out = 1.0
    while k > 0:
        if k & 1:
            out *= x
        x *= x
        k >>= 1
    return out


cdef void _axes(int a, int b, int c, double t0, double t1, double p0, double p1,
                int N, double[::1] row, double[::1] col) noexcept nogil:
    # on the reduced family z^a w^b m^c = [s^(a+b) (rs)^c] * [cos^a sin^b]
    cdef double dt = (t1 - t0) / (N - 1)
    cdef double dp = (p1 - p0) / (N - 1)
    cdef double s, r, ph
    cdef int i
    for i in range(N):
        s = cos(t0 + i * dt)
        r = sin(t0 + i * dt)
        row[i] = ipow(s, a + b) * ipow(r * s, c)
        ph = p0 + i * dp
        col[i] = ipow(cos(ph), a) * ipow(sin(ph), b)


def reduced_grid_values(int a, int b, int c, double t0, double t1,
                        double p0, double p1, int N):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.empty((N, N), dtype=np.float64)
    cdef double[::1] row = np.empty(N)
    cdef double[::1] col = np.empty(N)
    cdef int i, j
    _axes(a, b, c, t0, t1, p0, p1, N, row, col)
    for i in range(N):
        for j in range(N):
            out[i, j] = row[i] * col[j]
    return out


def reduced_grid_max(int a, int b, int c, double t0, double t1,
                     double p0, double p1, int N):
    cdef double[::1] row = np.empty(N)
    cdef double[::1] col = np.empty(N)
    cdef double best = -1.0
    cdef double v
    cdef int i, j, bi = 0, bj = 0
    with nogil:
        _axes(a, b, c, t0, t1, p0, p1, N, row, col)
        for i in range(N):
            for j in range(N):
                v = row[i] * col[j]
                if v > best:
                    best = v
                    bi = i
                    bj = j
    return best, bi, bj


def sphere_grid_max(int a, int b, int c, int mix_xz, int N):
    """Coarse sweep over three octant angles; ``mix_xz`` selects xz+yw."""
    cdef double h = (M_PI / 2.0) / (N - 1)
    cdef double[::1] cs = np.empty(N)
    cdef double[::1] sn = np.empty(N)
    cdef double best = -1.0
    cdef double x, y, z, w, mix, v, rr
    cdef int i, j, k, bi = 0, bj = 0, bk = 0
    with nogil:
        for i in range(N):
            cs[i] = cos(i * h)
            sn[i] = sin(i * h)
        for i in range(N):
            x = cs[i]
            for j in range(N):
                y = sn[i] * cs[j]
                rr = sn[i] * sn[j]
                for k in range(N):
                    z = rr * cs[k]
                    w = rr * sn[k]
                    if mix_xz:
                        mix = x * z + y * w
                    else:
                        mix = x * w + y * z
                    v = ipow(z, a) * ipow(w, b) * ipow(mix, c)
                    if v > best:
                        best = v
                        bi = i
                        bj = j
                        bk = k
    return best, bi, bj, bk
