# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled projection kernels: row-shift accumulation and the exact
fractional-weight projector. Mirrors the contracts of _kernels_py."""

import numpy as np

from libc.math cimport cos, sin, floor

BACKEND_NAME = "compiled"


def project_one_angle(const unsigned char[:, ::1] pixels, const long long[::1] shifts):
    cdef Py_ssize_t n = pixels.shape[0]
    out_arr = np.zeros(2 * n - 1, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t d, c
    cdef long long s
    for d in range(n):
        s = shifts[d]
        for c in range(n):
            out[s + c] += pixels[d, c]
    return out_arr


def project_all_angles(const unsigned char[:, ::1] pixels, const long long[:, ::1] table):
    cdef Py_ssize_t n = pixels.shape[0]
    out_arr = np.zeros((n, 2 * n - 1), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t k, d, c
    cdef long long s
    for k in range(n):
        for d in range(n):
            s = table[d, k]
            for c in range(n):
                out[k, s + c] += pixels[d, c]
    return out_arr


def exact_project(const unsigned char[:, ::1] pixels,
                  const double[::1] angles_rad,
                  double rho_origin,
                  Py_ssize_t r_count):
    cdef Py_ssize_t p = angles_rad.shape[0]
    cdef Py_ssize_t n = pixels.shape[0]
    out_arr = np.zeros((p, r_count), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double ctr = 0.5 * (n - 1)
    # subpixel centers at (+-1/4, +-1/4), same order as the numpy backend
    cdef double qx[4]
    cdef double qy[4]
    qx[0] = -0.25; qx[1] = -0.25; qx[2] = 0.25; qx[3] = 0.25
    qy[0] = -0.25; qy[1] = 0.25; qy[2] = -0.25; qy[3] = 0.25
    cdef double qoff[4]
    cdef long long ops = 0
    cdef Py_ssize_t a, r, c, q, i0
    cdef double co, si, x, y, base, v, pos, frac
    for a in range(p):
        co = cos(angles_rad[a])
        si = sin(angles_rad[a])
        for q in range(4):
            qoff[q] = qx[q] * co + qy[q] * si
        for r in range(n):
            y = r - ctr
            for c in range(n):
                x = c - ctr
                v = 0.25 * pixels[r, c]
                base = x * co + y * si
                for q in range(4):
                    pos = (base + qoff[q]) - rho_origin
                    i0 = <Py_ssize_t>floor(pos)
                    frac = pos - i0
                    out[a, i0] += v * (1.0 - frac)
                    out[a, i0 + 1] += v * frac
                    ops += 1
    return out_arr, ops
