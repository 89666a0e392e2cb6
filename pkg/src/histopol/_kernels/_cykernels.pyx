# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: batched basis evaluation and disc integrals.

Signatures mirror numpy_backend; see that module for the contracts.
"""

from libc.math cimport cos, sin
from libc.stdlib cimport malloc, free

import numpy as np
cimport numpy as cnp

cnp.import_array()

MONOMIAL = 0
CHEBYSHEV = 1

cdef extern from "math.h":
    double M_PI


cdef inline void _fill_1d(int kind, int degree, double x, double* table) noexcept nogil:
    cdef int k
    table[0] = 1.0
    if degree == 0:
        return
    table[1] = x
    if kind == 0:
        for k in range(2, degree + 1):
            table[k] = table[k - 1] * x
    else:
        for k in range(2, degree + 1):
            table[k] = 2.0 * x * table[k - 1] - table[k - 2]


def kind_code(kind):
    if kind == "monomial":
        return MONOMIAL
    if kind == "chebyshev":
        return CHEBYSHEV
    raise ValueError(f"unknown basis kind {kind!r}")


def exponent_arrays(int degree):
    a = np.concatenate([np.arange(t, -1, -1) for t in range(degree + 1)])
    b = np.concatenate([np.arange(0, t + 1) for t in range(degree + 1)])
    return a, b


def eval_basis_matrix(int kind, int degree, double[::1] x, double[::1] y):
    cdef Py_ssize_t n = x.shape[0]
    cdef int n_basis = (degree + 1) * (degree + 2) // 2
    out_arr = np.empty((n, n_basis))
    cdef double[:, ::1] out = out_arr
    cdef double* tx = <double*> malloc((degree + 1) * sizeof(double))
    cdef double* ty = <double*> malloc((degree + 1) * sizeof(double))
    if tx == NULL or ty == NULL:
        free(tx); free(ty)
        raise MemoryError()
    cdef Py_ssize_t i
    cdef int t, a, j
    with nogil:
        for i in range(n):
            _fill_1d(kind, degree, x[i], tx)
            _fill_1d(kind, degree, y[i], ty)
            j = 0
            for t in range(degree + 1):
                for a in range(t, -1, -1):
                    out[i, j] = tx[a] * ty[t - a]
                    j += 1
    free(tx); free(ty)
    return out_arr


def disc_basis_integrals(
    int kind,
    int degree,
    double[:, ::1] centers,
    double[::1] radii,
    double[::1] rho,
    double[::1] rho_w,
    int n_ang,
):
    cdef Py_ssize_t m_discs = centers.shape[0]
    cdef Py_ssize_t n_rad = rho.shape[0]
    cdef int n_basis = (degree + 1) * (degree + 2) // 2
    out_arr = np.zeros((m_discs, n_basis))
    cdef double[:, ::1] out = out_arr

    # Local node layout shared by all discs (unit disc, then scaled/shifted).
    cdef Py_ssize_t nq = n_rad * n_ang
    cdef double* lx = <double*> malloc(nq * sizeof(double))
    cdef double* ly = <double*> malloc(nq * sizeof(double))
    cdef double* wq = <double*> malloc(nq * sizeof(double))
    cdef double* tx = <double*> malloc((degree + 1) * sizeof(double))
    cdef double* ty = <double*> malloc((degree + 1) * sizeof(double))
    if lx == NULL or ly == NULL or wq == NULL or tx == NULL or ty == NULL:
        free(lx); free(ly); free(wq); free(tx); free(ty)
        raise MemoryError()

    cdef Py_ssize_t i, k, q, m
    cdef int t, a, j
    cdef double theta, w_ang, cx, cy, r, xq, yq, w
    with nogil:
        w_ang = 2.0 * M_PI / n_ang
        q = 0
        for i in range(n_rad):
            for k in range(n_ang):
                theta = (2.0 * M_PI * k) / n_ang
                lx[q] = rho[i] * cos(theta)
                ly[q] = rho[i] * sin(theta)
                wq[q] = rho_w[i] * rho[i] * w_ang
                q += 1
        for m in range(m_discs):
            cx = centers[m, 0]
            cy = centers[m, 1]
            r = radii[m]
            for q in range(nq):
                xq = cx + r * lx[q]
                yq = cy + r * ly[q]
                w = wq[q] * r * r
                _fill_1d(kind, degree, xq, tx)
                _fill_1d(kind, degree, yq, ty)
                j = 0
                for t in range(degree + 1):
                    for a in range(t, -1, -1):
                        out[m, j] += w * tx[a] * ty[t - a]
                        j += 1
    free(lx); free(ly); free(wq); free(tx); free(ty)
    return out_arr
