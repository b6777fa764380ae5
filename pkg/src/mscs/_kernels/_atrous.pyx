# cython: boundscheck=False, wraparound=False, cdivision=True
"""Dilated periodic FIR filtering along the axes of 2-D arrays.

These are the hot kernels of the undecimated wavelet transform: short
filters applied with power-of-two dilation and circular boundary wrap.
``fallback.py`` provides a pure-numpy implementation of the same
contracts; the two are compared in the test suite and benchmarks.
"""

import numpy as np


def analysis_pair(double[:, ::1] x, double[::1] lo, double[::1] hi,
                  int dilation, int axis):
    """Convolve ``x`` with both filters at once, periodic and dilated.

    out[i] = sum_k f[k] * x[(i - dilation*k) mod N] along ``axis``.
    Returns the (lo, hi) filtered pair. Filters must have equal length.
    """
    if lo.shape[0] != hi.shape[0]:
        raise ValueError("filter pair must have equal length")
    cdef Py_ssize_t n0 = x.shape[0], n1 = x.shape[1], K = lo.shape[0]
    cdef Py_ssize_t i, j, k, s, src
    cdef double ck, dk, v
    out_a_arr = np.zeros((n0, n1))
    out_d_arr = np.zeros((n0, n1))
    cdef double[:, ::1] oa = out_a_arr
    cdef double[:, ::1] od = out_d_arr

    if axis == 0:
        with nogil:
            for k in range(K):
                s = (dilation * k) % n0
                ck = lo[k]
                dk = hi[k]
                for i in range(n0):
                    src = i - s
                    if src < 0:
                        src += n0
                    for j in range(n1):
                        v = x[src, j]
                        oa[i, j] += ck * v
                        od[i, j] += dk * v
    elif axis == 1:
        with nogil:
            for i in range(n0):
                for k in range(K):
                    s = (dilation * k) % n1
                    ck = lo[k]
                    dk = hi[k]
                    for j in range(s):
                        v = x[i, j + n1 - s]
                        oa[i, j] += ck * v
                        od[i, j] += dk * v
                    for j in range(s, n1):
                        v = x[i, j - s]
                        oa[i, j] += ck * v
                        od[i, j] += dk * v
    else:
        raise ValueError("axis must be 0 or 1")
    return out_a_arr, out_d_arr


def synthesis_pair(double[:, ::1] a, double[:, ::1] d,
                   double[::1] lo, double[::1] hi, int dilation, int axis):
    """Adjoint of :func:`analysis_pair`: periodic dilated correlation.

    out[i] = sum_k lo[k]*a[(i + dilation*k) mod N]
           + sum_k hi[k]*d[(i + dilation*k) mod N] along ``axis``.
    """
    if lo.shape[0] != hi.shape[0]:
        raise ValueError("filter pair must have equal length")
    if a.shape[0] != d.shape[0] or a.shape[1] != d.shape[1]:
        raise ValueError("subband pair must have equal shape")
    cdef Py_ssize_t n0 = a.shape[0], n1 = a.shape[1], K = lo.shape[0]
    cdef Py_ssize_t i, j, k, s, src
    cdef double ck, dk
    out_arr = np.zeros((n0, n1))
    cdef double[:, ::1] out = out_arr

    if axis == 0:
        with nogil:
            for k in range(K):
                s = (dilation * k) % n0
                ck = lo[k]
                dk = hi[k]
                for i in range(n0):
                    src = i + s
                    if src >= n0:
                        src -= n0
                    for j in range(n1):
                        out[i, j] += ck * a[src, j] + dk * d[src, j]
    elif axis == 1:
        with nogil:
            for i in range(n0):
                for k in range(K):
                    s = (dilation * k) % n1
                    ck = lo[k]
                    dk = hi[k]
                    for j in range(n1 - s):
                        out[i, j] += ck * a[i, j + s] + dk * d[i, j + s]
                    for j in range(n1 - s, n1):
                        out[i, j] += ck * a[i, j + s - n1] + dk * d[i, j + s - n1]
    else:
        raise ValueError("axis must be 0 or 1")
    return out_arr
