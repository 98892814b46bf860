# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric polynomial kernels (value, gradient, Jacobian)."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef void _powers(const double[:] x, int maxdeg, double[:, :] pw) noexcept nogil:
    cdef Py_ssize_t i, k
    for i in range(x.shape[0]):
        pw[i, 0] = 1.0
        for k in range(1, maxdeg + 1):
            pw[i, k] = pw[i, k - 1] * x[i]


cdef double _eval_one(const long[:, :] exps, const double[:] coeffs, Py_ssize_t a, Py_ssize_t b,
                      double[:, :] pw, double[:] grad) noexcept nogil:
    cdef Py_ssize_t t, i, j, n = pw.shape[0]
    cdef double val = 0.0, mono, part
    cdef long e
    for i in range(n):
        grad[i] = 0.0
    for t in range(a, b):
        mono = coeffs[t]
        for i in range(n):
            mono *= pw[i, exps[t, i]]
        val += mono
        for i in range(n):
            e = exps[t, i]
            if e == 0:
                continue
            part = coeffs[t] * e * pw[i, e - 1]
            for j in range(n):
                if j != i:
                    part *= pw[j, exps[t, j]]
            grad[i] += part
    return val


def eval_grad(const long[:, :] exps, const double[:] coeffs, int maxdeg, const double[:] x):
    cdef Py_ssize_t n = x.shape[0]
    pw_arr = np.empty((n, maxdeg + 1))
    grad_arr = np.zeros(n)
    cdef double[:, :] pw = pw_arr
    cdef double[:] grad = grad_arr
    cdef double val
    with nogil:
        _powers(x, maxdeg, pw)
        val = _eval_one(exps, coeffs, 0, exps.shape[0], pw, grad)
    return val, grad_arr


def eval_system(const long[:, :] exps, const double[:] coeffs, const long[:] offsets,
                int maxdeg, const double[:] x):
    cdef Py_ssize_t n = x.shape[0], m = offsets.shape[0] - 1, k
    pw_arr = np.empty((n, maxdeg + 1))
    vals_arr = np.zeros(m)
    jac_arr = np.zeros((m, n))
    cdef double[:, :] pw = pw_arr
    cdef double[:] vals = vals_arr
    cdef double[:, :] jac = jac_arr
    with nogil:
        _powers(x, maxdeg, pw)
        for k in range(m):
            vals[k] = _eval_one(exps, coeffs, offsets[k], offsets[k + 1], pw, jac[k])
    return vals_arr, jac_arr


def eval_values(const long[:, :] exps, const double[:] coeffs, int maxdeg, const double[:, :] pts):
    cdef Py_ssize_t r, t, i, n = pts.shape[1], npts = pts.shape[0]
    out_arr = np.empty(npts)
    pw_arr = np.empty((n, maxdeg + 1))
    cdef double[:] out = out_arr
    cdef double[:, :] pw = pw_arr
    cdef double acc, mono
    with nogil:
        for r in range(npts):
            _powers(pts[r], maxdeg, pw)
            acc = 0.0
            for t in range(exps.shape[0]):
                mono = coeffs[t]
                for i in range(n):
                    mono *= pw[i, exps[t, i]]
                acc += mono
            out[r] = acc
    return out_arr
