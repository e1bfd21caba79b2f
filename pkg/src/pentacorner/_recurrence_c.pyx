# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled recurrence kernel; semantics identical to _recurrence_py."""

from libc.math cimport fabs, log

DEF BIG = 1e100
DEF SMALL = 1e-100


def minor_window(double p, double q, double r, double s, long n):
    """Scaled (e_{n-4}, ..., e_n) plus log of the factored-out scale, n >= 5."""
    cdef double e1 = r
    cdef double e2 = p * r - q * q
    cdef double e3 = p * p * r - q * q * (r - 2 * s) - p * (q * q + s * s)
    cdef double e4 = (p ** 3 * r - p * p * (q * q + s * s)
                      - p * (2 * q * q * (r - s) + r * s * s)
                      + q ** 4 + 2 * q * q * s * (r - s) + s ** 4)
    cdef double e5 = (p ** 4 * r + q ** 4 * (r - 4 * s) + r * s ** 4
                      + 2 * q * q * s * s * (s - r) - p ** 3 * (q * q + s * s)
                      + p * (2 * q ** 4 + 4 * q * q * r * s + s ** 4)
                      + p * p * (-2 * r * s * s + q * q * (2 * s - 3 * r)))
    cdef double acc = 0.0
    cdef double c1 = p - s
    cdef double c2 = p * s - q * q
    cdef double c3 = -s * c2
    cdef double c4 = s ** 3 * (s - p)
    cdef double c5 = s ** 5
    cdef double w, m, inv
    cdef long k
    for k in range(6, n + 1):
        w = c1 * e5 + c2 * e4 + c3 * e3 + c4 * e2 + c5 * e1
        e1 = e2; e2 = e3; e3 = e4; e4 = e5; e5 = w
        m = fabs(e1)
        if fabs(e2) > m: m = fabs(e2)
        if fabs(e3) > m: m = fabs(e3)
        if fabs(e4) > m: m = fabs(e4)
        if fabs(e5) > m: m = fabs(e5)
        if m > BIG or (0.0 < m < SMALL):
            acc += log(m)
            inv = 1.0 / m
            e1 *= inv; e2 *= inv; e3 *= inv; e4 *= inv; e5 *= inv
    return e1, e2, e3, e4, e5, acc


def minor_window_qzero(double p, double r, double s, long n):
    """Scaled (e_{n-3}, ..., e_n) plus log scale for the q = 0 branch, n >= 4."""
    cdef double e1 = r
    cdef double e2 = p * r
    cdef double e3 = p * (p * r - s * s)
    cdef double e4 = (p * p - s * s) * (p * r - s * s)
    cdef double acc = 0.0
    cdef double c3 = -p * s * s
    cdef double c4 = s ** 4
    cdef double w, m, inv
    cdef long k
    for k in range(5, n + 1):
        w = p * e4 + c3 * e2 + c4 * e1
        e1 = e2; e2 = e3; e3 = e4; e4 = w
        m = fabs(e1)
        if fabs(e2) > m: m = fabs(e2)
        if fabs(e3) > m: m = fabs(e3)
        if fabs(e4) > m: m = fabs(e4)
        if m > BIG or (0.0 < m < SMALL):
            acc += log(m)
            inv = 1.0 / m
            e1 *= inv; e2 *= inv; e3 *= inv; e4 *= inv
    return e1, e2, e3, e4, acc
