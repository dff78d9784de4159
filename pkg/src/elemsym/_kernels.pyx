# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels.

Same contract as elemsym._kernels_py: build the flattened lower triangle
of the symmetric-value table from the parts of n inputs.  Wrapping is
done in unsigned 64-bit arithmetic (well-defined in C) and reinterpreted
as signed on the way out.
"""

from array import array


cdef inline long long _wadd(long long a, long long b) noexcept nogil:
    return <long long> (<unsigned long long> a + <unsigned long long> b)


cdef inline long long _wmul(long long a, long long b) noexcept nogil:
    return <long long> (<unsigned long long> a * <unsigned long long> b)


cdef inline long long _wsub(long long a, long long b) noexcept nogil:
    return <long long> (<unsigned long long> a - <unsigned long long> b)


def build_wrap64(xs_re, xs_im):
    """Triangle of wrapping 64-bit table values for the given inputs."""
    re_arr = xs_re if isinstance(xs_re, array) else array("q", xs_re)
    im_arr = xs_im if isinstance(xs_im, array) else array("q", xs_im)
    cdef long long[::1] re = re_arr
    cdef long long[::1] im = im_arr
    cdef Py_ssize_t n = re.shape[0]
    cdef Py_ssize_t m = n * (n + 1) // 2
    out_re = array("q", bytes(8 * m))
    out_im = array("q", bytes(8 * m))
    if n == 0:
        return out_re, out_im
    cdef long long[::1] tre = out_re
    cdef long long[::1] tim = out_im
    cdef Py_ssize_t i, k, base, prev
    cdef long long xr, xi, pr, pi
    with nogil:
        tre[0] = re[0]
        tim[0] = im[0]
        prev = 0
        for i in range(1, n):
            base = prev + i
            xr = re[i]
            xi = im[i]
            tre[base] = _wadd(tre[prev], xr)
            tim[base] = _wadd(tim[prev], xi)
            for k in range(1, i):
                pr = tre[prev + k - 1]
                pi = tim[prev + k - 1]
                tre[base + k] = _wadd(tre[prev + k], _wsub(_wmul(pr, xr), _wmul(pi, xi)))
                tim[base + k] = _wadd(tim[prev + k], _wadd(_wmul(pr, xi), _wmul(pi, xr)))
            pr = tre[prev + i - 1]
            pi = tim[prev + i - 1]
            tre[base + i] = _wsub(_wmul(pr, xr), _wmul(pi, xi))
            tim[base + i] = _wadd(_wmul(pr, xi), _wmul(pi, xr))
            prev = base
    return out_re, out_im


def build_float(xs_re, xs_im):
    """Triangle of double-precision table values for the given inputs."""
    re_arr = xs_re if isinstance(xs_re, array) else array("d", xs_re)
    im_arr = xs_im if isinstance(xs_im, array) else array("d", xs_im)
    cdef double[::1] re = re_arr
    cdef double[::1] im = im_arr
    cdef Py_ssize_t n = re.shape[0]
    cdef Py_ssize_t m = n * (n + 1) // 2
    out_re = array("d", bytes(8 * m))
    out_im = array("d", bytes(8 * m))
    if n == 0:
        return out_re, out_im
    cdef double[::1] tre = out_re
    cdef double[::1] tim = out_im
    cdef Py_ssize_t i, k, base, prev
    cdef double xr, xi, pr, pi
    with nogil:
        tre[0] = re[0]
        tim[0] = im[0]
        prev = 0
        for i in range(1, n):
            base = prev + i
            xr = re[i]
            xi = im[i]
            tre[base] = tre[prev] + xr
            tim[base] = tim[prev] + xi
            for k in range(1, i):
                pr = tre[prev + k - 1]
                pi = tim[prev + k - 1]
                tre[base + k] = tre[prev + k] + pr * xr - pi * xi
                tim[base + k] = tim[prev + k] + pr * xi + pi * xr
            pr = tre[prev + i - 1]
            pi = tim[prev + i - 1]
            tre[base + i] = pr * xr - pi * xi
            tim[base + i] = pr * xi + pi * xr
            prev = base
    return out_re, out_im
