"""Pure-Python table kernels, the fallback for the compiled extension.

Both backends expose the same two functions.  Each takes the real and
imaginary parts of n input values and returns the flattened lower
triangle of the symmetric-value table as a pair of sequences of length
n*(n+1)/2: entry (i, k) (1-based row i, 1 <= k <= i) lives at offset
i*(i-1)/2 + k - 1.
"""

_U64 = 1 << 64
_I64_MAX = (1 << 63) - 1


def _w(v):
    v &= _U64 - 1
    return v - _U64 if v > _I64_MAX else v


def build_wrap64(xs_re, xs_im):
    """Triangle of wrapping 64-bit table values for the given inputs."""
    n = len(xs_re)
    m = n * (n + 1) // 2
    tre = [0] * m
    tim = [0] * m
    if n == 0:
        return tre, tim
    tre[0] = _w(xs_re[0])
    tim[0] = _w(xs_im[0])
    prev = 0
    for i in range(1, n):
        base = prev + i
        xr = xs_re[i]
        xi = xs_im[i]
        tre[base] = _w(tre[prev] + xr)
        tim[base] = _w(tim[prev] + xi)
        for k in range(1, i):
            pr = tre[prev + k - 1]
            pi = tim[prev + k - 1]
            tre[base + k] = _w(tre[prev + k] + pr * xr - pi * xi)
            tim[base + k] = _w(tim[prev + k] + pr * xi + pi * xr)
        pr = tre[prev + i - 1]
        pi = tim[prev + i - 1]
        tre[base + i] = _w(pr * xr - pi * xi)
        tim[base + i] = _w(pr * xi + pi * xr)
        prev = base
    return tre, tim


def build_float(xs_re, xs_im):
    """Triangle of double-precision table values for the given inputs."""
    n = len(xs_re)
    m = n * (n + 1) // 2
    tre = [0.0] * m
    tim = [0.0] * m
    if n == 0:
        return tre, tim
    tre[0] = float(xs_re[0])
    tim[0] = float(xs_im[0])
    prev = 0
    for i in range(1, n):
        base = prev + i
        xr = float(xs_re[i])
        xi = float(xs_im[i])
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
    return tre, tim
