# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid-scan kernel; see _kernels_py for the reference semantics.

Works in C int64 arithmetic.  Callers must guarantee the scaled
coefficients and face size stay within the overflow bound (the selector in
``kernels`` checks this and falls back to the pure-Python kernel
otherwise).
"""


def face_scan(long long A, long long Bk, long long Bl, long long Bm,
              long long Bn, long long d, bint skip_even=False):
    """Scan the lattice face x = d, |i|, |j| <= d; same contract as the
    pure-Python kernel."""
    cdef long long d2 = d * d
    cdef long long d3 = d2 * d
    cdef long long d4 = d2 * d2
    cdef long long evaluated = 0
    cdef long long min_i = 0, min_j = 0, min_val = 0
    cdef bint have_min = False
    cdef long long i, j, i2, i3, i4, j2, j3
    cdef long long s4, s22, s211, s31, s13, val
    for i in range(-d, d + 1):
        i2 = i * i
        i3 = i2 * i
        i4 = i2 * i2
        for j in range(-d, d + 1):
            if skip_even and (i & 1) == 0 and (j & 1) == 0:
                continue
            j2 = j * j
            j3 = j2 * j
            s4 = d4 + i4 + j2 * j2
            s22 = d2 * i2 + i2 * j2 + j2 * d2
            s211 = d * i * j * (d + i + j)
            s31 = d3 * i + i3 * j + j3 * d
            s13 = d * i3 + i * j3 + j * d3
            val = A * s4 + Bk * s22 + Bl * s211 + Bm * s31 + Bn * s13
            evaluated += 1
            if not have_min or val < min_val:
                min_val = val
                min_i, min_j = i, j
                have_min = True
            if val < 0:
                return True, i, j, evaluated, min_i, min_j, min_val
    return False, 0, 0, evaluated, min_i, min_j, min_val
