"""Pure-Python grid-scan kernel.

Mirrors the compiled extension ``_gridscan`` exactly; arbitrary-precision
integers make it immune to overflow, at the cost of speed.  The form is
evaluated at integer points (d, i, j) after clearing denominators:

    E(d, i, j) = A*S4 + Bk*S22 + Bl*S211 + Bm*S31 + Bn*S13

where A is the common denominator of (k, l, m, n) and Bk..Bn are the
numerators scaled to it, so sign(E) = sign(F(1, i/d, j/d)).
"""

from __future__ import annotations

__all__ = ["face_scan"]


def face_scan(A, Bk, Bl, Bm, Bn, d, skip_even=False):
    """Scan the lattice face x = d, |i|, |j| <= d.

    Returns ``(found, ni, nj, evaluated, min_i, min_j, min_value)`` where
    ``(ni, nj)`` is the first scanned point with a negative value (0, 0
    when none), and ``(min_i, min_j, min_value)`` track the minimum over
    the points scanned.  ``skip_even`` drops points with both coordinates
    even, which avoids rescanning points already covered by the face d/2.
    """
    d2 = d * d
    d3 = d2 * d
    d4 = d2 * d2
    evaluated = 0
    min_i = 0
    min_j = 0
    min_val = None
    for i in range(-d, d + 1):
        i2 = i * i
        i3 = i2 * i
        i4 = i2 * i2
        for j in range(-d, d + 1):
            if skip_even and (i & 1) == 0 and (j & 1) == 0:
                continue
            j2 = j * j
            s4 = d4 + i4 + j2 * j2
            s22 = d2 * i2 + i2 * j2 + j2 * d2
            s211 = d * i * j * (d + i + j)
            s31 = d3 * i + i3 * j + j2 * j * d
            s13 = d * i3 + i * j2 * j + j * d3
            val = A * s4 + Bk * s22 + Bl * s211 + Bm * s31 + Bn * s13
            evaluated += 1
            if min_val is None or val < min_val:
                min_val = val
                min_i, min_j = i, j
            if val < 0:
                return True, i, j, evaluated, min_i, min_j, min_val
    if min_val is None:
        min_val = 0
    return False, 0, 0, evaluated, min_i, min_j, min_val
