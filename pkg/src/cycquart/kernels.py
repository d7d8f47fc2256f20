"""Kernel selection: compiled extension when available and safe, else pure Python.

The face-grid sweep over rational points is the hot loop of falsification
and witness search (millions of exact form evaluations per fuzz run).
Both implementations share one contract; the compiled one runs in C int64
arithmetic, so the selector routes any call whose intermediate values
could exceed int64 to the pure-Python kernel instead.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from . import _kernels_py
from .form import CyclicParams, eval_form

try:  # pragma: no cover - exercised only when the extension is built
    from . import _gridscan as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

HAVE_COMPILED = _compiled is not None
IMPLEMENTATION = "compiled" if HAVE_COMPILED else "python"

_INT64_SAFE = 2 ** 62

__all__ = [
    "HAVE_COMPILED",
    "IMPLEMENTATION",
    "scaled_coefficients",
    "face_scan",
    "face_scan_with",
]


def scaled_coefficients(c: CyclicParams) -> tuple[int, int, int, int, int]:
    """Integer (A, Bk, Bl, Bm, Bn) with sign(A*S4 + ...) = sign(F)."""
    dens = [c.k.denominator, c.l.denominator, c.m.denominator, c.n.denominator]
    common = 1
    for d in dens:
        common = common * d // math.gcd(common, d)
    return (
        common,
        c.k.numerator * (common // c.k.denominator),
        c.l.numerator * (common // c.l.denominator),
        c.m.numerator * (common // c.m.denominator),
        c.n.numerator * (common // c.n.denominator),
    )


def _fits_int64(coeffs: tuple[int, int, int, int, int], d: int) -> bool:
    bound = 5 * max(abs(x) for x in coeffs) * 3 * (d ** 4 + 2 * d ** 3)
    return bound < _INT64_SAFE


def face_scan(coeffs, d: int, skip_even: bool = False):
    """Dispatch one face sweep to the best available kernel."""
    impl = _compiled if (_compiled is not None and _fits_int64(coeffs, d)) else _kernels_py
    return impl.face_scan(*coeffs, d, skip_even)


def face_scan_with(impl_name: str, coeffs, d: int, skip_even: bool = False):
    """Run a specific kernel by name ('python' or 'compiled'); for tests
    and benchmarks."""
    if impl_name == "python":
        return _kernels_py.face_scan(*coeffs, d, skip_even)
    if impl_name == "compiled":
        if _compiled is None:
            raise ValueError("compiled kernel is not available")
        return _compiled.face_scan(*coeffs, d, skip_even)
    raise ValueError(f"unknown kernel implementation {impl_name!r}")


def find_negative_on_faces(
    c: CyclicParams,
    schedule: tuple[int, ...],
    budget: int,
    dyadic: bool = False,
) -> tuple[Optional[tuple[Fraction, Fraction, Fraction]], int]:
    """Sweep faces x = 1, y/x = i/d, z/x = j/d for the given denominators.

    Returns ``(point, evaluated)`` where ``point`` is an exact rational
    triple with ``F(point) < 0`` (verified with Fraction arithmetic) or
    None.  With ``dyadic=True``, faces after the first skip points whose
    coordinates both reduce to a smaller denominator in the schedule.
    """
    coeffs = scaled_coefficients(c)
    spent = 0
    for idx, d in enumerate(schedule):
        if spent >= budget:
            break
        skip = dyadic and idx > 0
        found, i, j, evaluated, *_ = face_scan(coeffs, d, skip)
        spent += evaluated
        if found:
            point = (Fraction(1), Fraction(i, d), Fraction(j, d))
            value = eval_form(c, *point)
            if value >= 0:
                raise AssertionError(
                    f"kernel reported a negative value at {point} but F = {value}"
                )
            return point, spent
    return None, spent
