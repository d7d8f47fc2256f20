"""Sign lists, revised sign lists, and exact real-root counting.

The revision rule replaces each interior run of zeros in a sign list
(bounded by nonzero entries on both sides) with the alternating pattern
``[-s, -s, s, s, -s, -s, ...]`` seeded by the sign ``s`` preceding the run.
For the discriminant sequence of a polynomial, the number of sign changes
``v`` of the revised list equals the number of distinct conjugate imaginary
root pairs, and ``nonvanishing - 2*v`` equals the number of distinct real
roots.

The module also provides an everywhere-nonnegativity oracle that avoids
discriminant sequences entirely: a real polynomial is nonnegative on all of
R iff it is zero, or has even degree, positive leading coefficient, and no
real root of odd multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .scalars import sgn
from .unipoly import UniPoly, discriminant_sequence, squarefree_decompose, sturm_count

__all__ = [
    "RootCount",
    "sign_list",
    "revise",
    "count_sign_changes",
    "classify_roots",
    "is_nonneg_everywhere",
    "find_negative_point",
]


@dataclass(frozen=True)
class RootCount:
    distinct_real: int
    imaginary_pairs: int


def sign_list(values) -> list[int]:
    """Exact signs of a sequence of scalars."""
    return [sgn(v) for v in values]


def revise(signs: list[int]) -> list[int]:
    """Revised sign list.

    Only zero runs with nonzero entries on *both* sides are rewritten;
    leading and trailing zero runs are preserved.  Idempotent, and never
    touches nonzero entries.
    """
    out = list(signs)
    i = 0
    n = len(out)
    while i < n:
        if out[i] == 0:
            i += 1
            continue
        j = i + 1
        while j < n and out[j] == 0:
            j += 1
        if j < n and j > i + 1:
            s = out[i]
            for r in range(1, j - i):
                out[i + r] = (-1) ** ((r + 1) // 2) * s
        i = j
    return out


def count_sign_changes(signs: list[int]) -> int:
    """Sign changes with zeros dropped."""
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def classify_roots(p: UniPoly) -> RootCount:
    """Distinct real roots and imaginary pairs from the discriminant sequence."""
    if p.is_zero or p.degree < 1:
        raise ValueError("root classification needs degree >= 1")
    revised = revise(sign_list(discriminant_sequence(p)))
    v = count_sign_changes(revised)
    nonvanishing = sum(1 for s in revised if s != 0)
    return RootCount(distinct_real=nonvanishing - 2 * v, imaginary_pairs=v)


def is_nonneg_everywhere(p: UniPoly) -> bool:
    """True iff ``p(x) >= 0`` for every real ``x``.

    Decided by squarefree structure and Sturm counting: zero polynomial is
    nonnegative, constants go by their sign, odd degree or a negative
    leading coefficient fail, and otherwise nonnegativity is equivalent to
    every odd-multiplicity squarefree factor having no real root.
    """
    if p.is_zero:
        return True
    if p.degree == 0:
        return sgn(p.leading) >= 0
    if p.degree % 2 == 1 or sgn(p.leading) < 0:
        return False
    for factor, multiplicity in squarefree_decompose(p):
        if multiplicity % 2 == 1 and sturm_count(factor) > 0:
            return False
    return True


def find_negative_point(p: UniPoly, budget: int = 4096) -> Optional[Fraction]:
    """A rational ``x`` with ``p(x) < 0``, or None within the budget.

    Deterministic dyadic sweep over a root-bound interval; succeeds for
    every polynomial whose infimum over R is strictly negative, given a
    large enough budget.
    """
    if p.is_zero:
        return None
    if p.degree == 0:
        return Fraction(0) if sgn(p.leading) < 0 else None
    lead = abs(float(p.leading))
    bound = 2.0
    for c in p.coeffs[1:]:
        bound = max(bound, 2.0 * abs(float(c)) / lead)
    top = Fraction(int(bound) + 1)
    spent = 0
    den = 1
    while spent < budget:
        step = Fraction(1, den)
        x = -top
        while x <= top:
            if den == 1 or x.denominator == den:  # new points only
                if sgn(p.eval(x)) < 0:
                    return x
                spent += 1
                if spent >= budget:
                    return None
            x += step
        den *= 2
    return None
