"""Dense univariate polynomials over Fraction or QuadExt scalars.

Coefficients are stored leading-first: ``[a0, a1, ..., an]`` represents
``a0*x**n + a1*x**(n-1) + ... + an``.  The module provides evaluation,
derivatives, gcd, squarefree decomposition, Sturm chains with exact
root counting, and the discriminant sequence computed from even-order
leading principal minors of the discrimination matrix of (f, f').

Q(sqrt(R)) with a perfect-square radicand is a ring with zero divisors,
not a field, so algorithms that rely on division (gcd chains, Sturm
sequences, minor determinants) first map such coefficients to their exact
rational values.  Signs at every point are unchanged by that map.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

from .scalars import (
    QuadExt,
    as_fraction,
    is_perfect_square,
    scalar_div,
    scalar_is_zero,
    sgn,
)

__all__ = [
    "UniPoly",
    "poly_gcd",
    "squarefree_decompose",
    "sturm_chain",
    "sturm_count",
    "discriminant_sequence",
    "det_bareiss",
]


class UniPoly:
    """Immutable dense polynomial; the zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        items = [c if isinstance(c, QuadExt) else Fraction(c) for c in coeffs]
        radicands = {c.radicand for c in items if isinstance(c, QuadExt)}
        if len(radicands) > 1:
            raise ValueError(f"mixed radicands in coefficients: {sorted(radicands)}")
        if radicands:
            rad = radicands.pop()
            items = [QuadExt.lift(c, rad) for c in items]
        idx = 0
        while idx < len(items) and scalar_is_zero(items[idx]):
            idx += 1
        object.__setattr__(self, "coeffs", tuple(items[idx:]))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly values are immutable")

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[0]

    @property
    def is_rational(self) -> bool:
        return all(not isinstance(c, QuadExt) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)!r})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = list(self.coeffs), list(other.coeffs)
        if len(a) < len(b):
            a, b = b, a
        off = len(a) - len(b)
        out = a[:off] + [a[off + i] + b[i] for i in range(len(b))]
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        if scalar_is_zero(c):
            return UniPoly([])
        return UniPoly([a * c for a in self.coeffs])

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return UniPoly(list(self.coeffs) + [Fraction(0)] * k)

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self) -> "UniPoly":
        n = self.degree
        if n <= 0:
            return UniPoly([])
        return UniPoly([c * (n - i) for i, c in enumerate(self.coeffs[:-1])])

    def eval(self, x):
        """Exact value at ``x`` (Horner), in the joint scalar domain."""
        acc = None
        for c in self.coeffs:
            acc = c if acc is None else acc * x + c
        return Fraction(0) if acc is None else acc

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.leading
        return UniPoly([scalar_div(c, lead) for c in self.coeffs])


def _positive_content(p: UniPoly) -> Fraction:
    """A positive rational scalar dividing all coefficient components."""
    nums: list[int] = []
    dens: list[int] = []
    for c in p.coeffs:
        parts = (c.u, c.v) if isinstance(c, QuadExt) else (Fraction(c),)
        for f in parts:
            if f != 0:
                nums.append(abs(f.numerator))
                dens.append(f.denominator)
    if not nums:
        return Fraction(1)
    num = 0
    for x in nums:
        num = math.gcd(num, x)
    den = 1
    for x in dens:
        den = den * x // math.gcd(den, x)
    return Fraction(num, den)


def _normalized(p: UniPoly) -> UniPoly:
    """Divide by the positive content; never changes any sign."""
    c = _positive_content(p)
    return p if c == 1 else p.scale(Fraction(1) / c)


def _demote(p: UniPoly) -> UniPoly:
    """Replace perfect-square-radicand QuadExt coefficients by their values."""
    if p.is_rational:
        return p
    rad = next(c.radicand for c in p.coeffs if isinstance(c, QuadExt))
    if not is_perfect_square(rad):
        return p
    return UniPoly([as_fraction(c) for c in p.coeffs])


def poly_divmod(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Quotient and remainder with exact field division."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(f.coeffs)
    dg = g.degree
    if f.degree < dg:
        return UniPoly([]), f
    quot = [Fraction(0)] * (f.degree - dg + 1)
    glead = g.leading
    for i in range(len(quot)):
        c = rem[i]
        if scalar_is_zero(c):
            continue
        q = scalar_div(c, glead)
        quot[i] = q
        for j, gc in enumerate(g.coeffs):
            rem[i + j] = rem[i + j] - q * gc
    return UniPoly(quot), UniPoly(rem[-dg:] if dg > 0 else [])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd via the Euclidean algorithm with content normalization."""
    a, b = _demote(f), _demote(g)
    while not b.is_zero:
        _, r = poly_divmod(a, b)
        a, b = b, _normalized(r)
    if a.is_zero:
        return a
    return a.monic()


def squarefree_decompose(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun decomposition ``p = lc * prod(factor**multiplicity)``.

    Factors are monic, squarefree, pairwise coprime, and of positive degree;
    ``lc`` is the leading coefficient of ``p``.
    """
    if p.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    p = _demote(p)
    if p.degree == 0:
        return []
    work = p.monic()
    deriv = work.derivative()
    g = poly_gcd(work, deriv)
    if g.degree == 0:
        return [(work, 1)]
    w, _ = poly_divmod(work, g)
    y, _ = poly_divmod(deriv, g)
    z = y - w.derivative()
    factors: list[tuple[UniPoly, int]] = []
    mult = 1
    while not z.is_zero:
        h = poly_gcd(w, z)
        if h.degree > 0:
            factors.append((h, mult))
        w, _ = poly_divmod(w, h)
        y, _ = poly_divmod(z, h)
        z = y - w.derivative()
        mult += 1
    if w.degree > 0:
        factors.append((w, mult))
    return factors


# -- Sturm chains ------------------------------------------------------------


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    """Negated-remainder chain of (p, p'); ends at (a multiple of) gcd(p, p')."""
    if p.is_zero:
        raise ValueError("no Sturm chain for the zero polynomial")
    p = _demote(p)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        _, r = poly_divmod(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(_normalized(-r))
    return chain


def _sign_at(p: UniPoly, x) -> int:
    return sgn(p.eval(x))


def _sign_at_infinity(p: UniPoly, direction: int) -> int:
    """Sign of p near +oo (direction=+1) or -oo (direction=-1)."""
    if p.is_zero:
        return 0
    s = sgn(p.leading)
    if direction < 0 and p.degree % 2 == 1:
        s = -s
    return s


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def sturm_count(
    p: UniPoly,
    lo: Optional[Fraction] = None,
    hi: Optional[Fraction] = None,
) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``None`` endpoints mean -oo / +oo.  Multiple roots are counted once:
    the chain is built on the squarefree part.  With the zeros-dropped
    variation count, the chain's variation function is right-continuous,
    which makes the half-open convention exact even at root endpoints.
    """
    if p.is_zero:
        raise ValueError("root counting needs a nonzero polynomial")
    p = _demote(p)
    if p.degree == 0:
        return 0
    deriv_gcd = poly_gcd(p, p.derivative())
    if deriv_gcd.degree > 0:
        p, _ = poly_divmod(p, deriv_gcd)
    chain = sturm_chain(p)
    at_lo = [_sign_at_infinity(q, -1) for q in chain] if lo is None else [
        _sign_at(q, lo) for q in chain
    ]
    at_hi = [_sign_at_infinity(q, +1) for q in chain] if hi is None else [
        _sign_at(q, hi) for q in chain
    ]
    return _variations(at_lo) - _variations(at_hi)


# -- discriminant sequence ----------------------------------------------------


def det_bareiss(rows: list[list]) -> object:
    """Exact determinant by fraction-free elimination with row pivoting."""
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for col in range(n - 1):
        pivot = None
        for r in range(col, n):
            if not scalar_is_zero(m[r][col]):
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = scalar_div(
                    m[r][c] * m[col][col] - m[r][col] * m[col][c], prev
                )
            m[r][col] = Fraction(0)
        prev = m[col][col]
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


def _discrimination_rows(p: UniPoly) -> list[list]:
    """2n x 2n matrix of shifted (f, f') coefficient row pairs."""
    n = p.degree
    zero = Fraction(0)
    frow = list(p.coeffs)
    grow = [zero] + list(p.derivative().coeffs)
    if len(grow) < n + 1:  # derivative may drop extra degrees over QuadExt
        grow = [zero] * (n + 1 - len(grow)) + grow
    rows = []
    width = 2 * n
    for j in range(n):
        pad_left = [zero] * j
        pad_right = [zero] * (width - j - (n + 1))
        rows.append(pad_left + frow + pad_right)
        rows.append(pad_left + grow + pad_right)
    return rows


def discriminant_sequence(p: UniPoly) -> list:
    """Discriminant sequence ``[D1, ..., Dn]`` of a degree-n polynomial.

    ``Dk`` is the order-2k leading principal minor of the discrimination
    matrix of (f, f').  The third entry of the degree-4 sequence is halved:
    with that fixed positive rescaling the quartic sequence coincides with
    the classical explicit formulas (D1 keeps the raw value 4*a0**2, which
    only differs from a0**2 by a positive constant; every use of the
    sequence is through signs, which no positive rescaling can change).
    """
    p = _demote(p)
    n = p.degree
    if n < 1:
        raise ValueError("discriminant sequence needs degree >= 1")
    rows = _discrimination_rows(p)
    seq = []
    for k in range(1, n + 1):
        sub = [row[: 2 * k] for row in rows[: 2 * k]]
        seq.append(det_bareiss(sub))
    if n == 4:
        seq[2] = scalar_div(seq[2], 2)
    return seq
