"""Three independent decision procedures for the cyclic ternary quartic.

* ``decide_closed_form`` evaluates a quantifier-free formula in the
  coefficients (k, l, m, n) directly.  Three textual variants are shipped
  because the source formula is self-contradictory on boundary strata: the
  ``theorem`` variant uses the strict comparisons ``f6 < 0 or f7 < 0``, the
  ``proof`` variant the non-strict ones, and the ``corrected`` variant adds
  the missing guard ``k + m - 1 >= 0`` to the degenerate-radicand clause
  (see ``decide_closed_form``).

* ``decide_structural`` reduces to the univariate quartic g(t) and decides
  it case by case: biquadratic rules when the radicand R vanishes, a
  quadratic-factor rule when the constant term vanishes, and the special
  quartic discriminant rule otherwise.  Fully rational arithmetic.

* ``decide_oracle`` runs the everywhere-nonnegativity oracle (squarefree
  decomposition plus Sturm counting) on g(t) over Q(sqrt(R)) -- no
  discriminant sequences, no clause polynomials, hence an independent
  implementation path.

``find_witness`` produces exact rational points with F < 0 for forms that
are not positive semidefinite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .form import CyclicParams, eval_form, r_range, radicand, reduce_to_g
from .quartic_rules import SpecialQuartic, discriminants, is_nonneg
from .roots import is_nonneg_everywhere
from .scalars import sgn
from .unipoly import UniPoly, poly_divmod, poly_gcd, sturm_chain

__all__ = [
    "ClausePolynomials",
    "Verdict",
    "CLOSED_FORM_VARIANTS",
    "eval_polys",
    "decide_closed_form",
    "decide_structural",
    "decide_oracle",
    "decide",
    "find_witness",
    "DEFAULT_WITNESS_BUDGET",
]

CLOSED_FORM_VARIANTS = ("theorem", "proof", "corrected")

DEFAULT_WITNESS_BUDGET = 40000


@dataclass(frozen=True)
class ClausePolynomials:
    """The eleven coefficient polynomials of the closed-form criterion.

    f1 = F(1,-1,0) and 3*f3 = F(1,1,1) are necessary-condition values;
    f2 and g4 determine the radicand through R = 27*g4**2 + f2**2; f5, f6,
    f7 are proportional (by positive factors, given f1 > 0 and f3 > 0) to
    the discriminants D4, D2, D3 of the reduced quartic g.  All of f1..f7
    are symmetric under swapping m and n, which swapping (y, z) in the form
    forces.
    """

    f1: Fraction
    f2: Fraction
    f3: Fraction
    f4: Fraction
    f5: Fraction
    f6: Fraction
    f7: Fraction
    g1: Fraction
    g2: Fraction
    g3: Fraction
    g4: Fraction


@dataclass(frozen=True)
class Verdict:
    """Decision outcome; a witness, when present, satisfies F(witness) < 0
    exactly and forces ``is_psd`` to be False."""

    is_psd: bool
    method: str
    fired_clause: str
    witness: Optional[tuple[Fraction, Fraction, Fraction]] = None
    witness_value: Optional[Fraction] = None

    def __post_init__(self):
        if self.witness is not None and self.is_psd:
            raise ValueError("a witness contradicts a PSD verdict")


def eval_polys(c: CyclicParams) -> ClausePolynomials:
    """Exact values of f1..f7 and g1..g4 at the given coefficients."""
    k, l, m, n = c.k, c.l, c.m, c.n
    f1 = 2 + k - m - n
    f2 = 4 * k + m + n - 8 - 2 * l
    f3 = 1 + k + m + n + l
    f4 = 3 * (1 + k) - m ** 2 - n ** 2 - m * n
    f5 = (
        -4 * k**3 * m**2 - 4 * k**3 * n**2 - 4 * k**2 * l * m**2 + 4 * k**2 * l * m * n
        - 4 * k**2 * l * n**2
        - k * l**2 * m**2 + 4 * k * l**2 * m * n - k * l**2 * n**2 + 8 * k * l * m**3
        + 6 * k * l * m**2 * n + 6 * k * l * m * n**2
        + 8 * k * l * n**3 - 2 * k * m**4 + 10 * k * m**3 * n - 3 * k * m**2 * n**2
        + 10 * k * m * n**3 - 2 * k * n**4
        + l**3 * m * n - 9 * l**2 * m**2 * n - 9 * l**2 * m * n**2 + l * m**4
        + 13 * l * m**3 * n - 3 * l * m**2 * n**2
        + 13 * l * m * n**3 + l * n**4 - 7 * m**5 - 8 * m**4 * n - 16 * m**3 * n**2
        - 16 * m**2 * n**3 - 8 * m * n**4
        - 7 * n**5 + 16 * k**4 + 16 * k**3 * l - 32 * k**2 * l * m - 32 * k**2 * l * n
        + 12 * k**2 * m**2
        - 48 * k**2 * m * n + 12 * k**2 * n**2 - 4 * k * l**3 + 4 * k * l**2 * m
        + 4 * k * l**2 * n - 12 * k * l * m**2
        - 60 * k * l * m * n - 12 * k * l * n**2 + 40 * k * m**3 + 48 * k * m**2 * n
        + 48 * k * m * n**2 + 40 * k * n**3
        - l**4 + 10 * l**3 * m + 10 * l**3 * n - 21 * l**2 * m**2 + 12 * l**2 * m * n
        - 21 * l**2 * n**2
        + 10 * l * m**3 + 48 * l * m**2 * n + 48 * l * m * n**2 + 10 * l * n**3
        - 17 * m**4 - 14 * m**3 * n
        - 21 * m**2 * n**2 - 14 * m * n**3 - 17 * n**4 - 16 * k**3 + 32 * k**2 * l
        - 48 * k**2 * m
        - 48 * k**2 * n + 80 * k * l**2 - 48 * k * l * m - 48 * k * l * n + 96 * k * m**2
        + 48 * k * m * n + 96 * k * n**2
        - 24 * l**3 - 24 * l**2 * m - 24 * l**2 * n + 24 * l * m**2 - 24 * l * m * n
        + 24 * l * n**2 - 16 * m**3
        - 48 * m**2 * n - 48 * m * n**2 - 16 * n**3 - 96 * k**2 - 64 * k * l + 64 * k * m
        + 64 * k * n + 96 * l**2
        - 32 * l * m - 32 * l * n - 16 * m**2 - 32 * m * n - 16 * n**2 + 64 * k
        - 128 * l + 64 * m + 64 * n + 128
    )
    f6 = (
        4 * k**2 + 2 * k * l - 4 * k * m - 4 * k * n + l**2 - 7 * l * m - 7 * l * n
        + 13 * m**2 - m * n + 13 * n**2 - 40 * k + 20 * l + 8 * m + 8 * n - 32
    )
    f7 = (
        -768 + 352 * k**2 - 332 * l**2 + 180 * n**2 + 180 * m**2 + 56 * k**3 - 8 * k**4
        + 14 * l**3 + 132 * n**3 + 132 * m**3 + 42 * n**4 + 42 * m**4 - 480 * k
        - 60 * l * m * n - 192 * n
        + 32 * k * l * m * n - 192 * m + 912 * l + l**4 - 354 * k * m * n
        + 158 * k * l * n + 158 * k * l * m + 26 * k**2 * m * n
        - 11 * k * l * n**2 + 22 * k**2 * l * m + 22 * k**2 * l * n - 45 * k * m * n**2
        - 90 * l * m**2 * n - 45 * k * m**2 * n
        - 11 * k * l * m**2 + 23 * l**2 * m * n - 90 * l * m * n**2 + k * l**2 * m
        + k * l**2 * n + 36 * m * n - 480 * k * m + 592 * k * l
        - 480 * k * n - 60 * l * m - 60 * l * n + 8 * k**3 * m + 8 * k**3 * n
        - 20 * k**2 * l + 32 * k**2 * n + 32 * k**2 * m
        - 12 * k**3 * l + 234 * m * n**2 + 234 * m**2 * n - 192 * l * n**2
        - 258 * k * n**2 - 192 * l * m**2 - 258 * k * m**2
        + 116 * l**2 * m + 116 * l**2 * n + 87 * m**3 * n + 87 * m * n**3
        - 15 * k * n**3 + 90 * m**2 * n**2 - 30 * l * n**3
        - 15 * k * m**3 - 30 * l * m**3 + 25 * l**2 * m**2 + 25 * l**2 * n**2
        - 14 * k**2 * m**2 - 14 * k**2 * n**2
        - 146 * k * l**2 - 10 * l**3 * m - 10 * l**3 * n - 2 * k**2 * l**2 + 3 * k * l**3
    )
    g1 = k - 2 * m + 2
    g2 = 4 * k - m ** 2 - 8
    g3 = 8 + m - 2 * k
    g4 = m - n
    return ClausePolynomials(f1, f2, f3, f4, f5, f6, f7, g1, g2, g3, g4)


def decide_closed_form(c: CyclicParams, variant: str = "theorem") -> Verdict:
    """Evaluate the quantifier-free formula; three disjuncts.

    1. Degenerate radicand (g4 = 0 and f2 = 0):
       (g1 = 0 and 1 <= m <= 4) or (g1 > 0 and g2 >= 0) or (g1 > 0 and
       g3 >= 0); the ``corrected`` variant additionally requires
       k + m - 1 >= 0 in the last option.  Without that guard the formula
       wrongly accepts forms whose reduced quartic has a negative constant
       term (the identity 4*g1*(k+m-1) - g3**2 = 9*g2 shows the g2 option
       is the discriminant condition, while the g3 option needs the
       constant sign separately).
    2. f1 > 0 and f3 = 0 and f4 >= 0.
    3. f1 > 0 and f3 > 0 and (f5 > 0 and (f6 < 0 or f7 < 0)) or
       (f5 = 0 and f7 < 0); the ``proof`` variant uses f6 <= 0 or f7 <= 0.
    """
    if variant not in CLOSED_FORM_VARIANTS:
        raise ValueError(f"unknown closed-form variant {variant!r}")
    method = f"closed_form_{variant}"
    P = eval_polys(c)
    m = c.m

    if P.g4 == 0 and P.f2 == 0:
        if P.g1 == 0 and 1 <= m <= 4:
            return Verdict(True, method, "case1/g1=0/1<=m<=4")
        if P.g1 > 0 and P.g2 >= 0:
            return Verdict(True, method, "case1/g1>0/g2>=0")
        if P.g1 > 0 and P.g3 >= 0:
            if variant != "corrected":
                return Verdict(True, method, "case1/g1>0/g3>=0")
            if c.k + m - 1 >= 0:
                return Verdict(True, method, "case1/g1>0/g3>=0/k+m-1>=0")
    else:
        if P.f1 > 0 and P.f3 == 0 and P.f4 >= 0:
            return Verdict(True, method, "case2/f1>0/f3=0/f4>=0")
        if P.f1 > 0 and P.f3 > 0:
            if variant == "proof":
                if P.f5 > 0 and (P.f6 <= 0 or P.f7 <= 0):
                    return Verdict(True, method, "case3/f5>0/f6<=0|f7<=0")
            else:
                if P.f5 > 0 and (P.f6 < 0 or P.f7 < 0):
                    return Verdict(True, method, "case3/f5>0/f6<0|f7<0")
            if P.f5 == 0 and P.f7 < 0:
                return Verdict(True, method, "case3/f5=0/f7<0")
    return Verdict(False, method, "none")


def _biquadratic_nonneg(a: Fraction, b: Fraction, cc: Fraction) -> tuple[bool, str]:
    """Nonnegativity of a*t**4 + b*t**2 + cc on all of R."""
    if a < 0:
        return False, "lead<0"
    if a == 0:
        ok = b >= 0 and cc >= 0
        return ok, "lead=0/b>=0,c>=0" if ok else "lead=0/fail"
    if cc < 0:
        return False, "c<0"
    if b >= 0:
        return True, "c>=0/b>=0"
    ok = b * b <= 4 * a * cc
    return ok, "c>=0/b<0/disc<=0" if ok else "c>=0/b<0/disc>0"


def decide_structural(c: CyclicParams) -> Verdict:
    """Case analysis on the reduced quartic g(t), in rational arithmetic.

    R = 0 collapses g to a biquadratic; a vanishing constant term f3
    collapses the decision to a quadratic factor; otherwise (f3 > 0,
    f1 > 0) the special-quartic discriminant rule applies with
    a1_squared = R.
    """
    P = eval_polys(c)
    rad = radicand(c)
    method = "structural"

    if rad == 0:
        ok, tag = _biquadratic_nonneg(P.g1, P.g3, c.k + c.m - 1)
        return Verdict(ok, method, f"R=0/biquadratic/{tag}")
    if P.f3 < 0:
        return Verdict(False, method, "f3<0/g(0)<0")
    if P.f3 == 0:
        # g = t**2 * (3*f1*t**2 - sqrt(R)*t + 3*(4+m+n-l))
        if P.f1 <= 0:
            return Verdict(False, method, "f3=0/quadratic/f1<=0")
        tail = 4 + c.m + c.n - c.l
        ok = rad <= 36 * P.f1 * tail
        tag = "f3=0/quadratic/disc<=0" if ok else "f3=0/quadratic/disc>0"
        return Verdict(ok, method, tag)
    if P.f1 <= 0:
        return Verdict(False, method, "f3>0/f1<=0")
    quartic = SpecialQuartic(
        a0=3 * P.f1,
        a1_squared=rad,
        a1_sign=-1,
        a2=3 * (4 + c.m + c.n - c.l),
        a4=P.f3,
    )
    _, d2, d3, d4 = discriminants(quartic)
    ok = is_nonneg(quartic)
    if d4 > 0:
        tag = f"f3>0/quartic-rule/D4>0/{'D2<0' if d2 < 0 else 'D3<0' if d3 < 0 else 'fail'}"
    elif d4 == 0:
        tag = f"f3>0/quartic-rule/D4=0/{'D3<0' if d3 < 0 else 'fail'}"
    else:
        tag = "f3>0/quartic-rule/D4<0"
    return Verdict(ok, method, tag)


def decide_oracle(c: CyclicParams) -> Verdict:
    """Sturm-based oracle: everywhere-nonnegativity of g over Q(sqrt(R))."""
    g = reduce_to_g(c).poly
    ok = is_nonneg_everywhere(g)
    return Verdict(ok, "sturm_oracle", "g-nonneg" if ok else "g-negative")


_METHODS = {
    "structural": decide_structural,
    "oracle": decide_oracle,
    "closed-theorem": lambda c: decide_closed_form(c, "theorem"),
    "closed-proof": lambda c: decide_closed_form(c, "proof"),
    "closed-corrected": lambda c: decide_closed_form(c, "corrected"),
}


def decide(c: CyclicParams, method: str = "structural") -> Verdict:
    """Dispatch by method name (CLI surface)."""
    try:
        impl = _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown decision method {method!r}") from None
    return impl(c)


# -- witness search -----------------------------------------------------------

# cheap necessary-condition probes: (1,1,1) has F = 3*f3, (1,-1,0) has F = f1
_PROBE_POINTS = (
    (1, 1, 1),
    (1, -1, 0),
    (1, 1, 0),
    (1, 0, -1),
    (1, -1, 1),
    (1, 1, -1),
    (2, -1, -1),
    (1, -2, 1),
    (0, 1, -1),
    (1, 2, -2),
)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount: int) -> None:
        self.left = amount

    def spend(self, amount: int = 1) -> bool:
        self.left -= amount
        return self.left >= 0


def _sign_variations(values) -> int:
    nonzero = [s for s in values if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def _find_negative_t(g: UniPoly, budget: _Budget) -> Optional[Fraction]:
    """Exact rational t >= 0 with g(t) < 0, by Sturm-guided bisection.

    Builds the Sturm chain of the squarefree part once, brackets all real
    roots with a doubling bound, and bisects only subintervals that still
    contain roots; every evaluated midpoint is sign-checked exactly, so the
    first midpoint inside the (open) negative region is returned.
    """
    if g.is_zero or g.degree < 1:
        return None
    if sgn(g.eval(Fraction(0))) < 0:
        return Fraction(0)
    core = poly_gcd(g, g.derivative())
    squarefree = poly_divmod(g, core)[0] if core.degree > 0 else g
    chain = sturm_chain(squarefree)

    def variations_at(x: Fraction) -> int:
        return _sign_variations([sgn(q.eval(x)) for q in chain])

    vars_minus_inf = _sign_variations(
        [sgn(q.leading) * ((-1) ** (q.degree % 2)) for q in chain]
    )
    vars_plus_inf = _sign_variations([sgn(q.leading) for q in chain])
    total_roots = vars_minus_inf - vars_plus_inf

    top = Fraction(2)
    while variations_at(-top) - variations_at(top) < total_roots:
        top *= 2
        if not budget.spend(len(chain)):
            return None
    if sgn(g.eval(top)) < 0:
        return top

    queue: list[tuple[Fraction, Fraction, int]] = []
    roots_up_to_top = variations_at(Fraction(0)) - variations_at(top)
    if roots_up_to_top > 0:
        queue.append((Fraction(0), top, roots_up_to_top))
    while queue:
        lo, hi, _count = queue.pop(0)
        mid = (lo + hi) / 2
        if not budget.spend(len(chain) + 1):
            return None
        if sgn(g.eval(mid)) < 0:
            return mid
        vlo, vmid, vhi = variations_at(lo), variations_at(mid), variations_at(hi)
        if vlo - vmid > 0:
            queue.append((lo, mid, vlo - vmid))
        if vmid - vhi > 0:
            queue.append((mid, hi, vmid - vhi))
    return None


def _real_cubic_roots(q: float, r: float) -> list[float]:
    """Approximate real roots of X**3 - X**2 + q*X - r (cased on a
    nonnegative discriminant; clamped when roundoff pushes it below)."""
    # depressed form: X = y + 1/3, y**3 + py + s = 0
    p = q - 1.0 / 3.0
    s = -r + q / 3.0 - 2.0 / 27.0
    if p >= -1e-300:
        # single real root regime (or triple root); fall back to Newton
        y = 0.0
        for _ in range(80):
            f = y ** 3 + p * y + s
            df = 3 * y * y + p
            if df == 0:
                break
            step = f / df
            y -= step
            if abs(step) < 1e-15:
                break
        return [y + 1.0 / 3.0]
    amp = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * s / (amp * p)
    arg = max(-1.0, min(1.0, arg))
    theta = math.acos(arg) / 3.0
    return sorted(
        amp * math.cos(theta - 2.0 * math.pi * idx / 3.0) + 1.0 / 3.0
        for idx in range(3)
    )


def _seeded_candidates(c: CyclicParams, tstar: Fraction):
    """Rational candidate triples near the equality locus at parameter tstar.

    The reduction attains equality at x+y+z = 1, xy+yz+zx = (1-t**2)/3 and
    the xyz value where H vanishes; the real triple realizing those values
    is the root set of X**3 - X**2 + q*X - r.  Rationalizing those roots at
    increasing precision converges into the open negative region.
    """
    qstar = (1 - tstar * tstar) / 3
    r1, r2 = r_range(tstar)
    rad = radicand(c)
    f2 = 4 * c.k + c.m + c.n - 8 - 2 * c.l
    tf = float(tstar)
    if rad > 0:
        r0 = (1.0 - 3.0 * tf ** 2 + 2.0 * float(f2) * tf ** 3 / math.sqrt(float(rad))) / 27.0
    else:
        r0 = float(r1 + r2) / 2.0
    r0 = min(max(r0, float(r1)), float(r2))
    candidates: list[Fraction] = []
    seen = set()
    approx = [Fraction(r0).limit_denominator(10 ** 6)]
    grid = [r1 + (r2 - r1) * Fraction(i, 16) for i in range(17)]
    for cand in approx + sorted(grid, key=lambda v: abs(float(v) - r0)):
        cand = min(max(cand, r1), r2)
        if cand not in seen:
            seen.add(cand)
            candidates.append(cand)
    for rr in candidates:
        roots = _real_cubic_roots(float(qstar), float(rr))
        if len(roots) < 3:
            continue
        yield roots


def _seeded_search(c: CyclicParams, budget: _Budget):
    g = reduce_to_g(c).poly
    tstar = _find_negative_t(g, budget)
    if tstar is None:
        return None
    for roots in _seeded_candidates(c, tstar):
        for denom_bound in (16, 64, 256, 1024, 4096, 16384, 65536, 2 ** 20):
            xs = [Fraction(rt).limit_denominator(denom_bound) for rt in roots]
            for triple in ((xs[0], xs[1], xs[2]), (xs[0], xs[2], xs[1])):
                if not budget.spend():
                    return None
                if eval_form(c, *triple) < 0:
                    return triple
    return None


def _refine_descent(c: CyclicParams, start, budget: _Budget):
    """Dyadic coordinate descent on F(v) / (x**2+y**2+z**2)**2 around a
    grid minimum; returns a negative point or None."""
    point = tuple(Fraction(v) for v in start)

    def ratio(v):
        nrm = v[0] ** 2 + v[1] ** 2 + v[2] ** 2
        if nrm == 0:
            return None
        return eval_form(c, *v) / nrm ** 2

    best = ratio(point)
    if best is None:
        return None
    if best < 0:
        return point
    step = Fraction(1, 2)
    for _round in range(8):
        improved = False
        for axis in range(3):
            for direction in (1, -1):
                cand = list(point)
                cand[axis] += direction * step
                cand_t = tuple(cand)
                val = ratio(cand_t)
                if not budget.spend():
                    return None
                if val is not None and val < best:
                    best, point = val, cand_t
                    improved = True
                    if best < 0:
                        return point
        if not improved:
            step /= 2
    return None


def find_witness(
    c: CyclicParams, budget: int = DEFAULT_WITNESS_BUDGET
) -> Optional[tuple[Fraction, Fraction, Fraction]]:
    """Exact rational (x, y, z) with F(x, y, z) < 0, or None.

    Deterministic: fixed probe points, then integer face grids of growing
    denominator, then a seeded search driven by an exact negative value of
    the reduced quartic, then dyadic refinement around the best grid point.
    Every returned point is re-checked with Fraction arithmetic.
    """
    tracker = _Budget(budget)
    for point in _PROBE_POINTS:
        if not tracker.spend():
            return None
        if eval_form(c, *point) < 0:
            return tuple(Fraction(v) for v in point)

    point, used = kernels.find_negative_on_faces(c, (1, 2, 3, 4), tracker.left)
    tracker.spend(used)
    if point is not None:
        return point
    if tracker.left <= 0:
        return None

    if not decide_structural(c).is_psd:
        found = _seeded_search(c, tracker)
        if found is not None:
            return found

    point, used = kernels.find_negative_on_faces(
        c, (8, 16, 32, 64), tracker.left, dyadic=True
    )
    tracker.spend(used)
    if point is not None:
        return point
    if tracker.left <= 0:
        return None

    coeffs = kernels.scaled_coefficients(c)
    _, _, _, evaluated, min_i, min_j, _ = kernels.face_scan(coeffs, 8)
    tracker.spend(evaluated)
    return _refine_descent(
        c, (Fraction(1), Fraction(min_i, 8), Fraction(min_j, 8)), tracker
    )


def attach_witness(c: CyclicParams, verdict: Verdict, budget: int = DEFAULT_WITNESS_BUDGET) -> Verdict:
    """Return the verdict with a witness attached when one can be found."""
    if verdict.is_psd:
        return verdict
    witness = find_witness(c, budget)
    if witness is None:
        return verdict
    return Verdict(
        is_psd=False,
        method=verdict.method,
        fired_clause=verdict.fired_clause,
        witness=witness,
        witness_value=eval_form(c, *witness),
    )
