import random
from fractions import Fraction as F

import pytest

from cycquart.decider import (
    CLOSED_FORM_VARIANTS,
    Verdict,
    _Budget,
    _find_negative_t,
    attach_witness,
    decide,
    decide_closed_form,
    decide_oracle,
    decide_structural,
    eval_polys,
    find_witness,
)
from cycquart.form import CyclicParams, eval_form, radicand, reduce_to_g
from cycquart.quartic_rules import SpecialQuartic, discriminants
from cycquart.scalars import sgn


def rand_params(rng, span=12, den=6):
    return CyclicParams(*(F(rng.randint(-span, span), rng.randint(1, den))
                          for _ in range(4)))


def test_eval_polys_at_origin():
    P = eval_polys(CyclicParams(0, 0, 0, 0))
    assert (P.f1, P.f2, P.f3, P.f4) == (2, -8, 1, 3)
    assert (P.f5, P.f6, P.f7) == (128, -32, -768)
    assert (P.g1, P.g2, P.g3, P.g4) == (2, -8, 8, 0)


def test_eval_polys_examples():
    P = eval_polys(CyclicParams(0, 0, -1, 0))
    assert (P.f1, P.f2, P.f3, P.f4, P.g4) == (3, -9, 0, 2, -1)
    P = eval_polys(CyclicParams(2, 0, 0, 0))
    assert (P.f1, P.f2, P.f3) == (4, 0, 3)
    assert (P.g1, P.g2, P.g4) == (4, 0, 0)


def test_clause_polynomials_mn_symmetry():
    rng = random.Random(53)
    for _ in range(60):
        c = rand_params(rng)
        swapped = CyclicParams(c.k, c.l, c.n, c.m)
        P, Q = eval_polys(c), eval_polys(swapped)
        assert (P.f1, P.f2, P.f3, P.f4, P.f5, P.f6, P.f7) == (
            Q.f1, Q.f2, Q.f3, Q.f4, Q.f5, Q.f6, Q.f7)
        assert P.g4 == -Q.g4


def test_discriminant_proportionality_identities():
    # D2(g) = 108*f1^2*f6, D3(g) = 324*f1^2*f7, D4(g) = 104976*f1^2*f3*f5
    rng = random.Random(59)
    checked = 0
    for _ in range(150):
        c = rand_params(rng)
        P = eval_polys(c)
        if P.f1 == 0:
            continue
        rad = radicand(c)
        quartic = SpecialQuartic(
            a0=3 * P.f1, a1_squared=rad, a1_sign=-1 if rad > 0 else 0,
            a2=3 * (4 + c.m + c.n - c.l), a4=P.f3)
        _, d2, d3, d4 = discriminants(quartic)
        assert d2 == 108 * P.f1 ** 2 * P.f6
        assert d3 == 324 * P.f1 ** 2 * P.f7
        assert d4 == 104976 * P.f1 ** 2 * P.f3 * P.f5
        checked += 1
    assert checked > 100


def test_closed_form_examples():
    v = decide_closed_form(CyclicParams(0, 0, 0, 0), "theorem")
    assert v.is_psd and v.fired_clause == "case3/f5>0/f6<0|f7<0"

    # documented erratum: the theorem variant accepts a non-PSD form
    erratum = CyclicParams(F(1, 2), -3, 0, 0)
    v = decide_closed_form(erratum, "theorem")
    assert v.is_psd and v.fired_clause == "case1/g1>0/g3>=0"
    assert eval_form(erratum, 1, 1, 1) == F(-9, 2)
    assert not decide_closed_form(erratum, "corrected").is_psd

    v = decide_closed_form(CyclicParams(0, 0, -3, 0), "theorem")
    assert not v.is_psd and v.fired_clause == "none"

    with pytest.raises(ValueError):
        decide_closed_form(CyclicParams(0, 0, 0, 0), "bogus")


def test_structural_examples():
    v = decide_structural(CyclicParams(0, 0, 0, 0))
    assert v.is_psd and v.fired_clause.startswith("f3>0/quartic-rule/D4>0")

    v = decide_structural(CyclicParams(0, 0, -1, 0))
    assert v.is_psd and v.fired_clause == "f3=0/quadratic/disc<=0"

    v = decide_structural(CyclicParams(F(1, 2), -3, 0, 0))
    assert not v.is_psd and v.fired_clause == "R=0/biquadratic/c<0"

    v = decide_structural(CyclicParams(2, 0, 0, 0))
    assert v.is_psd and v.fired_clause.startswith("R=0/biquadratic")


def test_oracle_examples():
    assert decide_oracle(CyclicParams(2, 0, 0, 0)).is_psd
    assert not decide_oracle(CyclicParams(0, 0, 2, 2)).is_psd
    assert not decide_oracle(CyclicParams(0, 0, -3, 0)).is_psd


def test_structural_equals_oracle_on_random_samples():
    rng = random.Random(61)
    for _ in range(200):
        c = rand_params(rng)
        assert decide_structural(c).is_psd == decide_oracle(c).is_psd


def test_psd_implies_necessary_conditions():
    rng = random.Random(67)
    for _ in range(200):
        c = rand_params(rng)
        if decide_structural(c).is_psd:
            P = eval_polys(c)
            assert P.f1 >= 0 and P.f3 >= 0


def test_find_witness_examples():
    assert find_witness(CyclicParams(0, 0, -3, 0)) == (1, 1, 1)
    assert find_witness(CyclicParams(0, 0, 2, 2)) == (1, -1, 0)
    assert find_witness(CyclicParams(F(1, 2), -3, 0, 0)) == (1, 1, 1)


def test_find_witness_soundness():
    rng = random.Random(71)
    found = 0
    for _ in range(60):
        c = rand_params(rng)
        verdict = decide_structural(c)
        witness = find_witness(c, budget=20000)
        if verdict.is_psd:
            assert witness is None
        else:
            assert witness is not None
            assert eval_form(c, *witness) < 0
            found += 1
    assert found > 10


def test_witnesses_near_the_psd_boundary():
    # bisect random segments crossing the PSD boundary; the NotPSD endpoint
    # ends up within 2^-28 of the boundary, so the negative region is
    # razor-thin and far from any probe point or coarse grid
    rng = random.Random(97)

    def lerp(a, b, lam):
        return CyclicParams(*(getattr(a, n) + lam * (getattr(b, n) - getattr(a, n))
                              for n in "klmn"))

    tested = 0
    while tested < 8:
        a = rand_params(rng, span=30, den=8)
        b = rand_params(rng, span=30, den=8)
        pa, pb = decide_structural(a).is_psd, decide_structural(b).is_psd
        if pa == pb:
            continue
        if not pa:
            a, b = b, a
        lo, hi = F(0), F(1)
        for _ in range(28):
            mid = (lo + hi) / 2
            if decide_structural(lerp(a, b, mid)).is_psd:
                lo = mid
            else:
                hi = mid
        c = lerp(a, b, hi)
        assert not decide_structural(c).is_psd
        assert not decide_oracle(c).is_psd
        witness = find_witness(c)
        assert witness is not None
        assert eval_form(c, *witness) < 0
        tested += 1


def test_seeded_search_handles_grid_resistant_case():
    # negative region far from the probe points and the coarse face grids
    c = CyclicParams(F(29, 8), -1, -2, 4)
    assert not decide_structural(c).is_psd
    witness = find_witness(c)
    assert witness is not None
    assert eval_form(c, *witness) < 0


def test_find_negative_t_sign_is_exact():
    c = CyclicParams(F(29, 8), -1, -2, 4)
    g = reduce_to_g(c).poly
    t = _find_negative_t(g, _Budget(10 ** 6))
    assert t is not None and t >= 0
    assert sgn(g.eval(t)) < 0


def test_find_negative_t_none_for_nonneg():
    g = reduce_to_g(CyclicParams(0, 0, 0, 0)).poly
    assert _find_negative_t(g, _Budget(10 ** 5)) is None


def test_decide_dispatch_and_variants():
    c = CyclicParams(0, 0, 0, 0)
    assert decide(c, "structural").method == "structural"
    assert decide(c, "oracle").method == "sturm_oracle"
    for variant in CLOSED_FORM_VARIANTS:
        v = decide(c, f"closed-{variant}")
        assert v.method == f"closed_form_{variant}"
        assert v.is_psd
    with pytest.raises(ValueError):
        decide(c, "nope")


def test_verdict_witness_consistency():
    with pytest.raises(ValueError):
        Verdict(is_psd=True, method="structural", fired_clause="x",
                witness=(F(1), F(1), F(1)))


def test_attach_witness():
    c = CyclicParams(0, 0, -3, 0)
    v = attach_witness(c, decide_structural(c))
    assert v.witness == (1, 1, 1) and v.witness_value == -6
    c = CyclicParams(0, 0, 0, 0)
    v = attach_witness(c, decide_structural(c))
    assert v.witness is None
