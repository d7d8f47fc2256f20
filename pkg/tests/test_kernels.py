import random
from fractions import Fraction as F

import pytest

from cycquart import _kernels_py, kernels
from cycquart.form import CyclicParams, eval_form


def rand_params(rng, span=50, den=8):
    return CyclicParams(*(F(rng.randint(-span, span), rng.randint(1, den))
                          for _ in range(4)))


def test_scaled_coefficients_preserve_sign():
    rng = random.Random(73)
    for _ in range(50):
        c = rand_params(rng)
        coeffs = kernels.scaled_coefficients(c)
        d = rng.randint(1, 6)
        i = rng.randint(-d, d)
        j = rng.randint(-d, d)
        A, Bk, Bl, Bm, Bn = coeffs
        s4 = d ** 4 + i ** 4 + j ** 4
        s22 = d * d * i * i + i * i * j * j + j * j * d * d
        s211 = d * i * j * (d + i + j)
        s31 = d ** 3 * i + i ** 3 * j + j ** 3 * d
        s13 = d * i ** 3 + i * j ** 3 + j * d ** 3
        val = A * s4 + Bk * s22 + Bl * s211 + Bm * s31 + Bn * s13
        exact = eval_form(c, 1, F(i, d), F(j, d))
        assert (val > 0) == (exact > 0) and (val < 0) == (exact < 0)


def test_python_kernel_matches_direct_evaluation():
    rng = random.Random(79)
    for _ in range(20):
        c = rand_params(rng, span=9, den=3)
        coeffs = kernels.scaled_coefficients(c)
        found, i, j, evaluated, min_i, min_j, min_val = _kernels_py.face_scan(*coeffs, 3)
        assert evaluated >= 1
        if found:
            assert eval_form(c, 1, F(i, 3), F(j, 3)) < 0
        exact_min = min(
            eval_form(c, 1, F(a, 3), F(b, 3))
            for a in range(-3, 4)
            for b in range(-3, 4)
        )
        if not found:
            assert eval_form(c, 1, F(min_i, 3), F(min_j, 3)) == exact_min


@pytest.mark.skipif(not kernels.HAVE_COMPILED, reason="extension not built")
def test_compiled_matches_python():
    rng = random.Random(83)
    for _ in range(30):
        c = rand_params(rng)
        coeffs = kernels.scaled_coefficients(c)
        for d in (1, 2, 5, 8):
            for skip in (False, True):
                py = kernels.face_scan_with("python", coeffs, d, skip)
                cc = kernels.face_scan_with("compiled", coeffs, d, skip)
                assert py == cc


def test_oversized_coefficients_fall_back_to_python():
    big = CyclicParams(F(10 ** 14), F(1), F(1), F(1))
    coeffs = kernels.scaled_coefficients(big)
    assert not kernels._fits_int64(coeffs, 64)
    # the dispatcher must still produce exact results
    found, i, j, *_ = kernels.face_scan(coeffs, 2)
    py = _kernels_py.face_scan(*coeffs, 2)
    assert (found, i, j) == py[:3]


def test_find_negative_on_faces_verifies_exactly():
    c = CyclicParams(0, 0, -3, 0)
    point, spent = kernels.find_negative_on_faces(c, (1, 2), 10 ** 6)
    assert point is not None
    assert eval_form(c, *point) < 0
    assert spent >= 1

    psd = CyclicParams(2, 0, 0, 0)
    point, _ = kernels.find_negative_on_faces(psd, (1, 2, 4, 8), 10 ** 6)
    assert point is None


def test_budget_zero_scans_nothing():
    c = CyclicParams(0, 0, -3, 0)
    point, spent = kernels.find_negative_on_faces(c, (1, 2), 0)
    assert point is None and spent == 0
