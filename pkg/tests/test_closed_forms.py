import math

import numpy as np
import pytest

from eccspectra.closed_forms import (
    H_THRESHOLD,
    Quartic,
    balanced_split,
    broom_argmax_candidates,
    f_a_quartic,
    fa_monotone,
    gamma_d,
    h_eps_poly,
    h_equality_condition,
    h_least_eigenvalue,
    rho_squared_broom,
    solve_quadratic,
)
from eccspectra.errors import EvenDiameter, ParameterMismatch, ParameterOutOfRange
from eccspectra.families import double_broom, spider_h
from eccspectra.spectra import eccentricity_matrix, eigenvalues_symmetric, perron_pair
from eccspectra.verify import multiset_within


def spectrum(g):
    return eigenvalues_symmetric(eccentricity_matrix(g)).values


def test_solve_quadratic_is_stable():
    assert solve_quadratic(-5.0, 6.0) == pytest.approx((2.0, 3.0))
    assert solve_quadratic(0.0, 0.0) == (0.0, 0.0)
    small, big = solve_quadratic(-1e8, 1.0)
    assert small == pytest.approx(1e-8, rel=1e-12)
    assert big == pytest.approx(1e8, rel=1e-12)
    with pytest.raises(ValueError):
        solve_quadratic(0.0, 1.0)


def test_fa_examples():
    q = f_a_quartic(4, 0)
    assert (q.c4, q.c2, q.c0) == (1, -17, 16)
    assert q.roots() == pytest.approx([4, 1, -1, -4], abs=1e-12)
    q = f_a_quartic(5, 0)
    assert (q.c2, q.c0) == (-30, 32)
    assert q.largest_root() == pytest.approx(5.3752, abs=5e-5)
    assert f_a_quartic(6, 1).largest_root() > f_a_quartic(6, 0).largest_root()
    for n, a in [(3, 0), (6, 3), (6, -1)]:
        with pytest.raises(ParameterOutOfRange):
            f_a_quartic(n, a)


def test_fa_matches_4x4_block():
    # Quotient matrix of ε(D_{n,3}^{a,b}) on the partition {u's, v1, v2, w's}:
    # ecc(u)=ecc(w)=3, ecc(v)=2; u-w distance 3, u-v2 2, v1-w 2.
    for n in range(4, 21):
        for a in range(0, (n - 4) // 2 + 1):
            b = n - 4 - a
            ua, wb = a + 1, b + 1
            quotient = np.array(
                [
                    [0, 0, 2, 3 * wb],
                    [0, 0, 0, 2 * wb],
                    [2 * ua, 0, 0, 0],
                    [3 * ua, 2, 0, 0],
                ],
                dtype=float,
            )
            coeffs = np.poly(quotient)
            q = f_a_quartic(n, a)
            assert coeffs == pytest.approx([1, 0, q.c2, 0, q.c0], abs=1e-6)
            spec = spectrum(double_broom(n, 3, a, b))
            assert multiset_within(q.roots(), spec, 1e-7)
            assert q.largest_root() == pytest.approx(spec[0], abs=1e-7)


def test_fa_monotone_to_30():
    assert fa_monotone(30) == []


def test_gamma():
    assert gamma_d(3) == 4
    assert gamma_d(5) == 25
    assert gamma_d(7) == 77
    for d in range(3, 40, 2):
        assert gamma_d(d) == sum(k * k for k in range((d + 1) // 2, d))
    with pytest.raises(EvenDiameter):
        gamma_d(4)
    with pytest.raises(ParameterOutOfRange):
        gamma_d(1)


def test_rho_squared_examples():
    data = rho_squared_broom(4, 3, 0, 0)
    assert (data.gamma, data.base, data.delta) == (4, 17, 225)
    assert data.rho_squared == 16.0 and data.rho == 4.0
    data = rho_squared_broom(5, 3, 0, 1)
    assert (data.base, data.delta) == (30, 772)
    assert data.rho == pytest.approx(5.3752, abs=5e-5)
    value, _ = perron_pair(eccentricity_matrix(double_broom(8, 5, 1, 1)))
    assert rho_squared_broom(8, 5, 1, 1).rho == pytest.approx(value, rel=1e-7)
    with pytest.raises(ParameterMismatch):
        rho_squared_broom(8, 5, 1, 2)
    with pytest.raises(EvenDiameter):
        rho_squared_broom(8, 4, 1, 2)


def test_rho_squared_matches_eigensolver_grid():
    for d in (3, 5, 7):
        for n in range(d + 1, d + 9):
            k = n - d - 1
            for a in range(k + 1):
                data = rho_squared_broom(n, d, a, k - a)
                assert data.delta >= 0 and data.rho_squared >= data.base / 2
                assert data.rho == pytest.approx(spectrum(double_broom(n, d, a, k - a))[0], rel=1e-7)


@pytest.mark.parametrize("n, d", [(10, 5), (12, 7), (11, 5), (14, 9)])
def test_candidates_match_exhaustive_broom_max(n, d):
    cand = broom_argmax_candidates(n, d)
    k = n - d - 1
    assert cand.x_low == n - d
    lo, hi = balanced_split(k)
    assert cand.x_high == (lo + 1) * (hi + 1)
    best = max(spectrum(double_broom(n, d, a, k - a))[0] for a in range(k + 1))
    assert cand.best == pytest.approx(best, rel=1e-9)


def test_candidates_single_and_errors():
    cand = broom_argmax_candidates(6, 5)
    assert cand.single and cand.x_low == 1
    assert broom_argmax_candidates(10, 5).x_high == 9
    with pytest.raises(EvenDiameter):
        broom_argmax_candidates(10, 6)
    with pytest.raises(ParameterOutOfRange):
        broom_argmax_candidates(10, 3)
    with pytest.raises(ParameterOutOfRange):
        broom_argmax_candidates(5, 5)


def test_h_poly_examples():
    poly = h_eps_poly(0, 2)
    assert poly.zero_multiplicity == 1 and poly.repeated_multiplicity == 1
    assert poly.main_quadratic == (1, -4, -17)
    s13, s21 = math.sqrt(13), math.sqrt(21)
    expected = sorted([0, -2 + s13, -2 - s13, 2 + s21, 2 - s21], reverse=True)
    assert poly.roots() == pytest.approx(expected, abs=1e-12)
    assert h_eps_poly(0, 3).main_quadratic == (1, -8, -48)
    assert sorted(h_eps_poly(0, 3).roots())[-1] == pytest.approx(12.0)
    assert h_eps_poly(2, 2).main_quadratic == (1, -4, -53)
    with pytest.raises(ParameterOutOfRange):
        h_eps_poly(0, 1)


def test_h_poly_matches_matrix_grid():
    for p in range(7):
        for q in range(2, 7):
            poly = h_eps_poly(p, q)
            g = spider_h(p, q)
            m = eccentricity_matrix(g).m.astype(float)
            assert poly.degree == g.n
            assert np.allclose(poly.coefficients(), np.poly(m), rtol=1e-9, atol=1e-6 * abs(np.poly(m)).max())
            spec = spectrum(g)
            assert multiset_within(poly.roots(), spec, 1e-7) and len(poly.roots()) == len(spec)
            assert (np.abs(spec) < 1e-7).sum() >= p + 1
            for lam in (-1.5, 2.5):
                assert poly(lam) == pytest.approx(float(np.prod(lam - spec)), rel=1e-8)


def test_h_least_examples():
    assert h_least_eigenvalue(0, 2) == pytest.approx(-5.60555, abs=1e-5)
    assert h_least_eigenvalue(2, 2) == H_THRESHOLD
    assert h_least_eigenvalue(3, 2) == pytest.approx(2 - math.sqrt(75), abs=1e-12)
    for p in range(7):
        for q in range(2, 7):
            assert h_least_eigenvalue(p, q) == pytest.approx(spectrum(spider_h(p, q))[-1], abs=1e-8)


def test_h_equality_condition_grid():
    true_pairs = {(p, q) for p in range(11) for q in range(2, 11) if h_equality_condition(p, q)}
    assert true_pairs == {(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 2)}
    for p in range(11):
        for q in range(2, 11):
            assert h_equality_condition(p, q) == (abs(h_least_eigenvalue(p, q) - H_THRESHOLD) <= 1e-9)
    assert not h_equality_condition(3, 2) and not h_equality_condition(0, 5)


def test_quartic_callable():
    q = Quartic(c2=-17, c0=16)
    assert q(4.0) == 0.0 and q(0.0) == 16.0
