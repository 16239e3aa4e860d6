import math
import warnings

import mpmath as mp
import pytest

from zetakit import (AccuracyError, ConditioningWarning, DomainError,
                     PoleError, SlowConvergenceError, StripError,
                     contour_zeta, continued_zeta, zeta_pos_int, zeta_series)


class TestZetaSeries:
    def test_riemann_two(self, riemann):
        got = zeta_series(riemann.zeros, 2.0, 1000)
        assert abs(got - math.pi ** 2 / 6.0) < 1e-12

    def test_airy_two_closed_form(self, airy):
        ref = complex(3 ** mp.mpf("2/3")
                      * (mp.gamma(mp.mpf(2) / 3) / mp.gamma(mp.mpf(1) / 3)) ** 2)
        got = zeta_series(airy.zeros, 2.0, 10000)
        assert abs(got - ref) < 1e-10

    def test_airy_eight_matches_recursion(self, airy):
        ref = zeta_pos_int(airy.series, 8, airy.alpha, allow_extended=True)
        got = zeta_series(airy.zeros, 8.0, 2000)
        assert abs(got - ref) < 1e-12

    def test_margin_guard(self, airy):
        with pytest.raises(SlowConvergenceError):
            zeta_series(airy.zeros, 1.6, 1000)

    def test_tail_robustness(self, airy):
        a = zeta_series(airy.zeros, 2.0, 4000)
        b = zeta_series(airy.zeros, 2.0, 8000)
        assert abs(a - b) < 1e-11

    def test_hurwitz_negative_parameter_branch(self):
        # sequence with negative elements: matches the reflection-computed
        # Hurwitz values (principal-branch powers)
        from zetakit import hurwitz_model
        hm = hurwitz_model(-2.5)
        got = zeta_series(hm.zeros, 4.0, 4000)
        ref = complex(mp.zeta(4, mp.mpf("-2.5")))
        assert abs(got - ref) < 1e-10

    def test_complex_sequence_branch(self):
        from zetakit import hurwitz_model
        hm = hurwitz_model(0.5 + 0.5j)
        got = zeta_series(hm.zeros, 3.0, 4000)
        ref = complex(mp.zeta(3, mp.mpc(0.5, 0.5)))
        assert abs(got - ref) < 1e-10


class TestContourZeta:
    def test_riemann_integers(self, riemann):
        for s in (2.0, 3.0, 4.0):
            got = contour_zeta(riemann, s, R=0.5)
            assert abs(got - complex(mp.zeta(s))) < 1e-6

    def test_airy_three(self, airy):
        g = mp.gamma
        ref = complex(0.5 - 3 * (g(mp.mpf(2) / 3) / g(mp.mpf(1) / 3)) ** 3)
        got = contour_zeta(airy, 3.0, R=1.0)
        assert abs(got - ref) < 1e-6

    def test_ray_term_vanishes_at_integers(self, airy):
        # at integer s only the circle term survives; the value must agree
        # with the recursion at quadrature tolerance
        got = contour_zeta(airy, 6.0, R=1.5)
        ref = zeta_pos_int(airy.series, 6, airy.alpha, allow_extended=True)
        assert abs(got - ref) < 1e-10

    def test_noninteger_needs_large_tmax(self, riemann):
        with pytest.raises(AccuracyError):
            contour_zeta(riemann, 2.5, R=0.5, t_max=400.0)
        got = contour_zeta(riemann, 2.5, R=0.5, t_max=2.0e7, quad_tol=1e-9)
        assert abs(got - complex(mp.zeta(2.5))) < 1e-6

    def test_airy_noninteger(self, airy):
        got = contour_zeta(airy, 2.5, R=1.5, t_max=2.0e6, quad_tol=1e-10)
        ref = zeta_series(airy.zeros, 2.5, 8000)
        assert abs(got - ref) < 1e-6

    def test_domain_guard(self, airy):
        with pytest.raises(DomainError):
            contour_zeta(airy, 1.0)
        with pytest.raises(DomainError):
            contour_zeta(airy, 3.0, R=5.0)


class TestContinuedZeta:
    def test_airy_special_points(self, airy):
        assert abs(continued_zeta(airy, 0.0) + 0.25) < 1e-8
        assert abs(continued_zeta(airy, -1.0)) < 1e-7
        assert abs(continued_zeta(airy, -0.5) - (-0.1393)) < 2e-4

    def test_riemann_left_values(self, riemann):
        for s in (0.5, -0.5, -2.5):
            got = continued_zeta(riemann, s)
            assert abs(got - complex(mp.zeta(s))) < 1e-10

    def test_representation_agreement(self, riemann, airy):
        for model in (riemann, airy):
            for s in (2.0, 3.0, 4.0):
                series = zeta_series(model.zeros, s, 4000)
                contour = contour_zeta(model, s)
                cont = continued_zeta(model, s)
                assert abs(series - contour) < 1e-6
                assert abs(series - cont) < 1e-6
                assert abs(contour - cont) < 1e-6

    def test_r_independence(self, airy):
        r1 = 0.5 * airy.first_zero_modulus
        r2 = 0.9 * airy.first_zero_modulus
        for s in (2.5, 0.0, -0.5):
            a = continued_zeta(airy, s, R=r1)
            b = continued_zeta(airy, s, R=r2)
            assert abs(a - b) < 1e-7

    def test_residue_bracketing(self, airy):
        h = 1e-3
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConditioningWarning)
            above = h * continued_zeta(airy, 1.5 + h)
            below = -h * continued_zeta(airy, 1.5 - h)
        target = 1.0 / math.pi
        # one-sided estimates carry the linear Laurent term ~1.0e-4 each
        assert abs(above - target) < 1.5e-4
        assert abs(below - target) < 1.5e-4
        lo, hi = min(above.real, below.real), max(above.real, below.real)
        assert lo <= target <= hi
        assert abs(0.5 * (above + below) - target) < 1e-6

    def test_pole_proximity_warns(self, airy):
        with pytest.warns(ConditioningWarning):
            continued_zeta(airy, 1.5 + 5e-4)

    def test_at_pole_raises(self, airy):
        with pytest.raises(PoleError):
            continued_zeta(airy, 1.5)

    def test_strip_guard(self, airy):
        with pytest.raises(StripError):
            continued_zeta(airy, -30.0)

    def test_depth_trim_consistency(self, airy):
        full = continued_zeta(airy, -0.5)
        trimmed = continued_zeta(airy, -0.5, depth=9)
        assert abs(full - trimmed) < 1e-7

    def test_quad_tol_env_override(self, airy, monkeypatch):
        monkeypatch.setenv("ZETAKIT_QUAD_TOL", "1e-6")
        got = continued_zeta(airy, 0.0)
        assert abs(got + 0.25) < 1e-4

    def test_zeta0_limit_consistency(self, riemann, airy):
        # the stored zeta(0) is the s -> 0 limit of the full representation
        from zetakit import classify_poles
        for model in (riemann, airy):
            z0 = classify_poles(model.asym).zeta0
            near = continued_zeta(model, 1e-6)
            assert abs(near - z0) < 1e-4
