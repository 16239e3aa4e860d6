import math

import numpy as np
import pytest
from scipy.integrate import quad

from zetakit import DivergenceError, euler_maclaurin_tail, quad_adaptive
from zetakit.quadrature import quad_to_inf


def _power_tail(s):
    f = lambda t: np.asarray(t, dtype=float) ** -s
    fp = lambda t: -s * t ** (-s - 1.0)
    fppp = lambda t: -s * (s + 1.0) * (s + 2.0) * t ** (-s - 3.0)
    return f, fp, fppp


class TestQuadAdaptive:
    def test_oscillatory_complex(self):
        val = quad_adaptive(lambda x: np.exp(1j * x ** 2), 0.0, 12.0, abs_tol=1e-12)
        re = quad(lambda x: math.cos(x * x), 0, 12, epsabs=1e-13, limit=400)[0]
        im = quad(lambda x: math.sin(x * x), 0, 12, epsabs=1e-13, limit=400)[0]
        assert abs(val - complex(re, im)) < 1e-11

    def test_presplit_points(self):
        val = quad_adaptive(lambda x: np.abs(x), -1.0, 1.0, abs_tol=1e-13,
                            initial_points=[0.0])
        assert val == pytest.approx(1.0, abs=1e-13)

    def test_infinite_map(self):
        assert quad_to_inf(lambda t: t ** -2.0, 100.0) == pytest.approx(0.01, abs=1e-14)


class TestEulerMaclaurinTail:
    def test_inverse_square_oracle(self):
        # tail from 101: zeta(2) - H_100, direct-summation oracle
        f, fp, fppp = _power_tail(2.0)
        h100 = math.fsum(1.0 / k ** 2 for k in range(1, 101))
        ref = math.pi ** 2 / 6.0 - h100
        assert abs(euler_maclaurin_tail(f, fp, fppp, 101) - ref) <= 1e-12

    def test_inverse_square_inclusive_convention(self):
        # the estimate sums n >= N: tail(100) - tail(101) = f(100)
        f, fp, fppp = _power_tail(2.0)
        t100 = euler_maclaurin_tail(f, fp, fppp, 100)
        t101 = euler_maclaurin_tail(f, fp, fppp, 101)
        assert abs((t100 - t101) - 100.0 ** -2) < 1e-14

    def test_zero_function(self):
        zero = lambda t: np.zeros_like(np.asarray(t, dtype=float))
        assert euler_maclaurin_tail(zero, lambda t: 0.0, lambda t: 0.0, 10) == 0.0

    def test_inverse_fourth_oracle(self):
        f, fp, fppp = _power_tail(4.0)
        h49 = math.fsum(1.0 / k ** 4 for k in range(1, 50))
        ref = math.pi ** 4 / 90.0 - h49
        assert abs(euler_maclaurin_tail(f, fp, fppp, 50) - ref) <= 1e-13

    def test_divergent_tail_detected(self):
        f = lambda t: 1.0 / np.asarray(t, dtype=float)
        with pytest.raises(DivergenceError):
            euler_maclaurin_tail(f, lambda t: -t ** -2.0, lambda t: -6.0 * t ** -4.0, 5)
