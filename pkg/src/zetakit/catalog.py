"""Builders for the bundled sequence models.

Each model packages the Taylor side (PowerSeries), the large-argument side
(AsymExpansion), a pointwise evaluator for the characteristic function, and
-- where the zeros are real and computable -- a ZeroSequence generator:

* ``riemann_model``: positive integers, F(z) = 1/Gamma(1-z)
* ``hurwitz_model``: integers shifted by a, F(z) = 1/Gamma(a-z)
* ``airy_model``:    negated Airy-function zeros, F(z) = Ai(-z)
* ``pcf_model``:     parabolic cylinder U(a, z) zeros
* ``chf_model``:     confluent hypergeometric M(a, b, z) zeros
"""

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .asym import AsymExpansion, log_compose
from .errors import DomainError, RefinementError
from .kernels import (EULER_GAMMA, bernoulli_number, digamma_polygamma,
                      gamma)
from .quadrature import euler_maclaurin_tail, quad_adaptive
from .series import PowerSeries, series_exp

RIEMANN_PSI = 3.0 * math.pi / 4.0
AIRY_PSI = 1.6  # second-quadrant ray, inside the sector where the
                # dominant-exponential expansion of Ai(-z) is valid


@dataclass(frozen=True)
class ZeroSequence:
    """Deterministic generator of the first n sequence elements.

    The first ``n_exact`` elements come from refined numerics, the rest from
    the closed asymptotic formula.  ``tail_fn`` is the smooth continuation
    used by the Euler-Maclaurin tail: x -> (g, g', g'', g''') with
    g(n) = a_n for n past the exact block.
    """

    alpha: float
    n_exact: int
    exact_fn: object
    asym_fn: object
    tail_fn: object
    _cache: dict = field(default_factory=dict, compare=False)

    def values(self, count: int) -> np.ndarray:
        key = "vals"
        have = self._cache.get(key)
        if have is not None and len(have) >= count:
            return have[:count]
        n_ex = min(count, self.n_exact)
        exact = [self.exact_fn(n) for n in range(1, n_ex + 1)]
        rest = [self.asym_fn(n) for n in range(n_ex + 1, count + 1)]
        vals = np.asarray(exact + rest, dtype=complex)
        self._cache[key] = vals
        return vals


@dataclass(frozen=True)
class CatalogModel:
    """A sequence model: series + asymptotics + evaluator (+ zeros)."""

    name: str
    params: dict
    series: PowerSeries
    asym: AsymExpansion
    zeros: ZeroSequence | None = None
    eval: object = None          # z -> (F(z), F'(z)); stated domain per model
    log_deriv: object = None     # vectorized: array z -> F'(z)/F(z)
    first_zero_modulus: float | None = None
    closed_forms: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def alpha(self) -> float:
        return self.asym.alpha


# ---------------------------------------------------------------------------
# Riemann / Hurwitz

def _recip_gamma_pair(a: complex, z):
    """(F, F') for F(z) = 1/Gamma(a - z), stable at the zeros z = a + k.

    Near the Gamma poles the reflection form sin(pi(a-z)) Gamma(1-a+z) / pi
    avoids evaluating Gamma at its poles.
    """
    z = complex(z)
    w = a - z
    if w.real < 0.5:
        s = cmath.sin(math.pi * w)
        g = gamma(1.0 - w)
        f = s * g / math.pi
        fp = -cmath.cos(math.pi * w) * g \
            + s * g * digamma_polygamma(0, 1.0 - w) / math.pi
        return f, fp
    f = 1.0 / gamma(w)
    return f, digamma_polygamma(0, w) * f


def _zeta_int(k: int) -> float:
    """zeta(k) for integer k >= 2 by direct summation plus tail estimate."""
    if k == 2:
        return math.pi ** 2 / 6.0
    n0 = 40
    head = math.fsum((n + 1.0) ** -k for n in range(n0))
    s = float(k)
    tail = euler_maclaurin_tail(
        lambda t: t ** -s,
        lambda t: -s * t ** (-s - 1.0),
        lambda t: -s * (s + 1.0) * (s + 2.0) * t ** (-s - 3.0),
        n0 + 1)
    return head + tail.real


def _riemann_series(order: int) -> PowerSeries:
    # exponentiate -gamma_E z - sum_{k>=2} zeta(k) z^k / k
    b = np.zeros(order + 1, dtype=complex)
    b[1] = -EULER_GAMMA
    for k in range(2, order + 1):
        b[k] = -_zeta_int(k) / k
    return PowerSeries(series_exp(b))


def _riemann_asym(depth: int, psi: float) -> AsymExpansion:
    d = {(0, 1): 1.0 + 0.0j,
         (0, 0): -(1j * math.pi + 1.0),
         (1, 1): -0.5 + 0.0j,
         (1, 0): complex(-0.5 * math.log(2.0 * math.pi), 0.5 * math.pi)}
    for j in range(2, depth + 1):
        bj = bernoulli_number(j)
        if bj != 0.0:
            d[(j, 0)] = bj / (j * (j - 1.0))
    return AsymExpansion(alpha=1.0, m=1, M=1, N=depth, d=d, psi=psi, ln_f0=0.0)


def riemann_model(order: int = 30, depth: int = 14) -> CatalogModel:
    """Model for the sequence of positive integers."""
    series = _riemann_series(order)
    asym = _riemann_asym(depth, RIEMANN_PSI)

    def log_deriv(z):
        z = np.asarray(z, dtype=complex)
        return np.vectorize(lambda w: digamma_polygamma(0, 1.0 - w))(z)

    def eval_fn(z):
        return _recip_gamma_pair(1.0, z)

    zeros = ZeroSequence(
        alpha=1.0, n_exact=0,
        exact_fn=lambda n: float(n), asym_fn=lambda n: float(n),
        tail_fn=lambda x: (x, 1.0, 0.0, 0.0))
    forms = {0: "-1/2", -1: "-1/12"}
    return CatalogModel("riemann", {}, series, asym, zeros, eval_fn,
                        log_deriv, 1.0, forms)


def _hurwitz_series(a: complex, order: int) -> PowerSeries:
    b = np.zeros(order + 1, dtype=complex)
    for n in range(1, order + 1):
        b[n] = (-1.0) ** (n - 1) * digamma_polygamma(n - 1, a) / math.factorial(n)
    return PowerSeries(series_exp(b) / gamma(a))


def ln_gamma_continued(a: complex) -> complex:
    """ln Gamma(a) on the branch reached through the cut sector.

    Principal for Re(a) > 0 or non-real a; for real negative non-integer a
    the continuation picks up -i*pi*floor(a).
    """
    a = complex(a)
    if a.imag == 0.0 and a.real < 0.0:
        if a.real == math.floor(a.real):
            raise DomainError("log Gamma pole at nonpositive integer")
        return complex(math.log(abs(gamma(a))), -math.pi * math.floor(a.real))
    return cmath.log(gamma(a))


def hurwitz_model(a, order: int = 30, depth: int = 14) -> CatalogModel:
    """Model for the shifted-integer sequence {n + a}, n >= 0."""
    a = complex(a)
    if a.imag == 0.0 and a.real <= 0.0 and a.real == math.floor(a.real):
        raise DomainError("parameter a must avoid the nonpositive integers")
    if a.imag == 0.0:
        a = complex(a.real, 0.0)
    from .shift import ShiftParams, omega_table

    base = _riemann_asym(depth, RIEMANN_PSI)
    ln_f_shift = -ln_gamma_continued(a)
    asym = omega_table(base, ShiftParams(1.0, a - 1.0), new_psi=RIEMANN_PSI,
                       ln_f_shifted=ln_f_shift)
    series = _hurwitz_series(a, order)

    def log_deriv(z):
        z = np.asarray(z, dtype=complex)
        return np.vectorize(lambda w: digamma_polygamma(0, a - w))(z)

    def eval_fn(z):
        return _recip_gamma_pair(a, z)

    def exact_fn(n):
        return a + (n - 1)

    moduli = sorted(abs(a + k) for k in range(0, 64))
    zeros = ZeroSequence(
        alpha=1.0, n_exact=0, exact_fn=exact_fn, asym_fn=exact_fn,
        tail_fn=lambda x: (x - 1.0 + a, 1.0, 0.0, 0.0))
    notes = ()
    if a.imag == 0.0 and a.real < 0.0:
        notes = (f"sequence has {-math.floor(a.real):.0f} negative elements", )
    return CatalogModel("hurwitz", {"a": a}, series, asym, zeros, eval_fn,
                        log_deriv, moduli[0], {0: "1/2 - a"}, notes)


# ---------------------------------------------------------------------------
# Airy

_AIRY_NC = 241


def _airy_taylor_coeffs() -> np.ndarray:
    c = np.zeros(_AIRY_NC, dtype=float)
    for k in range(_AIRY_NC // 3 + 1):
        if 3 * k < _AIRY_NC:
            c[3 * k] = ((-1.0) ** k * 3.0 ** (-2 * k - 2.0 / 3.0)
                        / (math.factorial(k) * math.gamma(k + 2.0 / 3.0)))
        if 3 * k + 1 < _AIRY_NC:
            c[3 * k + 1] = ((-1.0) ** k * 3.0 ** (-2 * k - 4.0 / 3.0)
                            / (math.factorial(k) * math.gamma(k + 4.0 / 3.0)))
    return c


_AIRY_C = _airy_taylor_coeffs()

_AIRY_NU = 72
_AIRY_U = [1.0]
_AIRY_V = [1.0]
for _k in range(1, _AIRY_NU):
    _AIRY_U.append(_AIRY_U[-1] * (6 * _k - 5) * (6 * _k - 3) * (6 * _k - 1)
                   / (216.0 * _k * (2 * _k - 1)))
    _AIRY_V.append(_AIRY_U[-1] * (6 * _k + 1) / (1.0 - 6 * _k))


def _airy_taylor_pair(z: complex):
    """(Ai(-z), d/dz Ai(-z)) by compensated Taylor summation, |z| <~ 28."""
    f = 0.0 + 0.0j
    fc = 0.0 + 0.0j
    fp = 0.0 + 0.0j
    fpc = 0.0 + 0.0j
    p = 1.0 + 0.0j
    az = abs(z)
    peak = 1.0
    small_run = 0
    for j in range(_AIRY_NC):
        term = _AIRY_C[j] * p
        peak = max(peak, abs(term))
        # c_{3k+2} = 0: demand several consecutive negligible terms to stop
        small_run = small_run + 1 if abs(term) < 1e-19 * peak else 0
        t = f + term
        if abs(f) >= abs(term):
            fc += (f - t) + term
        else:
            fc += (term - t) + f
        f = t
        if j >= 1:
            termp = j * _AIRY_C[j] * pprev
            tp = fp + termp
            if abs(fp) >= abs(termp):
                fpc += (fp - tp) + termp
            else:
                fpc += (termp - tp) + fp
            fp = tp
        pprev = p
        p *= z
        if j > 1.5 * az + 8 and small_run >= 3:
            break
    return f + fc, fp + fpc


def _poincare(coeffs, iz: complex) -> complex:
    tot = 0.0 + 0.0j
    p = 1.0 + 0.0j
    last = math.inf
    for cm in coeffs:
        term = cm * p
        a = abs(term)
        if a > last:
            break
        tot += term
        last = a
        p *= iz
    return tot


def _airy_asym_pair(z: complex):
    """(Ai(-z), d/dz Ai(-z)) via the two-exponential expansion.

    Valid for |arg z| <= 1.9; overflows (as the function itself does) once
    |Im zeta| is past ~700.
    """
    zeta = (2.0 / 3.0) * z ** 1.5
    w = zeta - math.pi / 4.0
    sq = 0.5 / math.sqrt(math.pi)
    zm = z ** -0.25
    zp = z ** 0.25
    ai = 0.0 + 0.0j
    aip = 0.0 + 0.0j
    if zeta.imag > -700.0:
        em = cmath.exp(1j * w)
        sm = _poincare(_AIRY_U, -1j / zeta)
        tm = _poincare(_AIRY_V, -1j / zeta)
        ai += sq * zm * em * sm
        aip += -1j * sq * zp * em * tm
    if zeta.imag < 700.0:
        ep = cmath.exp(-1j * w)
        sp = _poincare(_AIRY_U, 1j / zeta)
        tp = _poincare(_AIRY_V, 1j / zeta)
        ai += sq * zm * ep * sp
        aip += 1j * sq * zp * ep * tp
    # F(z) = Ai(-z) so F' = -Ai'(-z) = -aip with aip built as Ai'(-z)
    return ai, -aip


def _airy_switch_radius(z: complex) -> float:
    return 6.5 if abs(cmath.phase(z)) <= 0.25 else 11.0


def airy_eval(z):
    """(F, F') for F(z) = Ai(-z); domain |arg z| <= 1.9 or |z| <= 11."""
    z = complex(z)
    if abs(z) <= _airy_switch_radius(z):
        return _airy_taylor_pair(z)
    return _airy_asym_pair(z)


def _airy_log_deriv_scalar(z: complex) -> complex:
    z = complex(z)
    if abs(z) <= _airy_switch_radius(z):
        f, fp = _airy_taylor_pair(z)
        return fp / f
    zeta = (2.0 / 3.0) * z ** 1.5
    sm = _poincare(_AIRY_U, -1j / zeta)
    tm = _poincare(_AIRY_V, -1j / zeta)
    sp = _poincare(_AIRY_U, 1j / zeta)
    tp = _poincare(_AIRY_V, 1j / zeta)
    if zeta.imag >= 0.0:
        r = cmath.exp(2j * (zeta - math.pi / 4.0)) if zeta.imag < 600.0 else 0.0
        num = tp - r * tm
        den = sp + r * sm
    else:
        r = cmath.exp(-2j * (zeta - math.pi / 4.0)) if zeta.imag > -600.0 else 0.0
        num = -tm + r * tp
        den = sm + r * sp
    return -1j * cmath.sqrt(z) * num / den


def airy_log_deriv(z):
    z = np.asarray(z, dtype=complex)
    return np.vectorize(_airy_log_deriv_scalar)(z)


def airy_zero_seed(n: int) -> float:
    """Asymptotic n-th zero of Ai(-x), inverse expansion with one correction."""
    t = 3.0 * math.pi * (4 * n - 1) / 8.0
    return t ** (2.0 / 3.0) * (1.0 + 5.0 / (48.0 * t * t))


def _airy_zero_refine(n: int) -> float:
    x = airy_zero_seed(n)
    for _ in range(50):
        f, fp = airy_eval(x)
        step = (f / fp).real
        x -= step
        if abs(step) < 1e-14 * max(1.0, abs(x)):
            f, fp = airy_eval(x)
            if abs(f) <= 1e-12 * max(1.0, abs(fp)):
                return x
    raise RefinementError(f"Newton refinement stalled for Airy zero #{n}")


def _airy_tail_fn(x):
    u = 3.0 * math.pi * (4.0 * x - 1.0) / 8.0
    du = 1.5 * math.pi
    g = u ** (2.0 / 3.0) + (5.0 / 48.0) * u ** (-4.0 / 3.0)
    g1 = (2.0 / 3.0) * u ** (-1.0 / 3.0) - (5.0 / 36.0) * u ** (-7.0 / 3.0)
    g2 = -(2.0 / 9.0) * u ** (-4.0 / 3.0) + (35.0 / 108.0) * u ** (-10.0 / 3.0)
    g3 = (8.0 / 27.0) * u ** (-7.0 / 3.0) - (350.0 / 324.0) * u ** (-13.0 / 3.0)
    return g, g1 * du, g2 * du * du, g3 * du ** 3


def airy_zeros(count: int, n_exact: int = 60) -> ZeroSequence:
    """First ``count`` negated Airy zeros: Newton-refined head, formula tail."""
    if count < n_exact:
        raise DomainError("count must be >= n_exact")
    return ZeroSequence(alpha=1.5, n_exact=n_exact,
                        exact_fn=_airy_zero_refine, asym_fn=airy_zero_seed,
                        tail_fn=_airy_tail_fn)


def airy_model(depth: int = 8, order: int = 30, n_exact: int = 60) -> CatalogModel:
    """Model for the negated zeros of the Airy function, F(z) = Ai(-z)."""
    if depth > 13:
        raise DomainError("airy depth supported up to 13")
    series = PowerSeries(_AIRY_C[:order + 1].astype(complex))
    c_tail = [
        (-1.5j) ** k * complex(gamma(k + 1.0 / 6.0)) * complex(gamma(k + 5.0 / 6.0))
        / (2.0 * math.pi * (-2.0) ** k * math.factorial(k))
        for k in range(1, depth + 1)
    ]
    p = log_compose(c_tail)
    d = {(0, 0): -2j / 3.0,
         (3, 1): -0.25 + 0.0j,
         (3, 0): complex(-math.log(2.0 * math.sqrt(math.pi)), 0.25 * math.pi)}
    for nn in range(1, depth + 1):
        d[(3 * nn + 3, 0)] = complex(p[nn])
    c0 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
    asym = AsymExpansion(alpha=1.5, m=2, M=1, N=3 * depth + 3, d=d,
                         psi=AIRY_PSI, ln_f0=math.log(c0))
    forms = {
        1: "-3^(1/3) G(2/3)/G(1/3)",
        2: "3^(2/3) G(2/3)^2/G(1/3)^2",
        3: "1/2 - 3 G(2/3)^3/G(1/3)^3",
        4: "3^(4/3) G(2/3)^4/G(1/3)^4 - G(2/3)/(3^(2/3) G(1/3))",
        5: "-3^(5/3) G(2/3)^5/G(1/3)^5 + (5/4) G(2/3)^2/(3^(1/3) G(1/3)^2)",
        0: "-1/4", -3: "15/64",
    }
    return CatalogModel("airy", {"depth": depth}, series, asym,
                        airy_zeros(10 ** 6, n_exact), airy_eval,
                        airy_log_deriv, 2.33810741045976, forms)


# ---------------------------------------------------------------------------
# Parabolic cylinder U(a, z)

def _pcf_series_coeffs(a: float, order: int) -> np.ndarray:
    pref = 2.0 ** ((2.0 * a - 3.0) / 4.0) / math.gamma(a + 0.5)
    c = np.zeros(order + 1, dtype=complex)
    for j in range(order // 2 + 1):
        if 2 * j <= order:
            acc = 0.0
            for l in range(j + 1):
                acc += ((-1.0) ** (j - l) * 2.0 ** l
                        / (4.0 ** (j - l) * math.factorial(2 * l)
                           * math.factorial(j - l))) * math.gamma(l + (2 * a + 1) / 4.0)
            c[2 * j] = pref * acc
        if 2 * j + 1 <= order:
            acc = 0.0
            for l in range(j + 1):
                acc += ((-1.0) ** (j - l) * 2.0 ** (l + 0.5)
                        / (4.0 ** (j - l) * math.factorial(2 * l + 1)
                           * math.factorial(j - l))) * math.gamma(l + (2 * a + 3) / 4.0)
            c[2 * j + 1] = -pref * acc
    return c


def _pcf_tail_coeffs(a: float, depth: int) -> list:
    return [(-1.0) ** n * math.gamma(2 * n + a + 0.5)
            / (2.0 ** n * math.factorial(n) * math.gamma(a + 0.5))
            for n in range(1, depth + 1)]


def pcf_model(a: float, depth: int = 6, order: int = 30) -> CatalogModel:
    """Model for the zeros of the parabolic cylinder function U(a, z), a > -1/2.

    The zeros are complex-conjugate pairs; no zero generator is provided and
    the model supports coefficient-side values only.  Pointwise evaluation
    uses the Taylor series for |z| <= 3, the (cancellation-free) Laplace
    integral for moderate |z|, and the large-argument expansion beyond.
    """
    a = float(a)
    if a <= -0.5:
        raise DomainError("pcf model requires a > -1/2")
    full = _pcf_series_coeffs(a, max(order, 100))
    series = PowerSeries(full[:order + 1])
    h = log_compose(_pcf_tail_coeffs(a, depth))
    d = {(0, 0): -0.25 + 0.0j, (2, 1): complex(-a - 0.5)}
    for nn in range(1, depth + 1):
        d[(2 * nn + 2, 0)] = complex(h[nn])
    c0 = complex(full[0])
    asym = AsymExpansion(alpha=2.0, m=1, M=1, N=2 * depth + 2, d=d,
                         psi=0.0, ln_f0=cmath.log(c0))
    tail = _pcf_tail_coeffs(a, depth + 10)
    dfull = full[1:] * np.arange(1, len(full))

    def taylor_pair(z):
        return (complex(np.polyval(full[::-1], z)),
                complex(np.polyval(dfull[::-1], z)))

    def laplace_pair(z):
        # U = e^{-z^2/4}/Gamma(a+1/2) * I_0,  I_p = int t^{a-1/2+p} e^{-t^2/2-zt} dt
        # with t = u^2 so the endpoint power is smooth for a >= 0
        x0 = max(0.0, -z.real)
        t_up = x0 + math.sqrt(x0 * x0 + 130.0)
        u_up = math.sqrt(t_up)

        def integrand(u, p):
            u = np.asarray(u, dtype=float)
            t = u * u
            return 2.0 * u ** (2.0 * a + 2 * p) * np.exp(-0.5 * t * t - z * t)

        i0 = quad_adaptive(lambda u: integrand(u, 0), 0.0, u_up, abs_tol=1e-13)
        i1 = quad_adaptive(lambda u: integrand(u, 1), 0.0, u_up, abs_tol=1e-13)
        pref = cmath.exp(-z * z / 4.0) / gamma(a + 0.5)
        f = pref * i0
        fp = -0.5 * z * f - pref * i1
        return f, fp

    def asym_pair(z):
        den = 1.0 + 0.0j
        num = 0.0 + 0.0j
        p = 1.0 + 0.0j
        last = math.inf
        for n, cn in enumerate(tail, start=1):
            p /= z * z
            term = cn * p
            if abs(term) > last:
                break
            den += term
            num += -2.0 * n * term / z
            last = abs(term)
        f = cmath.exp(-z * z / 4.0) * z ** (-a - 0.5) * den
        ld = -0.5 * z - (a + 0.5) / z + num / den
        return f, f * ld

    def eval_fn(z):
        z = complex(z)
        az = abs(z)
        if az <= 3.0:
            return taylor_pair(z)
        if az < 12.0:
            return laplace_pair(z)
        if abs(cmath.phase(z)) >= 2.3:
            raise DomainError("pcf evaluator domain is |arg z| < 3pi/4 for |z| >= 12")
        return asym_pair(z)

    def log_deriv_scalar(z):
        z = complex(z)
        az = abs(z)
        if az <= 3.0:
            f, fp = taylor_pair(z)
            return fp / f
        if az < 12.0:
            f, fp = laplace_pair(z)
            return fp / f
        den = 1.0 + 0.0j
        num = 0.0 + 0.0j
        p = 1.0 + 0.0j
        last = math.inf
        for n, cn in enumerate(tail, start=1):
            p /= z * z
            term = cn * p
            if abs(term) > last:
                break
            den += term
            num += -2.0 * n * term / z
            last = abs(term)
        return -0.5 * z - (a + 0.5) / z + num / den

    def log_deriv(z):
        return np.vectorize(log_deriv_scalar)(np.asarray(z, dtype=complex))

    return CatalogModel("pcf", {"a": a}, series, asym, None, eval_fn,
                        log_deriv, None, {0: "-a - 1/2"},
                        ("zeros are complex-conjugate pairs; zero generator not provided",))


# ---------------------------------------------------------------------------
# Confluent hypergeometric M(a, b, z)

def _is_nonpos_int(w: complex) -> bool:
    return w.imag == 0.0 and w.real <= 0.0 and w.real == math.floor(w.real)


def _kummer_series(a: complex, b: complex, z: complex, n_max: int):
    """(M(a,b,z), dM/dz) by direct summation with recursive term updates.

    The explicit c_n z^n form would overflow near |z| ~ 200 even though the
    terms themselves stay bounded by the series peak.
    """
    if z == 0:
        return 1.0 + 0.0j, a / b
    f0 = 1.0 + 0.0j
    f1 = 0.0 + 0.0j
    term = 1.0 + 0.0j
    peak = 1.0
    small_run = 0
    for n in range(n_max):
        term *= z * (a + n) / ((b + n) * (n + 1.0))
        f0 += term
        f1 += (n + 1.0) * term / z
        peak = max(peak, abs(term))
        small_run = small_run + 1 if abs(term) < 1e-18 * peak else 0
        if small_run >= 3 and n > 1.2 * abs(z):
            break
    return f0, f1


def chf_model(a, b, depth: int = 8, order: int = 30) -> CatalogModel:
    """Model for the zeros of M(a, b, z); a, b, b-a not nonpositive integers.

    The boundary log value ln F(0) is fixed to the principal choice 0; the
    continued value is only determined up to 2*pi*i*k and the chosen branch
    is recorded in the model notes.
    """
    a = complex(a)
    b = complex(b)
    if a.imag == 0:
        a = complex(a.real, 0.0)
    if b.imag == 0:
        b = complex(b.real, 0.0)
    for w, nm in ((a, "a"), (b, "b"), (b - a, "b-a")):
        if _is_nonpos_int(w):
            raise DomainError(f"excluded parameter: {nm} is a nonpositive integer")
    n_eval = max(order, 400)
    c = np.zeros(n_eval + 1, dtype=complex)
    c[0] = 1.0
    for n in range(n_eval):
        c[n + 1] = c[n] * (a + n) / ((b + n) * (n + 1.0))
    series = PowerSeries(c[:order + 1])
    c_tail = []
    t = 1.0 + 0.0j
    for n in range(1, depth + 1):
        t *= (1.0 - a + (n - 1.0)) * (b - a + (n - 1.0)) / n
        c_tail.append(t)
    f = log_compose(c_tail)
    d = {(0, 0): 1.0 + 0.0j, (1, 1): a - b,
         (1, 0): cmath.log(gamma(b) / gamma(a))}
    for nn in range(1, depth + 1):
        d[(nn + 1, 0)] = complex(f[nn])
    asym = AsymExpansion(alpha=1.0, m=1, M=1, N=depth + 1, d=d,
                         psi=0.0, ln_f0=0.0)

    def eval_fn(z):
        # accurate near the real axis (Kummer transform handles Re z < 0);
        # imaginary-direction cancellation grows like e^{|Im z|}
        z = complex(z)
        if abs(z) > 250.0:
            raise DomainError("chf evaluator domain is |z| <= 250")
        if z.real < 0.0:
            ez = cmath.exp(z)
            g0, g1 = _kummer_series(b - a, b, -z, n_eval)
            return ez * g0, ez * (g0 - g1)
        return _kummer_series(a, b, z, n_eval)

    def log_deriv(z):
        def scalar(w):
            v, vp = eval_fn(w)
            return vp / v
        return np.vectorize(scalar)(np.asarray(z, dtype=complex))

    notes = ("ln F(0) fixed to the k = 0 branch (continued value is 2*pi*i*k)",
             "branch ray psi = 0; no computed zeros to check ray clearance against")
    return CatalogModel("chf", {"a": a, "b": b}, series, asym, None, eval_fn,
                        log_deriv, None, {0: "a - b", 1: "1 - a/b"}, notes)


# ---------------------------------------------------------------------------

def model_from_spec(spec) -> CatalogModel:
    """Build a model from a name+parameter JSON document (or dict)."""
    if isinstance(spec, str):
        spec = json.loads(spec)
    name = spec.get("model")
    if name == "riemann":
        return riemann_model()
    if name == "hurwitz":
        return hurwitz_model(spec["a"])
    if name == "airy":
        return airy_model(depth=int(spec.get("depth", 8)))
    if name == "pcf":
        return pcf_model(spec["a"])
    if name == "chf":
        return chf_model(spec["a"], spec["b"])
    if name == "user":
        series = PowerSeries(np.asarray(
            [complex(e["re"], e.get("im", 0.0)) for e in spec["series"]["coeffs"]]))
        asym = AsymExpansion.from_json(spec["asym"])
        return CatalogModel("user", {}, series, asym)
    raise DomainError(f"unknown model name: {name!r}")
