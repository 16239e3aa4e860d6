"""Adaptive complex quadrature and Euler-Maclaurin tail estimation.

The integrator is a Gauss-Kronrod 7/15 pair with interval bisection driven
by the embedded error estimate.  Integrands receive a numpy array of nodes
and must return an array of complex values; segments are accumulated in
deterministic (left-to-right) order so results are bit-stable.
"""

import heapq

import numpy as np

from .errors import AccuracyError, DivergenceError
from .kernels import fsum_complex

# Kronrod-15 nodes on [-1, 1] and weights; Gauss-7 weights sit on the
# odd-indexed nodes.
_XK = np.array([
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
_WK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082,
])


def _gk15(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    x = mid + half * _XK
    y = np.asarray(f(x), dtype=complex)
    if not np.all(np.isfinite(y)):
        raise DivergenceError(f"non-finite integrand on [{a}, {b}]")
    k = half * np.sum(_WK * y)
    g = half * np.sum(_WG * y[1::2])
    return complex(k), abs(k - g)


def quad_adaptive(f, a: float, b: float, abs_tol: float = 1e-12,
                  max_segments: int = 4096, initial_points=None) -> complex:
    """Integrate a complex-valued f over [a, b] to an absolute tolerance.

    ``initial_points`` may pre-split the interval (useful for integrands
    with known phase structure).
    """
    if a == b:
        return 0.0 + 0.0j
    pts = [a, b] if initial_points is None else sorted(
        {a, b, *(p for p in initial_points if a < p < b)})
    heap = []
    segments = {}
    counter = 0
    for lo, hi in zip(pts[:-1], pts[1:]):
        val, err = _gk15(f, lo, hi)
        segments[counter] = (lo, hi, val, err)
        heapq.heappush(heap, (-err, counter))
        counter += 1
    while True:
        total_err = sum(s[3] for s in segments.values())
        if total_err <= abs_tol or len(segments) >= max_segments:
            break
        _, idx = heapq.heappop(heap)
        if idx not in segments:
            continue
        lo, hi, _, err = segments.pop(idx)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            # interval at roundoff resolution; keep as-is
            segments[idx] = (lo, hi, _, err)
            break
        for (l2, h2) in ((lo, mid), (mid, hi)):
            val2, err2 = _gk15(f, l2, h2)
            segments[counter] = (l2, h2, val2, err2)
            heapq.heappush(heap, (-err2, counter))
            counter += 1
    total_err = sum(s[3] for s in segments.values())
    if total_err > 100.0 * abs_tol:
        raise AccuracyError(
            f"quadrature error estimate {total_err:.2e} exceeds tolerance {abs_tol:.2e}")
    ordered = sorted(segments.values(), key=lambda s: s[0])
    return fsum_complex(s[2] for s in ordered)


def quad_to_inf(f, a: float, abs_tol: float = 1e-12) -> complex:
    """Integrate f over [a, infinity) by mapping t = a/u onto (0, 1]."""
    if a <= 0:
        raise ValueError("quad_to_inf requires a > 0")

    def mapped(u):
        u = np.asarray(u)
        with np.errstate(over="ignore", invalid="ignore"):
            t = a / u
            return np.asarray(f(t), dtype=complex) * a / (u * u)

    # avoid evaluating exactly at u = 0
    return quad_adaptive(mapped, 1e-300, 1.0, abs_tol=abs_tol)


def euler_maclaurin_tail(f, fp, fppp, n_start: int,
                         quad_tol: float = 1e-14) -> complex:
    """Tail sum over integer arguments n >= n_start.

    Evaluates integral + f(N)/2 - f'(N)/12 + f'''(N)/720, the
    Euler-Maclaurin estimate through the second correction term.
    Requires f smooth and absolutely integrable on [n_start, infinity).
    """
    n = float(n_start)
    f_n = complex(f(np.array([n]))[0])
    if f_n == 0 and complex(fp(n)) == 0:
        # cheap exit for identically-small tails
        probe = complex(f(np.array([n + 1.0]))[0])
        if probe == 0:
            return 0.0 + 0.0j
    try:
        integral = quad_to_inf(f, n, abs_tol=quad_tol)
    except AccuracyError as exc:
        raise DivergenceError(
            f"tail integral from {n_start} did not converge: {exc}") from exc
    return integral + f_n / 2.0 - complex(fp(n)) / 12.0 + complex(fppp(n)) / 720.0
