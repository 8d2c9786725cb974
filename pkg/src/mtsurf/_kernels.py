"""Numerical kernels, numba-compiled when available.

The hot inner loops (adaptive ODE shooting for the Legendre oracle,
Bessel series, per-node Hessian assembly) carry @njit.  Setting the
environment variable MTSURF_PURE_NUMPY=1 selects the pure
numpy/Python fallback path instead; the fallback is also taken
automatically when numba is not importable.  benchmarks/bench_kernels.py
compares the two paths.
"""

import os

import numpy as np

USE_NUMBA = not os.environ.get("MTSURF_PURE_NUMPY")
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if not USE_NUMBA:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


# ----------------------------------------------------------------------
# covariant Hessian assembly (relative to the sphere metric)

def _hessian_rel_numpy(u, v, fu, fv, fuu, fuv, fvv):
    T = 1.0 + u * u + v * v
    su = -4.0 * u / T
    sv = -4.0 * v / T
    huu = fuu - 0.5 * su * fu + 0.5 * sv * fv
    huv = fuv - 0.5 * sv * fu - 0.5 * su * fv
    hvv = fvv + 0.5 * su * fu - 0.5 * sv * fv
    inv_es = T * T / 4.0
    a = huu * inv_es
    b = huv * inv_es
    d = hvv * inv_es
    mid = 0.5 * (a + d)
    disc = np.sqrt(0.25 * (a - d) ** 2 + b * b)
    return a, b, d, mid + disc, mid - disc


@njit(cache=True)
def _hessian_rel_loop(u, v, fu, fv, fuu, fuv, fvv):  # pragma: no cover - numba path
    n = u.shape[0]
    a = np.empty(n)
    b = np.empty(n)
    d = np.empty(n)
    s1 = np.empty(n)
    s2 = np.empty(n)
    for i in range(n):
        T = 1.0 + u[i] * u[i] + v[i] * v[i]
        su = -4.0 * u[i] / T
        sv = -4.0 * v[i] / T
        huu = fuu[i] - 0.5 * su * fu[i] + 0.5 * sv * fv[i]
        huv = fuv[i] - 0.5 * sv * fu[i] - 0.5 * su * fv[i]
        hvv = fvv[i] + 0.5 * su * fu[i] - 0.5 * sv * fv[i]
        inv_es = T * T / 4.0
        ai = huu * inv_es
        bi = huv * inv_es
        di = hvv * inv_es
        mid = 0.5 * (ai + di)
        disc = np.sqrt(0.25 * (ai - di) ** 2 + bi * bi)
        a[i] = ai
        b[i] = bi
        d[i] = di
        s1[i] = mid + disc
        s2[i] = mid - disc
    return a, b, d, s1, s2


def hessian_rel(u, v, fu, fv, fuu, fuv, fvv):
    """Chart Christoffel correction + eigenvalues, flattened inputs.

    Returns (a, b, d, sig1, sig2): the covariant Hessian relative to
    the sphere metric as a symmetric matrix [[a, b], [b, d]] and its
    eigenvalues sig1 >= sig2.
    """
    if USE_NUMBA:
        shape = u.shape
        flat = [np.ascontiguousarray(w.ravel(), dtype=np.float64)
                for w in (u, v, fu, fv, fuu, fuv, fvv)]
        return tuple(w.reshape(shape) for w in _hessian_rel_loop(*flat))
    return _hessian_rel_numpy(u, v, fu, fv, fuu, fuv, fvv)


# ----------------------------------------------------------------------
# Bessel J1 by power series (oracle-grade, independent of scipy)

def _j1_series_impl(x):
    half = 0.5 * x
    term = half
    total = half
    for k in range(1, 60):
        term *= -(half * half) / (k * (k + 1.0))
        total += term
        if abs(term) < 1e-18 * (1.0 + abs(total)):
            break
    return total


# ----------------------------------------------------------------------
# Legendre ODE shooting: u'' + cot(theta) u' + beta u = 0, regular at 0.
# Cash-Karp embedded RK45 with adaptive steps.

def _legendre_shoot_impl(beta, theta0, rtol):
    # series start: u = 1 - beta t^2/4 + b4 t^4, b4 = beta^2/64 - beta/96
    ts = 1e-3
    if ts > 0.5 * theta0:
        ts = 0.5 * theta0
    b4 = beta * beta / 64.0 - beta / 96.0
    u = 1.0 - beta * ts * ts / 4.0 + b4 * ts**4
    du = -beta * ts / 2.0 + 4.0 * b4 * ts**3
    t = ts
    h = min(1e-2, (theta0 - ts) * 0.1)

    a2, a3, a4, a5, a6 = 0.2, 0.3, 0.6, 1.0, 0.875
    while t < theta0:
        if t + h > theta0:
            h = theta0 - t
        # Cash-Karp stages for y' = f(t, y), y = (u, du)
        k1u = du
        k1v = -du / np.tan(t) - beta * u

        tu = u + h * 0.2 * k1u
        tv = du + h * 0.2 * k1v
        k2u = tv
        k2v = -tv / np.tan(t + a2 * h) - beta * tu

        tu = u + h * (3.0 / 40.0 * k1u + 9.0 / 40.0 * k2u)
        tv = du + h * (3.0 / 40.0 * k1v + 9.0 / 40.0 * k2v)
        k3u = tv
        k3v = -tv / np.tan(t + a3 * h) - beta * tu

        tu = u + h * (0.3 * k1u - 0.9 * k2u + 1.2 * k3u)
        tv = du + h * (0.3 * k1v - 0.9 * k2v + 1.2 * k3v)
        k4u = tv
        k4v = -tv / np.tan(t + a4 * h) - beta * tu

        tu = u + h * (-11.0 / 54.0 * k1u + 2.5 * k2u - 70.0 / 27.0 * k3u
                      + 35.0 / 27.0 * k4u)
        tv = du + h * (-11.0 / 54.0 * k1v + 2.5 * k2v - 70.0 / 27.0 * k3v
                       + 35.0 / 27.0 * k4v)
        k5u = tv
        k5v = -tv / np.tan(t + a5 * h) - beta * tu

        tu = u + h * (1631.0 / 55296.0 * k1u + 175.0 / 512.0 * k2u
                      + 575.0 / 13824.0 * k3u + 44275.0 / 110592.0 * k4u
                      + 253.0 / 4096.0 * k5u)
        tv = du + h * (1631.0 / 55296.0 * k1v + 175.0 / 512.0 * k2v
                       + 575.0 / 13824.0 * k3v + 44275.0 / 110592.0 * k4v
                       + 253.0 / 4096.0 * k5v)
        k6u = tv
        k6v = -tv / np.tan(t + a6 * h) - beta * tu

        u5 = u + h * (37.0 / 378.0 * k1u + 250.0 / 621.0 * k3u
                      + 125.0 / 594.0 * k4u + 512.0 / 1771.0 * k6u)
        v5 = du + h * (37.0 / 378.0 * k1v + 250.0 / 621.0 * k3v
                       + 125.0 / 594.0 * k4v + 512.0 / 1771.0 * k6v)
        u4 = u + h * (2825.0 / 27648.0 * k1u + 18575.0 / 48384.0 * k3u
                      + 13525.0 / 55296.0 * k4u + 277.0 / 14336.0 * k5u
                      + 0.25 * k6u)
        v4 = du + h * (2825.0 / 27648.0 * k1v + 18575.0 / 48384.0 * k3v
                       + 13525.0 / 55296.0 * k4v + 277.0 / 14336.0 * k5v
                       + 0.25 * k6v)

        scale_u = rtol * (1.0 + abs(u5))
        scale_v = rtol * (1.0 + abs(v5))
        err = max(abs(u5 - u4) / scale_u, abs(v5 - v4) / scale_v)
        if err <= 1.0:
            t += h
            u, du = u5, v5
        fac = 0.9 * err ** -0.2 if err > 1e-12 else 5.0
        if fac < 0.2:
            fac = 0.2
        elif fac > 5.0:
            fac = 5.0
        h *= fac
        if h < 1e-14:
            break
    return u, du


if USE_NUMBA:
    j1_series = njit(cache=True)(_j1_series_impl)
    legendre_shoot = njit(cache=True)(_legendre_shoot_impl)
else:
    j1_series = _j1_series_impl
    legendre_shoot = _legendre_shoot_impl
