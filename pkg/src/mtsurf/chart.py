"""Stereographic chart of the unit sphere.

The chart maps the plane w = u + iv to S^2 with w = 0 at the north pole,

    nu = (2u, 2v, 1 - r^2) / (1 + r^2),      r^2 = u^2 + v^2,

so the round metric becomes e^sigma |dw|^2 with e^sigma = 4/(1+r^2)^2.
A geodesic cap of radius theta0 about the north pole is the disk
|w| <= tan(theta0/2).  All functions broadcast over numpy arrays.
"""

import numpy as np

__all__ = [
    "stereo_to_sphere",
    "sphere_to_stereo",
    "conformal_factor",
    "sigma_w",
    "nu_partials",
]


def stereo_to_sphere(u, v):
    """Map chart coordinates (u, v) to unit vectors on S^2.

    Returns an array with a trailing axis of length 3.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    r2 = u * u + v * v
    den = 1.0 + r2
    return np.stack([2.0 * u / den, 2.0 * v / den, (1.0 - r2) / den], axis=-1)


def sphere_to_stereo(nu):
    """Invert the chart: unit vector(s) on S^2 to (u, v).

    Undefined at the south pole (0, 0, -1) where the chart blows up.
    """
    nu = np.asarray(nu, dtype=float)
    den = 1.0 + nu[..., 2]
    return nu[..., 0] / den, nu[..., 1] / den


def conformal_factor(u, v):
    """e^sigma = 4/(1+r^2)^2, the conformal factor of the round metric."""
    r2 = np.asarray(u, dtype=float) ** 2 + np.asarray(v, dtype=float) ** 2
    return 4.0 / (1.0 + r2) ** 2


def sigma_w(u, v):
    """Wirtinger derivative sigma_w = -2 conj(w) / (1 + |w|^2)."""
    w = np.asarray(u, dtype=float) + 1j * np.asarray(v, dtype=float)
    return -2.0 * np.conj(w) / (1.0 + (w * np.conj(w)).real)


def nu_partials(u, v):
    """Chart partials (d nu/du, d nu/dv) of the sphere map, exact.

    Returns two arrays shaped like stereo_to_sphere(u, v).  Each is a
    tangent vector of squared length e^sigma; the pair is orthogonal.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    den2 = (1.0 + u * u + v * v) ** 2
    nu_u = np.stack(
        [2.0 * (1.0 + v * v - u * u), -4.0 * u * v, -4.0 * u], axis=-1
    ) / den2[..., None]
    nu_v = np.stack(
        [-4.0 * u * v, 2.0 * (1.0 + u * u - v * v), -4.0 * v], axis=-1
    ) / den2[..., None]
    return nu_u, nu_v
