"""Spherical-cap domains and their quadrature grids.

A cap of geodesic radius theta0 about the north pole maps to the
stereographic disk of radius R = tan(theta0/2).  The grid is a polar
tensor product: Gauss-Legendre radial nodes (in x = 2(r/R)^2 - 1, so
no node sits on the coordinate singularity r = 0) times uniform
angles.  Bulk weights carry the conformal factor e^sigma; boundary
weights carry e^(sigma/2).
"""

from dataclasses import dataclass, field

import numpy as np

from .chart import conformal_factor, nu_partials, stereo_to_sphere
from .spectral import DiskTransform

__all__ = ["CapDomain", "Grid", "build_grid"]


@dataclass(frozen=True)
class CapDomain:
    """Geodesic cap 0 < theta0 < pi centered at the north pole."""

    theta0: float

    def __post_init__(self):
        if not (0.0 < self.theta0 < np.pi):
            raise ValueError(f"theta0 must lie in (0, pi), got {self.theta0}")

    @property
    def stereo_radius(self):
        return float(np.tan(self.theta0 / 2.0))

    @property
    def area(self):
        return 2.0 * np.pi * (1.0 - np.cos(self.theta0))

    @property
    def boundary_length(self):
        return 2.0 * np.pi * np.sin(self.theta0)


@dataclass
class Grid:
    """Quadrature and differentiation grid on a cap domain.

    Bulk nodes are indexed (radial, angular) with shape (Nr, Ntheta);
    boundary nodes share the angular grid at r = R.
    """

    domain: CapDomain
    Nr: int
    Ntheta: int
    transform: DiskTransform = field(repr=False)
    # chart data at bulk nodes
    r: np.ndarray = field(repr=False)          # (Nr,)
    phi: np.ndarray = field(repr=False)        # (Ntheta,)
    U: np.ndarray = field(repr=False)          # (Nr, Ntheta)
    V: np.ndarray = field(repr=False)
    esig: np.ndarray = field(repr=False)       # (Nr,) conformal factor
    nu: np.ndarray = field(repr=False)         # (Nr, Ntheta, 3)
    nu_u: np.ndarray = field(repr=False)
    nu_v: np.ndarray = field(repr=False)
    w_bulk: np.ndarray = field(repr=False)     # (Nr, Ntheta) d-omega weights
    # boundary data
    b_nu: np.ndarray = field(repr=False)       # (Ntheta, 3)
    b_normal: np.ndarray = field(repr=False)   # (Ntheta, 3) outward unit
    w_boundary: np.ndarray = field(repr=False) # (Ntheta,) ds weights

    @property
    def R(self):
        return self.domain.stereo_radius

    @property
    def esig_boundary(self):
        return conformal_factor(self.R, 0.0)

    @property
    def n_nodes(self):
        return self.Nr * self.Ntheta

    def refine(self, Nr, Ntheta):
        """Same domain, different resolution."""
        return build_grid(self.domain, Nr, Ntheta)


def build_grid(domain, Nr, Ntheta):
    """Construct the quadrature grid for a cap domain.

    Requires Nr >= 4 and even Ntheta >= 8; rejects degenerate domains
    via CapDomain itself.
    """
    if not isinstance(domain, CapDomain):
        domain = CapDomain(float(domain))
    if Nr < 4 or Ntheta < 8 or Ntheta % 2 != 0:
        raise ValueError(
            f"insufficient resolution: need Nr >= 4 and even Ntheta >= 8, "
            f"got Nr={Nr}, Ntheta={Ntheta}"
        )
    R = domain.stereo_radius
    tr = DiskTransform(R, Nr, Ntheta)

    r, phi = tr.r, tr.phi
    U = r[:, None] * np.cos(phi)[None, :]
    V = r[:, None] * np.sin(phi)[None, :]
    esig = conformal_factor(r, 0.0)
    nu = stereo_to_sphere(U, V)
    nu_u, nu_v = nu_partials(U, V)

    # d-omega = e^sigma r dr dphi and r dr = (R^2/4) dx on Gauss nodes
    w_bulk = np.broadcast_to(
        (2.0 * np.pi / Ntheta) * (R**2 / 4.0) * tr.wx * esig, (Ntheta, Nr)
    ).T.copy()

    bu, bv = R * np.cos(phi), R * np.sin(phi)
    b_nu = stereo_to_sphere(bu, bv)
    bnu_u, bnu_v = nu_partials(bu, bv)
    es_b = conformal_factor(R, 0.0)
    # outward unit normal (sphere metric) = e^(-sigma/2) * d(nu)/dr
    b_normal = (np.cos(phi)[:, None] * bnu_u + np.sin(phi)[:, None] * bnu_v) / np.sqrt(
        es_b
    )
    w_boundary = np.full(Ntheta, (2.0 * np.pi / Ntheta) * R * np.sqrt(es_b))

    return Grid(
        domain=domain,
        Nr=Nr,
        Ntheta=Ntheta,
        transform=tr,
        r=r,
        phi=phi,
        U=U,
        V=V,
        esig=esig,
        nu=nu,
        nu_u=nu_u,
        nu_v=nu_v,
        w_bulk=w_bulk,
        b_nu=b_nu,
        b_normal=b_normal,
        w_boundary=w_boundary,
    )
