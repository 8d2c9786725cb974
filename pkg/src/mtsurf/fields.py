"""Scalar fields on cap grids and their sphere-calculus operators.

Fields are nodal arrays backed by the grid's spectral transform; all
derivatives go through exact coefficient-space operations followed by
pointwise polar-to-chart chain rules.  The covariant Hessian and its
eigenvalues are taken relative to the round metric, so trace = hat
Laplacian and det = Monge-Ampere.
"""

from dataclasses import dataclass, field as dfield
from functools import cached_property

import numpy as np

from ._kernels import hessian_rel
from .grid import Grid

__all__ = [
    "ScalarField",
    "HessianField",
    "field_from_function",
    "field_from_values",
    "gradient_s2",
    "grad_norm2",
    "hat_laplacian",
    "covariant_hessian",
    "monge_ampere",
    "integrate_bulk",
    "integrate_boundary",
    "boundary_value",
    "boundary_normal_deriv",
    "trace_of_values",
    "trace_dn_of_values",
]


@dataclass
class ScalarField:
    grid: Grid
    values: np.ndarray  # (Nr, Ntheta)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.Nr, self.grid.Ntheta):
            raise ValueError(
                f"values shape {self.values.shape} does not match grid "
                f"({self.grid.Nr}, {self.grid.Ntheta})"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("field values must be finite")

    @cached_property
    def coeffs(self):
        return self.grid.transform.analyze(self.values)

    @cached_property
    def polar(self):
        """First/second polar derivatives at the nodes (exact in basis)."""
        tr = self.grid.transform
        C = self.coeffs
        Cr, fr_flip = tr.dr(C)
        Crr, frr_flip = tr.dr(Cr, fr_flip)
        Cp, _ = tr.dphi(C)
        Crp, _ = tr.dphi(Cr)
        Cpp, _ = tr.dphi(Cp)
        return {
            "fr": tr.synth(Cr, fr_flip),
            "frr": tr.synth(Crr, frr_flip),
            "fphi": tr.synth(Cp),
            "frphi": tr.synth(Crp, fr_flip),
            "fphiphi": tr.synth(Cpp),
        }

    @cached_property
    def chart(self):
        """Chart partials f_u, f_v, f_uu, f_uv, f_vv at the nodes."""
        g = self.grid
        p = self.polar
        c = np.cos(g.phi)[None, :]
        s = np.sin(g.phi)[None, :]
        r = g.r[:, None]
        fr, frr = p["fr"], p["frr"]
        fp, frp, fpp = p["fphi"], p["frphi"], p["fphiphi"]
        fu = c * fr - s / r * fp
        fv = s * fr + c / r * fp
        fuu = (c * c * frr - 2 * c * s / r * frp + s * s / r**2 * fpp
               + s * s / r * fr + 2 * c * s / r**2 * fp)
        fvv = (s * s * frr + 2 * c * s / r * frp + c * c / r**2 * fpp
               + c * c / r * fr - 2 * c * s / r**2 * fp)
        fuv = (c * s * frr + (c * c - s * s) / r * frp - c * s / r**2 * fpp
               - c * s / r * fr - (c * c - s * s) / r**2 * fp)
        return {"fu": fu, "fv": fv, "fuu": fuu, "fuv": fuv, "fvv": fvv}

    # small field algebra, enough for f = q + t*phi style tests
    def __add__(self, other):
        return ScalarField(self.grid, self.values + other.values)

    def __sub__(self, other):
        return ScalarField(self.grid, self.values - other.values)

    def __mul__(self, scalar):
        return ScalarField(self.grid, self.values * float(scalar))

    __rmul__ = __mul__


@dataclass
class HessianField:
    """Covariant Hessian samples: chart components and relative form."""

    grid: Grid
    huu: np.ndarray  # chart components of D^2 f
    huv: np.ndarray
    hvv: np.ndarray
    rel_a: np.ndarray  # D^2 f relative to the sphere metric
    rel_b: np.ndarray
    rel_d: np.ndarray
    sig1: np.ndarray  # eigenvalues, sig1 >= sig2
    sig2: np.ndarray

    @property
    def trace(self):
        """Metric trace; equals the hat Laplacian."""
        return self.rel_a + self.rel_d

    @property
    def deviator(self):
        """Trace-free part (relative components): ((a-d)/2, b)."""
        return 0.5 * (self.rel_a - self.rel_d), self.rel_b

    @property
    def area_density(self):
        """(sig1-sig2)^2 / 4, the induced area density per unit d-omega."""
        dev_a, dev_b = self.deviator
        return dev_a**2 + dev_b**2


def field_from_values(grid, values):
    return ScalarField(grid, values)


def field_from_function(grid, fn):
    """Sample fn(u, v) on the grid nodes."""
    return ScalarField(grid, fn(grid.U, grid.V))


def gradient_s2(f):
    """Sphere gradient embedded in R^3, shape (Nr, Ntheta, 3)."""
    g = f.grid
    ch = f.chart
    inv_es = 1.0 / g.esig[:, None, None]
    return inv_es * (ch["fu"][..., None] * g.nu_u + ch["fv"][..., None] * g.nu_v)


def grad_norm2(f):
    """|Df|^2 = e^(-sigma) (f_u^2 + f_v^2), as a nodal array."""
    ch = f.chart
    return (ch["fu"] ** 2 + ch["fv"] ** 2) / f.grid.esig[:, None]


def hat_laplacian(f):
    """Laplacian of the round sphere, e^(-sigma) (f_uu + f_vv)."""
    g = f.grid
    p = f.polar
    r = g.r[:, None]
    flat = p["frr"] + p["fr"] / r + p["fphiphi"] / r**2
    return ScalarField(g, flat / g.esig[:, None])


def covariant_hessian(f):
    g = f.grid
    ch = f.chart
    a, b, d, s1, s2 = hessian_rel(
        g.U, g.V, ch["fu"], ch["fv"], ch["fuu"], ch["fuv"], ch["fvv"]
    )
    es = g.esig[:, None]
    return HessianField(
        grid=g,
        huu=a * es, huv=b * es, hvv=d * es,
        rel_a=a, rel_b=b, rel_d=d,
        sig1=s1, sig2=s2,
    )


def monge_ampere(f):
    """Determinant of the covariant Hessian w.r.t. the sphere metric."""
    h = covariant_hessian(f)
    return ScalarField(f.grid, h.rel_a * h.rel_d - h.rel_b**2)


# ----------------------------------------------------------------------
# quadrature

def integrate_bulk(arg, grid=None):
    """Integral over the cap against d-omega (fixed summation order)."""
    if isinstance(arg, ScalarField):
        grid, vals = arg.grid, arg.values
    else:
        vals = np.asarray(arg)
    return float(np.sum(grid.w_bulk * vals))


def integrate_boundary(grid, trace_values):
    """Integral over the cap boundary against arclength ds."""
    return float(np.sum(grid.w_boundary * np.asarray(trace_values)))


# ----------------------------------------------------------------------
# boundary traces (spectral evaluation at r = R)

def boundary_value(f):
    return f.grid.transform.trace_val(f.coeffs)


def boundary_normal_deriv(f):
    """Outward normal derivative in the sphere metric, e^(-sigma/2) f_r."""
    g = f.grid
    return g.transform.trace_dr(f.coeffs) / np.sqrt(g.esig_boundary)


def trace_of_values(grid, values):
    """Boundary trace of an arbitrary nodal array."""
    return grid.transform.trace_val(grid.transform.analyze(values))


def trace_dn_of_values(grid, values):
    g = grid
    return g.transform.trace_dr(g.transform.analyze(values)) / np.sqrt(
        g.esig_boundary
    )
