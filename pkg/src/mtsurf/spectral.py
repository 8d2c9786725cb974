"""Fourier x Legendre spectral transform on the stereographic disk.

Nodal data lives on a polar tensor grid: Gauss-Legendre nodes in the
squared-radius variable x = 2(r/R)^2 - 1 and uniform angles.  Each
angular Fourier mode m is represented radially as

    r^(m mod 2) * sum_k c_k P_k(x),

the parity that any function smooth at the origin must have.  With
Gauss-Legendre nodes the discrete Legendre transform is the exact
inverse of evaluation (degree <= Nr-1 against quadrature exact to
2Nr-1), so analyze/synth round-trips are lossless and the radial
derivative is an exact matrix operation in coefficient space.  The
derivative flips radial parity; coefficient arrays therefore carry a
`flip` flag marking columns whose parity is (m + flip) mod 2.
"""

import numpy as np
from numpy.polynomial import legendre as npleg

__all__ = ["DiskTransform"]


def _pad(c, n):
    out = np.zeros(n)
    out[: len(c)] = c
    return out


class DiskTransform:
    """Spectral analysis/synthesis and exact radial derivatives."""

    def __init__(self, R, Nr, Ntheta):
        if Ntheta % 2 != 0:
            raise ValueError("Ntheta must be even")
        self.R = float(R)
        self.Nr = int(Nr)
        self.Ntheta = int(Ntheta)
        self.Nm = Ntheta // 2 + 1

        x, wx = npleg.leggauss(Nr)
        self.x = x
        self.wx = wx
        self.r = R * np.sqrt((1.0 + x) / 2.0)
        self.phi = 2.0 * np.pi * np.arange(Ntheta) / Ntheta

        # Evaluation and (exact) projection matrices for P_k(x), k < Nr.
        self.Pval = npleg.legvander(x, Nr - 1)                  # (Nr, Nr)
        norm = (2.0 * np.arange(Nr) + 1.0) / 2.0
        self.Lproj = norm[:, None] * self.Pval.T * wx[None, :]  # (Nr, Nr)

        # d/dr in coefficient space, one matrix per source parity.
        # even source P_k -> r * (4/R^2) P_k'(x)
        # odd source r P_k -> P_k + 2(1+x) P_k'(x)
        De2o = np.zeros((Nr, Nr))
        Do2e = np.zeros((Nr, Nr))
        for k in range(Nr):
            e = np.zeros(k + 1)
            e[k] = 1.0
            d = npleg.legder(e) if k > 0 else np.zeros(1)
            De2o[:, k] = _pad(d, Nr) * (4.0 / R**2)
            Do2e[:, k] = _pad(e, Nr) + 2.0 * (_pad(d, Nr) + _pad(npleg.legmulx(d), Nr))
        self._Dr = (De2o, Do2e)

        # Boundary rows at x = 1 (r = R): values and d/dr of the basis.
        k = np.arange(Nr, dtype=float)
        self._bval = (np.ones(Nr), np.full(Nr, R))
        self._bder = (2.0 * k * (k + 1.0) / R, 1.0 + 2.0 * k * (k + 1.0))

        # d/dphi factors; the Nyquist bin of a real signal has no
        # well-defined odd derivative and is zeroed.
        m = np.arange(self.Nm, dtype=float)
        mfac = 1j * m
        if Ntheta % 2 == 0:
            mfac[-1] = 0.0
        self._mfac = mfac
        self._modes = np.arange(self.Nm)

    # ------------------------------------------------------------------
    # transforms

    def _parities(self, flip):
        return (self._modes + flip) % 2

    def analyze(self, vals):
        """Nodal (Nr, Ntheta) real data -> coefficients (Nr, Nm), flip 0."""
        F = np.fft.rfft(np.asarray(vals, dtype=float), axis=1)
        C = np.empty_like(F)
        even = self._parities(0) == 0
        C[:, even] = self.Lproj @ F[:, even]
        C[:, ~even] = self.Lproj @ (F[:, ~even] / self.r[:, None])
        return C

    def synth(self, C, flip=0):
        """Coefficients -> nodal values (real part of the Fourier sum)."""
        even = self._parities(flip) == 0
        F = np.empty_like(C)
        F[:, even] = self.Pval @ C[:, even]
        F[:, ~even] = self.r[:, None] * (self.Pval @ C[:, ~even])
        return np.fft.irfft(F, n=self.Ntheta, axis=1)

    # ------------------------------------------------------------------
    # exact derivative operations in coefficient space

    def dr(self, C, flip=0):
        """Radial derivative; returns coefficients with flip toggled."""
        even = self._parities(flip) == 0
        out = np.empty_like(C)
        out[:, even] = self._Dr[0] @ C[:, even]
        out[:, ~even] = self._Dr[1] @ C[:, ~even]
        return out, 1 - flip

    def dphi(self, C, flip=0):
        """Angular derivative; parity type unchanged."""
        return C * self._mfac[None, :], flip

    # ------------------------------------------------------------------
    # boundary traces at r = R (same angular nodes as the bulk grid)

    def _trace(self, C, flip, rows):
        even = self._parities(flip) == 0
        row = np.where(even, rows[0] @ C, rows[1] @ C)
        return np.fft.irfft(row, n=self.Ntheta)

    def trace_val(self, C, flip=0):
        return self._trace(C, flip, self._bval)

    def trace_dr(self, C, flip=0):
        return self._trace(C, flip, self._bder)
