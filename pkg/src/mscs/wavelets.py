"""Undecimated 2-D wavelet transform with periodic boundaries.

The transform stacks, per level, the three detail orientations obtained
by separable low/high filtering with dilated (a-trous) filters, plus the
final approximation, giving ``3*levels + 1`` subbands of the input size.
Each 1-D pass is scaled by 1/sqrt(2), which makes the stacked transform
a Parseval frame: the adjoint is an exact left inverse.

Filter taps were obtained by spectral factorization of the orthonormal
8-tap Daubechies half-band polynomial at 60-digit precision and rounded
to the nearest doubles; the QMF identity |H|^2 + |G|^2 = 2 then holds to
machine precision on any grid.
"""

from __future__ import annotations

import numpy as np

from . import _kernels

#: Orthonormal 8-tap Daubechies low-pass (4 vanishing moments), sum sqrt(2).
DB4_LO = np.array([
    -0.010597401785069032,
    0.0328830116668852,
    0.030841381835560764,
    -0.18703481171909309,
    -0.027983769416859854,
    0.6308807679298589,
    0.7148465705529157,
    0.2303778133088965,
])

#: Undecimated Haar pair, used as a small debug configuration.
HAAR_LO = np.array([1.0, 1.0]) / np.sqrt(2.0)


def highpass_from_lowpass(lo):
    """Quadrature-mirror high-pass: g[k] = (-1)^k h[L-1-k]."""
    lo = np.asarray(lo, dtype=np.float64)
    sign = np.where(np.arange(lo.size) % 2 == 0, 1.0, -1.0)
    return sign * lo[::-1]


def subband_count(levels):
    return 3 * levels + 1


def udwt2_forward(image, lo=DB4_LO, levels=3, impl=None):
    """Undecimated analysis: (3*levels+1, n_u, n_v) coefficient stack.

    Band order is (ad, da, dd) per level, coarsest last, then the final
    approximation. Boundaries are periodic, so circularly shifting the
    image circularly shifts every subband.
    """
    image = np.asarray(image, dtype=np.float64)
    if image.ndim != 2:
        raise ValueError("expected a 2-D image")
    if min(image.shape) < len(lo):
        raise ValueError(
            f"image dims {image.shape} below filter support {len(lo)}")
    lo = np.asarray(lo, dtype=np.float64)
    hi = highpass_from_lowpass(lo) / np.sqrt(2.0)
    lo = lo / np.sqrt(2.0)
    bands = np.empty((subband_count(levels),) + image.shape)
    approx = image
    for j in range(levels):
        dilation = 2 ** j
        row_lo, row_hi = _kernels.analysis_pair(approx, lo, hi, dilation, 0, impl)
        aa, ad = _kernels.analysis_pair(row_lo, lo, hi, dilation, 1, impl)
        da, dd = _kernels.analysis_pair(row_hi, lo, hi, dilation, 1, impl)
        bands[3 * j] = ad
        bands[3 * j + 1] = da
        bands[3 * j + 2] = dd
        approx = aa
    bands[3 * levels] = approx
    return bands


def udwt2_adjoint(bands, lo=DB4_LO, levels=3, impl=None):
    """Adjoint of :func:`udwt2_forward`; an exact left inverse (Parseval)."""
    bands = np.asarray(bands, dtype=np.float64)
    if bands.shape[0] != subband_count(levels):
        raise ValueError(
            f"expected {subband_count(levels)} subbands, got {bands.shape[0]}")
    lo = np.asarray(lo, dtype=np.float64)
    hi = highpass_from_lowpass(lo) / np.sqrt(2.0)
    lo = lo / np.sqrt(2.0)
    approx = bands[3 * levels]
    for j in reversed(range(levels)):
        dilation = 2 ** j
        ad, da, dd = bands[3 * j], bands[3 * j + 1], bands[3 * j + 2]
        row_lo = _kernels.synthesis_pair(approx, ad, lo, hi, dilation, 1, impl)
        row_hi = _kernels.synthesis_pair(da, dd, lo, hi, dilation, 1, impl)
        approx = _kernels.synthesis_pair(row_lo, row_hi, lo, hi, dilation, 0, impl)
    return approx
