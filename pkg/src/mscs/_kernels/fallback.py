"""Pure-numpy implementation of the dilated periodic filtering kernels.

Matches ``_atrous.pyx`` to floating-point round-off; used when the
compiled extension is unavailable (and as the benchmark baseline).
"""

import numpy as np


def _filt(x, taps, dilation, axis, sign):
    y = np.zeros_like(x)
    for k, t in enumerate(taps):
        y += t * np.roll(x, sign * dilation * k, axis=axis)
    return y


def analysis_pair(x, lo, hi, dilation, axis):
    if len(lo) != len(hi):
        raise ValueError("filter pair must have equal length")
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    return _filt(x, lo, dilation, axis, +1), _filt(x, hi, dilation, axis, +1)


def synthesis_pair(a, d, lo, hi, dilation, axis):
    if len(lo) != len(hi):
        raise ValueError("filter pair must have equal length")
    if a.shape != d.shape:
        raise ValueError("subband pair must have equal shape")
    if axis not in (0, 1):
        raise ValueError("axis must be 0 or 1")
    return _filt(a, lo, dilation, axis, -1) + _filt(d, hi, dilation, axis, -1)
