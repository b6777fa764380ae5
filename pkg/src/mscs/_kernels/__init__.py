"""Kernel backend selection.

The compiled extension is used when importable; the numpy fallback
otherwise. Set ``MSCS_KERNEL_BACKEND=numpy`` to force the fallback.
"""

import os

import numpy as np

from . import fallback as _fallback

_impl = _fallback
_BACKEND = "numpy"
if os.environ.get("MSCS_KERNEL_BACKEND") != "numpy":
    try:
        from . import _atrous as _compiled

        _impl = _compiled
        _BACKEND = "compiled"
    except ImportError:
        pass


def backend():
    """Name of the active backend: ``"compiled"`` or ``"numpy"``."""
    return _BACKEND


def implementations():
    """All importable backends, keyed by name."""
    impls = {"numpy": _fallback}
    if _BACKEND == "compiled":
        impls["compiled"] = _impl
    return impls


def _prep2d(x):
    return np.ascontiguousarray(x, dtype=np.float64)


def _prep1d(t):
    return np.ascontiguousarray(t, dtype=np.float64)


def analysis_pair(x, lo, hi, dilation, axis, impl=None):
    """Periodic dilated convolution of ``x`` with the (lo, hi) filter pair."""
    impl = impl or _impl
    return impl.analysis_pair(_prep2d(x), _prep1d(lo), _prep1d(hi),
                              int(dilation), int(axis))


def synthesis_pair(a, d, lo, hi, dilation, axis, impl=None):
    """Adjoint of :func:`analysis_pair`, summing the two subband inputs."""
    impl = impl or _impl
    return impl.synthesis_pair(_prep2d(a), _prep2d(d), _prep1d(lo),
                               _prep1d(hi), int(dilation), int(axis))
