"""Multispectral cubes and measurement frames.

A cube stores scene radiance over two spatial axes and one spectral
axis. Its vectorization is band-major: band index outermost, then row,
then column, so that per-band operators act on contiguous blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: 16 uniformly spaced filter center wavelengths (nm) in the visible range.
DEFAULT_WAVELENGTHS_NM = tuple(np.linspace(470.0, 620.0, 16))


def default_wavelengths(n_lambda):
    """Uniformly spaced center wavelengths on 470-620 nm."""
    if n_lambda == 1:
        return (545.0,)
    return tuple(np.linspace(470.0, 620.0, n_lambda))


@dataclass(frozen=True)
class MSCube:
    """A multispectral cube: ``data[u, v, l]`` with per-band wavelengths."""

    data: np.ndarray
    wavelengths: tuple = ()

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim != 3:
            raise ValueError(f"cube must be 3-D, got shape {data.shape}")
        if min(data.shape) < 1:
            raise ValueError(f"cube dims must be >= 1, got {data.shape}")
        wl = self.wavelengths or default_wavelengths(data.shape[2])
        wl = tuple(float(w) for w in wl)
        if len(wl) != data.shape[2]:
            raise ValueError("one wavelength per band required")
        if any(b <= a for a, b in zip(wl, wl[1:])):
            raise ValueError("wavelengths must be strictly increasing")
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "wavelengths", wl)

    @property
    def shape(self):
        return self.data.shape

    @property
    def n_voxels(self):
        return self.data.size


def vectorize(cube):
    """Band-major vectorization: ``x[l*nu*nv + u*nv + v] = data[u, v, l]``."""
    data = cube.data if isinstance(cube, MSCube) else np.asarray(cube)
    return np.ascontiguousarray(np.moveaxis(data, 2, 0)).ravel()


def devectorize(x, shape, wavelengths=()):
    """Inverse of :func:`vectorize` for a cube of the given (nu, nv, nl)."""
    n_u, n_v, n_l = shape
    x = np.asarray(x, dtype=np.float64)
    if x.size != n_u * n_v * n_l:
        raise ValueError(f"vector length {x.size} does not match {shape}")
    data = np.moveaxis(x.reshape(n_l, n_u, n_v), 0, 2)
    return MSCube(data, wavelengths)


@dataclass(frozen=True)
class MeasurementFrame:
    """Sensor snapshots ``data[p, i, j]`` plus the noise bound used for recovery."""

    data: np.ndarray
    noise_bound: float = 0.0

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.float64)
        if data.ndim == 2:
            data = data[None]
        if data.ndim != 3:
            raise ValueError("frames must be (m_S, m_u, m_v) or a single 2-D frame")
        if self.noise_bound < 0:
            raise ValueError("noise bound must be nonnegative")
        data = data.copy()
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def snapshot_count(self):
        return self.data.shape[0]

    @property
    def total_count(self):
        """m = m_u * m_v * m_S."""
        return self.data.size

    def to_vector(self):
        """Snapshot-major, row-major pixel order; matches the sensing operators."""
        return self.data.ravel().copy()
