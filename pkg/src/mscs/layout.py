"""Per-pixel spectral filter layouts for the sensor array.

Every sensor pixel samples exactly one band; the layout is the integer
map from pixel to band index. Mosaic layouts repeat a small macro-pixel,
random layouts permute a balanced assignment over the whole array, and
tiled layouts give each band one contiguous rectangle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

LAYOUT_KINDS = ("mosaic", "random", "tiled")


@dataclass(frozen=True)
class SensorLayout:
    """Band index per sensor pixel: ``band_of_pixel[i, j] in [0, n_lambda)``."""

    band_of_pixel: np.ndarray
    n_lambda: int
    kind: str = "mosaic"
    mosaic_period: int = 0
    seed: int | None = None

    def __post_init__(self):
        bop = np.asarray(self.band_of_pixel, dtype=np.int64)
        if bop.ndim != 2:
            raise ValueError("band map must be 2-D")
        if bop.min() < 0 or bop.max() >= self.n_lambda:
            raise ValueError("band indices out of range")
        bop = bop.copy()
        bop.setflags(write=False)
        object.__setattr__(self, "band_of_pixel", bop)

    @property
    def shape(self):
        return self.band_of_pixel.shape

    def mask(self, band):
        """Boolean mask selecting the pixels assigned to ``band``."""
        return self.band_of_pixel == band

    def band_counts(self):
        return np.bincount(self.band_of_pixel.ravel(), minlength=self.n_lambda)

    def to_text(self):
        """Plain-text integer grid, one sensor row per line."""
        return "\n".join(" ".join(str(b) for b in row) for row in self.band_of_pixel) + "\n"

    def save_png(self, path):
        """Palette PNG with one distinct color per band."""
        from PIL import Image

        import matplotlib.cm as cm

        img = Image.fromarray(self.band_of_pixel.astype(np.uint8), mode="P")
        colors = (np.asarray(cm.tab20(np.linspace(0, 1, max(self.n_lambda, 2))))[:, :3] * 255)
        palette = np.zeros((256, 3), dtype=np.uint8)
        palette[: len(colors)] = colors.astype(np.uint8)
        img.putpalette(palette.ravel().tolist())
        img.save(path)


def layout_from_text(text, n_lambda, kind="mosaic", mosaic_period=0):
    rows = [[int(v) for v in line.split()] for line in text.strip().splitlines()]
    return SensorLayout(np.array(rows), n_lambda, kind=kind, mosaic_period=mosaic_period)


def _mosaic_map(m_u, m_v, period):
    i = np.arange(m_u)[:, None] % period
    j = np.arange(m_v)[None, :] % period
    return i * period + j


def _tiled_map(m_u, m_v, n_lambda):
    # Grid of tiles as square as possible; bands assigned row-major.
    t_u = int(np.floor(np.sqrt(n_lambda)))
    while n_lambda % t_u:
        t_u -= 1
    t_v = n_lambda // t_u
    i = np.minimum(np.arange(m_u) * t_u // m_u, t_u - 1)
    j = np.minimum(np.arange(m_v) * t_v // m_v, t_v - 1)
    return i[:, None] * t_v + j[None, :]


def make_layout(kind, m_u, m_v, n_lambda, period=4, seed=0):
    """Build a sensor layout of the given kind.

    Mosaic requires ``n_lambda == period**2`` and dims divisible by the
    period. Random permutes a balanced assignment with a PCG64 stream
    seeded by ``seed``, so the same seed reproduces the same layout.
    """
    if kind not in LAYOUT_KINDS:
        raise ValueError(f"unknown layout kind {kind!r}")
    if m_u < 1 or m_v < 1 or n_lambda < 1:
        raise ValueError("dims must be positive")
    if kind == "mosaic":
        if n_lambda != period * period:
            raise ValueError(f"mosaic needs n_lambda == period**2, got {n_lambda} != {period}**2")
        if m_u % period or m_v % period:
            raise ValueError("sensor dims must be divisible by the mosaic period")
        return SensorLayout(_mosaic_map(m_u, m_v, period), n_lambda,
                            kind="mosaic", mosaic_period=period)
    if kind == "tiled":
        return SensorLayout(_tiled_map(m_u, m_v, n_lambda), n_lambda, kind="tiled")
    # random: permute a balanced (round-robin) assignment over the full array
    base = np.arange(m_u * m_v, dtype=np.int64) % n_lambda
    rng = np.random.Generator(np.random.PCG64(seed))
    perm = rng.permutation(m_u * m_v)
    return SensorLayout(base[perm].reshape(m_u, m_v), n_lambda,
                        kind="random", seed=int(seed))
