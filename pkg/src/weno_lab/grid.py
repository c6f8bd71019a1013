"""Uniform cell-centred grids."""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

NGHOST = 3


@dataclass(frozen=True)
class Grid1D:
    n: int
    x_lo: float
    x_hi: float

    def __post_init__(self):
        if self.n < 6:
            raise ConfigError(f"grid needs at least 6 cells, got {self.n}")
        if not self.x_hi > self.x_lo:
            raise ConfigError("x_hi must exceed x_lo")

    @property
    def dx(self):
        return (self.x_hi - self.x_lo) / self.n

    @property
    def x(self):
        """Cell centres."""
        return self.x_lo + (np.arange(self.n) + 0.5) * self.dx

    @property
    def x_padded(self):
        """Cell centres including ``NGHOST`` ghost cells per side."""
        return self.x_lo + (np.arange(-NGHOST, self.n + NGHOST) + 0.5) * self.dx

    @property
    def length(self):
        return self.x_hi - self.x_lo


@dataclass(frozen=True)
class Grid2D:
    nx: int
    ny: int
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self):
        if self.nx < 6 or self.ny < 6:
            raise ConfigError(f"grid needs at least 6 cells per direction, got {self.nx}x{self.ny}")
        if not (self.x_hi > self.x_lo and self.y_hi > self.y_lo):
            raise ConfigError("degenerate domain")

    @property
    def xgrid(self):
        return Grid1D(self.nx, self.x_lo, self.x_hi)

    @property
    def ygrid(self):
        return Grid1D(self.ny, self.y_lo, self.y_hi)

    @property
    def dx(self):
        return (self.x_hi - self.x_lo) / self.nx

    @property
    def dy(self):
        return (self.y_hi - self.y_lo) / self.ny

    def mesh(self, padded=False):
        """``(X, Y)`` arrays of shape ``(nx, ny)`` (``indexing='ij'``)."""
        if padded:
            return np.meshgrid(self.xgrid.x_padded, self.ygrid.x_padded, indexing="ij")
        return np.meshgrid(self.xgrid.x, self.ygrid.x, indexing="ij")
