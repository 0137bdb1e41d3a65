"""Uniform Cartesian grids with ghost layers and point-value field storage."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

GHOST = 3


class ConfigurationError(ValueError):
    """Raised for invalid grid, field or run configuration."""


@dataclass(frozen=True)
class Grid:
    """Nodal grid: interior point ``i`` along an axis sits at ``origin + i * spacing``.

    Ghost points extend the same affine map to indices ``-ghost .. -1`` and
    ``n .. n + ghost - 1``.
    """

    n: tuple[int, ...]
    origin: tuple[float, ...]
    spacing: tuple[float, ...]
    ghost: int = GHOST

    def __post_init__(self):
        if not (len(self.n) == len(self.origin) == len(self.spacing)):
            raise ConfigurationError("n, origin and spacing must have equal length")
        if not 1 <= len(self.n) <= 3:
            raise ConfigurationError(f"ndim must be 1, 2 or 3, got {len(self.n)}")
        if any(s <= 0 for s in self.spacing):
            raise ConfigurationError(f"spacing must be positive, got {self.spacing}")
        if any(k < 1 for k in self.n):
            raise ConfigurationError(f"cell counts must be positive, got {self.n}")
        if self.ghost < 3:
            raise ConfigurationError("ghost width must be at least 3")

    @classmethod
    def uniform(
        cls,
        lower: Sequence[float],
        upper: Sequence[float],
        n: Sequence[int],
        periodic: Sequence[bool],
        ghost: int = GHOST,
    ) -> "Grid":
        """Grid over the box ``[lower, upper]``.

        Periodic axes hold ``n`` points ``lower + i*L/n`` so the seam point is
        not duplicated; other axes are cell-centred, ``lower + (i + 1/2)*L/n``.
        """
        n = tuple(int(k) for k in n)
        spacing, origin = [], []
        for lo, hi, k, per in zip(lower, upper, n, periodic):
            d = (hi - lo) / k
            spacing.append(d)
            origin.append(lo if per else lo + 0.5 * d)
        return cls(n, tuple(origin), tuple(spacing), ghost)

    @property
    def ndim(self) -> int:
        return len(self.n)

    @property
    def shape(self) -> tuple[int, ...]:
        """Point counts per axis including ghosts."""
        return tuple(k + 2 * self.ghost for k in self.n)

    @property
    def interior(self) -> tuple[slice, ...]:
        g = self.ghost
        return tuple(slice(g, g + k) for k in self.n)

    def axis_coords(self, axis: int, ghosts: bool = False) -> np.ndarray:
        g = self.ghost if ghosts else 0
        idx = np.arange(-g, self.n[axis] + g)
        return self.origin[axis] + idx * self.spacing[axis]

    def mesh(self, ghosts: bool = False) -> tuple[np.ndarray, ...]:
        axes = [self.axis_coords(a, ghosts) for a in range(self.ndim)]
        return tuple(np.meshgrid(*axes, indexing="ij"))

    def point_coords(self, index: Sequence[int]) -> tuple[float, ...]:
        if len(index) != self.ndim:
            raise IndexError(f"expected {self.ndim} indices, got {len(index)}")
        out = []
        for a, i in enumerate(index):
            if not -self.ghost <= i < self.n[a] + self.ghost:
                raise IndexError(f"index {i} out of range on axis {a}")
            out.append(self.origin[a] + i * self.spacing[a])
        return tuple(out)

    def nearest_index(self, coords: Sequence[float]) -> tuple[int, ...]:
        return tuple(
            int(np.rint((x - o) / d)) for x, o, d in zip(coords, self.origin, self.spacing)
        )

    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))


@dataclass
class Field:
    grid: Grid
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.data.ndim != self.grid.ndim + 1:
            raise ConfigurationError("field data must be (ncomp, *grid.shape)")
        if self.data.shape[1:] != self.grid.shape:
            raise ConfigurationError(
                f"field shape {self.data.shape[1:]} does not match grid {self.grid.shape}"
            )

    @property
    def ncomp(self) -> int:
        return self.data.shape[0]

    @property
    def interior(self) -> np.ndarray:
        return self.data[(slice(None),) + self.grid.interior]


def allocate_field(grid: Grid, ncomp: int) -> Field:
    if ncomp < 1:
        raise ConfigurationError(f"ncomp must be >= 1, got {ncomp}")
    try:
        data = np.zeros((ncomp,) + grid.shape)
    except MemoryError as exc:
        raise ConfigurationError(f"cannot allocate {ncomp} x {grid.shape} field") from exc
    return Field(grid, data)
