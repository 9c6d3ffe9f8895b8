"""Pencil model, extended complex plane, row dominance data, and the region algebra.

Everything here is immutable after construction and safe to share across
threads.  Regions are closed sets in the one-point compactification of the
complex plane; membership tests are exact up to an optional absolute
tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "GershError",
    "DataError",
    "NumericalError",
    "Infinity",
    "INFTY",
    "ExtendedComplex",
    "is_infinity",
    "Pencil",
    "RowStats",
    "row_stats",
    "WholePlane",
    "Disk",
    "DiskComplement",
    "HalfPlane",
    "PointAtInfinity",
    "Intersection",
    "Region",
    "membership",
    "membership_mask",
    "contains_infinity",
]


class GershError(Exception):
    """Base class for library failures."""


class DataError(GershError):
    """Malformed or inconsistent input data."""


class NumericalError(GershError):
    """A numerical procedure failed to converge or certify."""


class Infinity:
    """The single point at infinity of the extended complex plane."""

    _singleton = None
    __slots__ = ()

    def __new__(cls):
        if cls._singleton is None:
            cls._singleton = super().__new__(cls)
        return cls._singleton

    def __repr__(self):
        return "INFTY"

    def __reduce__(self):
        return (Infinity, ())


INFTY = Infinity()

ExtendedComplex = Union[complex, Infinity]


def is_infinity(z) -> bool:
    return isinstance(z, Infinity)


@dataclass(frozen=True, eq=False)
class Pencil:
    """Square matrix pair (a, b) defining the one-parameter family a - z*b.

    Entries must be finite; a and b must be square with matching shape.
    Arrays are copied on construction and frozen.
    """

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=complex)
        b = np.array(self.b, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DataError(f"matrix a must be square, got shape {a.shape}")
        if b.shape != a.shape:
            raise DataError(f"shape mismatch: a is {a.shape}, b is {b.shape}")
        if a.shape[0] == 0:
            raise DataError("empty pencil")
        if not (np.isfinite(a).all() and np.isfinite(b).all()):
            raise DataError("pencil entries must be finite")
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.a.shape[0]


@dataclass(frozen=True)
class RowStats:
    """Per-row dominance data of a pencil.

    big_r      off-diagonal absolute row sum of a
    big_r_a    off-diagonal absolute row sum of b
    small_r    big_r_a / |b_ii|, None when b_ii == 0
    small_r_a  big_r / |a_ii|, None when a_ii == 0
    in_sb      row of b strictly diagonally dominant (ties are not dominant)
    in_sa      row of a strictly diagonally dominant
    """

    big_r: float
    big_r_a: float
    small_r: float | None
    small_r_a: float | None
    in_sb: bool
    in_sa: bool


def row_stats(pencil: Pencil) -> list[RowStats]:
    """Compute dominance statistics for every row of the pencil."""
    abs_a = np.abs(pencil.a)
    abs_b = np.abs(pencil.b)
    diag_a = np.diag(abs_a).copy()
    diag_b = np.diag(abs_b).copy()
    off_a = abs_a.copy()
    off_b = abs_b.copy()
    np.fill_diagonal(off_a, 0.0)
    np.fill_diagonal(off_b, 0.0)
    sum_a = off_a.sum(axis=1)
    sum_b = off_b.sum(axis=1)
    stats = []
    for i in range(pencil.n):
        stats.append(
            RowStats(
                big_r=float(sum_a[i]),
                big_r_a=float(sum_b[i]),
                small_r=float(sum_b[i] / diag_b[i]) if diag_b[i] != 0.0 else None,
                small_r_a=float(sum_a[i] / diag_a[i]) if diag_a[i] != 0.0 else None,
                in_sb=bool(diag_b[i] > sum_b[i]),
                in_sa=bool(diag_a[i] > sum_a[i]),
            )
        )
    return stats


@dataclass(frozen=True)
class WholePlane:
    """Every finite point plus infinity."""


@dataclass(frozen=True)
class Disk:
    """Closed disk {z : |z - center| <= radius}; excludes infinity."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius >= 0.0:
            raise DataError(f"disk radius must be >= 0, got {self.radius}")


@dataclass(frozen=True)
class DiskComplement:
    """Closed exterior {z : |z - center| >= radius}, plus infinity."""

    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius >= 0.0:
            raise DataError(f"radius must be >= 0, got {self.radius}")


@dataclass(frozen=True)
class HalfPlane:
    """Points at least as close to alpha as to the origin, plus infinity.

    {z : |z - alpha| <= |z|}: the closed side of the perpendicular bisector
    of the segment [0, alpha] that contains alpha.  Degenerates to the whole
    plane when alpha == 0.
    """

    alpha: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))


@dataclass(frozen=True)
class PointAtInfinity:
    """The singleton {infinity}."""


@dataclass(frozen=True)
class Intersection:
    """Intersection of two atomic regions (nesting depth is exactly 1)."""

    left: "Region"
    right: "Region"

    def __post_init__(self):
        if isinstance(self.left, Intersection) or isinstance(self.right, Intersection):
            raise DataError("intersections must not nest")


Region = Union[WholePlane, Disk, DiskComplement, HalfPlane, PointAtInfinity, Intersection]


def membership(region: Region, z: ExtendedComplex, tol: float = 0.0) -> bool:
    """Exact membership predicate, loosened outward by absolute tolerance tol."""
    if is_infinity(z):
        return contains_infinity(region)
    z = complex(z)
    if isinstance(region, WholePlane):
        return True
    if isinstance(region, Disk):
        return abs(z - region.center) <= region.radius + tol
    if isinstance(region, DiskComplement):
        return abs(z - region.center) >= region.radius - tol
    if isinstance(region, HalfPlane):
        return abs(z - region.alpha) <= abs(z) + tol
    if isinstance(region, PointAtInfinity):
        return False
    if isinstance(region, Intersection):
        return membership(region.left, z, tol) and membership(region.right, z, tol)
    raise TypeError(f"not a region: {region!r}")


def membership_mask(region: Region, zs: np.ndarray, tol: float = 0.0) -> np.ndarray:
    """Vectorized membership over an array of finite points."""
    zs = np.asarray(zs, dtype=complex)
    if isinstance(region, WholePlane):
        return np.ones(zs.shape, dtype=bool)
    if isinstance(region, Disk):
        return np.abs(zs - region.center) <= region.radius + tol
    if isinstance(region, DiskComplement):
        return np.abs(zs - region.center) >= region.radius - tol
    if isinstance(region, HalfPlane):
        return np.abs(zs - region.alpha) <= np.abs(zs) + tol
    if isinstance(region, PointAtInfinity):
        return np.zeros(zs.shape, dtype=bool)
    if isinstance(region, Intersection):
        return membership_mask(region.left, zs, tol) & membership_mask(region.right, zs, tol)
    raise TypeError(f"not a region: {region!r}")


def contains_infinity(region: Region) -> bool:
    if isinstance(region, (WholePlane, DiskComplement, HalfPlane, PointAtInfinity)):
        return True
    if isinstance(region, Disk):
        return False
    if isinstance(region, Intersection):
        return contains_infinity(region.left) and contains_infinity(region.right)
    raise TypeError(f"not a region: {region!r}")
