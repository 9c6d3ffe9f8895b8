"""Eigenvalue inclusion regions built from row dominance of a pencil.

Three region families are available per pencil:

* ``plain``       one region per row, the intersection of a disk obtained
                  from dominance of the b-row with an Apollonius region
                  obtained from dominance of the a-row;
* ``tilde``       same structure with sharper centers and radii (always a
                  subset of the plain region, row by row);
* ``simplified``  one region per row: the b-side disk when the b-row is
                  dominant, the a-side region otherwise.  Reduces to the
                  classical Gerschgorin disks when b is the identity.

Every eigenvalue of the pencil (including infinite ones) lies in the union
of each family's rows.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DataError,
    Disk,
    DiskComplement,
    ExtendedComplex,
    HalfPlane,
    Intersection,
    Pencil,
    PointAtInfinity,
    Region,
    RowStats,
    WholePlane,
    membership,
    membership_mask,
    row_stats,
)

__all__ = [
    "VARIANTS",
    "BETA_ONE_RTOL",
    "RowRegions",
    "RegionFamily",
    "disk_from_b_dominance",
    "region_from_a_dominance",
    "tight_disk_from_b_dominance",
    "tight_region_from_a_dominance",
    "combined_region",
    "row_region",
    "inclusion_family",
    "family_union_membership",
    "family_union_mask",
]

VARIANTS = ("plain", "tilde", "simplified")

# Relative tolerance deciding when the Apollonius ratio counts as exactly 1,
# where the circle degenerates to the bisector half-plane.  Center and radius
# blow up like 1/(1-beta^2) there, so nearby ratios must take the half-plane
# branch for the region to stay a meaningful bound.
BETA_ONE_RTOL = 1e-12


def _apollonius_region(alpha: complex, beta: float) -> Region:
    """Region of z with |z - alpha| <= beta*|z|, as a disk/half-plane/exterior.

    The boundary is the Apollonius circle of the points alpha and 0 with
    ratio beta; the region is the side containing alpha.
    """
    if abs(beta - 1.0) <= BETA_ONE_RTOL * max(1.0, beta):
        return HalfPlane(alpha)
    # 1 - beta^2 evaluated as a product to avoid cancellation near beta = 1
    one_minus_beta_sq = (1.0 - beta) * (1.0 + beta)
    center = alpha / one_minus_beta_sq
    radius = abs(alpha) * beta / abs(one_minus_beta_sq)
    if beta < 1.0:
        return Disk(center, radius)
    return DiskComplement(center, radius)


def disk_from_b_dominance(pencil: Pencil, stats: list[RowStats], i: int) -> Region:
    """Row region from strict diagonal dominance of row i of b.

    Disk centered at a_ii/b_ii with radius (|a_ii|*r + R)/(|b_ii|*(1-r)),
    where r is the relative and R the absolute off-diagonal row sum.  The
    whole plane when the row is not dominant.
    """
    s = stats[i]
    if not s.in_sb:
        return WholePlane()
    a_ii = pencil.a[i, i]
    b_ii = pencil.b[i, i]
    r = s.small_r
    return Disk(a_ii / b_ii, (abs(a_ii) * r + s.big_r) / (abs(b_ii) * (1.0 - r)))


def region_from_a_dominance(pencil: Pencil, stats: list[RowStats], i: int) -> Region:
    """Row region from strict diagonal dominance of row i of a.

    Bounds 1/z rather than z, which makes the region an Apollonius disk,
    its closed exterior, or a half-plane, and lets it capture infinite
    eigenvalues.  Branches:

    * row of a not dominant: whole plane;
    * b_ii == 0 and b's off-diagonal row sum is 0: the point at infinity;
    * b_ii == 0 otherwise: exterior |z| >= |a_ii|*(1-r_a)/big_r_a;
    * b_ii != 0: Apollonius region with alpha = a_ii/b_ii and
      beta = (|b_ii|*r_a + big_r_a)/(|b_ii|*(1-r_a)).
    """
    s = stats[i]
    if not s.in_sa:
        return WholePlane()
    a_ii = pencil.a[i, i]
    b_ii = pencil.b[i, i]
    r_a = s.small_r_a  # defined: dominance implies a_ii != 0
    if b_ii == 0:
        if s.big_r_a == 0.0:
            return PointAtInfinity()
        return DiskComplement(0j, abs(a_ii) * (1.0 - r_a) / s.big_r_a)
    alpha = a_ii / b_ii
    beta = (abs(b_ii) * r_a + s.big_r_a) / (abs(b_ii) * (1.0 - r_a))
    return _apollonius_region(alpha, beta)


def tight_disk_from_b_dominance(pencil: Pencil, stats: list[RowStats], i: int) -> Region:
    """Sharper variant of :func:`disk_from_b_dominance`.

    Center (a_ii/b_ii)/(1-r^2), radius (|a_ii|*r + R*(1+r))/(|b_ii|*(1-r^2)).
    """
    s = stats[i]
    if not s.in_sb:
        return WholePlane()
    a_ii = pencil.a[i, i]
    b_ii = pencil.b[i, i]
    r = s.small_r
    one_minus_r_sq = (1.0 - r) * (1.0 + r)
    center = (a_ii / b_ii) / one_minus_r_sq
    radius = (abs(a_ii) * r + s.big_r * (1.0 + r)) / (abs(b_ii) * one_minus_r_sq)
    return Disk(center, radius)


def tight_region_from_a_dominance(pencil: Pencil, stats: list[RowStats], i: int) -> Region:
    """Sharper variant of :func:`region_from_a_dominance`.

    Uses alpha = (a_ii/b_ii)*(1-r_a^2) and beta = r_a + big_r_a*(1+r_a)/|b_ii|.
    Identical to the plain region when b_ii == 0 or the a-row is not dominant.
    """
    s = stats[i]
    if not s.in_sa or pencil.b[i, i] == 0:
        return region_from_a_dominance(pencil, stats, i)
    a_ii = pencil.a[i, i]
    b_ii = pencil.b[i, i]
    r_a = s.small_r_a
    alpha = (a_ii / b_ii) * ((1.0 - r_a) * (1.0 + r_a))
    beta = r_a + s.big_r_a * (1.0 + r_a) / abs(b_ii)
    return _apollonius_region(alpha, beta)


def combined_region(b_region: Region, a_region: Region) -> Region:
    """Intersection of the two row regions, flattening whole-plane factors."""
    if isinstance(b_region, WholePlane):
        return a_region
    if isinstance(a_region, WholePlane):
        return b_region
    return Intersection(b_region, a_region)


def row_region(pencil: Pencil, stats: list[RowStats], i: int, variant: str = "plain") -> Region:
    """The row-i inclusion region of the requested family variant."""
    if variant == "plain":
        return combined_region(
            disk_from_b_dominance(pencil, stats, i),
            region_from_a_dominance(pencil, stats, i),
        )
    if variant == "tilde":
        return combined_region(
            tight_disk_from_b_dominance(pencil, stats, i),
            tight_region_from_a_dominance(pencil, stats, i),
        )
    if variant == "simplified":
        if stats[i].in_sb:
            return disk_from_b_dominance(pencil, stats, i)
        return region_from_a_dominance(pencil, stats, i)
    raise DataError(f"unknown variant {variant!r}, expected one of {VARIANTS}")


@dataclass(frozen=True)
class RowRegions:
    """The two one-sided regions of a row and their combination."""

    b_region: Region
    a_region: Region
    combined: Region


@dataclass(frozen=True)
class RegionFamily:
    """All row regions of a pencil for one variant."""

    variant: str
    rows: tuple[RowRegions, ...]

    @property
    def n(self) -> int:
        return len(self.rows)


def inclusion_family(pencil: Pencil, variant: str = "plain",
                     stats: list[RowStats] | None = None) -> RegionFamily:
    """Build the full region family of a pencil for one variant."""
    if variant not in VARIANTS:
        raise DataError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    if stats is None:
        stats = row_stats(pencil)
    rows = []
    for i in range(pencil.n):
        if variant == "tilde":
            b_reg = tight_disk_from_b_dominance(pencil, stats, i)
            a_reg = tight_region_from_a_dominance(pencil, stats, i)
        else:
            b_reg = disk_from_b_dominance(pencil, stats, i)
            a_reg = region_from_a_dominance(pencil, stats, i)
        if variant == "simplified":
            comb = b_reg if stats[i].in_sb else a_reg
        else:
            comb = combined_region(b_reg, a_reg)
        rows.append(RowRegions(b_reg, a_reg, comb))
    return RegionFamily(variant, tuple(rows))


def family_union_membership(family: RegionFamily, z: ExtendedComplex, tol: float = 0.0) -> bool:
    """True when z lies in at least one row region of the family."""
    return any(membership(row.combined, z, tol) for row in family.rows)


def family_union_mask(family: RegionFamily, zs: np.ndarray, tol: float = 0.0) -> np.ndarray:
    """Vectorized union membership over an array of finite points."""
    zs = np.asarray(zs, dtype=complex)
    mask = np.zeros(zs.shape, dtype=bool)
    for row in family.rows:
        mask |= membership_mask(row.combined, zs, tol)
    return mask
