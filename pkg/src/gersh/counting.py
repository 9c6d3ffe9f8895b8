"""Disjoint clusters of inclusion regions and certified eigenvalue counts.

A union of k row regions that is provably disjoint from the remaining n-k
regions, and provably not the entire plane, contains exactly k eigenvalues
of the pencil.  Disjointness tests are exact where the geometry allows and
conservative (never optimistic) otherwise.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    Disk,
    DiskComplement,
    ExtendedComplex,
    HalfPlane,
    Intersection,
    NumericalError,
    Pencil,
    PointAtInfinity,
    Region,
    WholePlane,
    contains_infinity,
    is_infinity,
    membership,
)
from .regions import RegionFamily

__all__ = [
    "Verdict",
    "pair_disjoint",
    "Cluster",
    "ClusterReport",
    "cluster_components",
    "CountMismatch",
    "verify_counts",
]


class Verdict(enum.Enum):
    DISJOINT = "disjoint"
    INTERSECTING = "intersecting"
    UNKNOWN = "unknown"


def _factors(region: Region) -> tuple[Region, ...]:
    if isinstance(region, Intersection):
        return (region.left, region.right)
    return (region,)


def _halfplane_signed_margin(half: HalfPlane, point: complex) -> float:
    # Signed distance of point to the bisector of [0, alpha]: >= 0 on the
    # alpha side (inside the half-plane), measured in the alpha direction.
    alpha = half.alpha
    mod = abs(alpha)
    return (point * alpha.conjugate()).real / mod - mod / 2.0


def _atomic_disjoint(r1: Region, r2: Region) -> Verdict:
    """Exact disjointness for non-intersection regions (never Unknown)."""
    if isinstance(r1, WholePlane) or isinstance(r2, WholePlane):
        return Verdict.INTERSECTING
    if contains_infinity(r1) and contains_infinity(r2):
        return Verdict.INTERSECTING
    # At most one side contains infinity from here on.
    if isinstance(r1, PointAtInfinity) or isinstance(r2, PointAtInfinity):
        # The other side is a disk (the only atomic region without infinity).
        return Verdict.DISJOINT
    if isinstance(r1, Disk) and isinstance(r2, Disk):
        if abs(r1.center - r2.center) > r1.radius + r2.radius:
            return Verdict.DISJOINT
        return Verdict.INTERSECTING
    # Exactly one side is a disk; the other is a complement or half-plane.
    disk, other = (r1, r2) if isinstance(r1, Disk) else (r2, r1)
    if isinstance(other, DiskComplement):
        if abs(disk.center - other.center) + disk.radius < other.radius:
            return Verdict.DISJOINT
        return Verdict.INTERSECTING
    if isinstance(other, HalfPlane):
        if other.alpha == 0:
            return Verdict.INTERSECTING  # degenerate half-plane is everything
        if _halfplane_signed_margin(other, disk.center) + disk.radius < 0.0:
            return Verdict.DISJOINT
        return Verdict.INTERSECTING
    raise TypeError(f"unsupported pair: {r1!r}, {r2!r}")


def pair_disjoint(r1: Region, r2: Region) -> Verdict:
    """Decide whether two regions are disjoint.

    Atomic pairs are decided exactly.  For intersections, disjointness of
    any factor pair certifies disjointness of the whole pair; shared
    membership of infinity certifies intersection; anything else is
    ``Unknown`` and treated as not disjoint by cluster construction.
    """
    if not isinstance(r1, Intersection) and not isinstance(r2, Intersection):
        return _atomic_disjoint(r1, r2)
    for f1 in _factors(r1):
        for f2 in _factors(r2):
            if _atomic_disjoint(f1, f2) is Verdict.DISJOINT:
                return Verdict.DISJOINT
    if contains_infinity(r1) and contains_infinity(r2):
        return Verdict.INTERSECTING
    return Verdict.UNKNOWN


def _has_bounded_finite_part(region: Region) -> bool:
    # True when the region's finite points form a bounded set.
    if isinstance(region, Disk):
        return True
    if isinstance(region, PointAtInfinity):
        return True
    if isinstance(region, Intersection):
        return _has_bounded_finite_part(region.left) or _has_bounded_finite_part(region.right)
    return False


def _provably_proper(region: Region) -> bool:
    # True when the region is provably not the whole extended plane.
    if isinstance(region, WholePlane):
        return False
    if isinstance(region, Disk) or isinstance(region, PointAtInfinity):
        return True
    if isinstance(region, DiskComplement):
        return region.radius > 0.0
    if isinstance(region, HalfPlane):
        return region.alpha != 0
    if isinstance(region, Intersection):
        return _provably_proper(region.left) or _provably_proper(region.right)
    raise TypeError(f"not a region: {region!r}")


@dataclass(frozen=True)
class Cluster:
    indices: tuple[int, ...]
    expected_count: int
    certified: bool


@dataclass(frozen=True)
class ClusterReport:
    family: RegionFamily
    clusters: tuple[Cluster, ...]


def cluster_components(family: RegionFamily) -> ClusterReport:
    """Group rows whose regions are not provably disjoint; certify clusters.

    Rows i and j land in one cluster whenever ``pair_disjoint`` of their
    regions is not Disjoint (Unknown counts as overlapping).  A cluster is
    certified when its count is guaranteed: cross-cluster disjointness holds
    by construction, no member is the whole plane, and the cluster union is
    provably not the entire plane.  With two or more clusters the union is
    automatically proper (the other clusters' regions are nonempty and
    disjoint from it); a lone cluster needs every member's finite part
    bounded, or a single provably proper region.
    """
    n = family.n
    regions = [row.combined for row in family.rows]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if pair_disjoint(regions[i], regions[j]) is not Verdict.DISJOINT:
                parent[find(i)] = find(j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    index_groups = sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])

    clusters = []
    for g in index_groups:
        members = [regions[i] for i in g]
        if any(isinstance(r, WholePlane) for r in members):
            certified = False
        elif len(index_groups) >= 2:
            certified = True
        elif all(_has_bounded_finite_part(r) for r in members):
            certified = True
        elif len(members) == 1 and _provably_proper(members[0]):
            certified = True
        else:
            certified = False
        clusters.append(Cluster(tuple(g), len(g), certified))
    return ClusterReport(family, tuple(clusters))


class CountMismatch(NumericalError):
    """A certified cluster does not contain exactly its expected eigenvalue count."""

    def __init__(self, cluster: Cluster, found: int):
        self.cluster = cluster
        self.found = found
        super().__init__(
            f"cluster {cluster.indices} expected {cluster.expected_count} "
            f"eigenvalues, found {found}"
        )


def verify_counts(pencil: Pencil, report: ClusterReport,
                  eigs: list[ExtendedComplex], eps_mem: float = 0.0) -> bool:
    """Check every certified cluster against reference eigenvalues.

    Membership of each eigenvalue z uses the tolerance eps_mem*(1 + |z|)
    so floating-point eigenvalues on region boundaries are kept.  Returns
    True when all certified clusters match; raises :class:`CountMismatch`
    on the first cluster that does not.
    """
    if pencil.n != report.family.n:
        raise ValueError("report does not match pencil size")
    for cluster in report.clusters:
        if not cluster.certified:
            continue
        found = 0
        for z in eigs:
            tol = eps_mem if is_infinity(z) else eps_mem * (1.0 + abs(complex(z)))
            if any(
                membership(report.family.rows[i].combined, z, tol)
                for i in cluster.indices
            ):
                found += 1
        if found != cluster.expected_count:
            raise CountMismatch(cluster, found)
    return True
