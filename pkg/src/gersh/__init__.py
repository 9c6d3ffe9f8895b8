"""Gerschgorin-type eigenvalue inclusion regions for matrix pencils.

Given a square pencil (a, b), the library builds per-row inclusion regions
in the ordinary Euclidean metric (disks, Apollonius disks/exteriors,
half-planes), compares them against the chordal and Kostic sets, counts
eigenvalues in certified disjoint clusters, and derives a-posteriori
forward error bounds for computed eigendecompositions.  A CLI (``gersh``)
exposes the same operations over Matrix Market files with JSON and SVG
output.
"""

from .core import (
    INFTY,
    DataError,
    Disk,
    DiskComplement,
    GershError,
    HalfPlane,
    Infinity,
    Intersection,
    NumericalError,
    Pencil,
    PointAtInfinity,
    Region,
    RowStats,
    WholePlane,
    contains_infinity,
    is_infinity,
    membership,
    membership_mask,
    row_stats,
)
from .counting import (
    Cluster,
    ClusterReport,
    CountMismatch,
    Verdict,
    cluster_components,
    pair_disjoint,
    verify_counts,
)
from .forward_error import (
    DominanceViolated,
    ErrorBoundReport,
    NotACluster,
    NotNormalized,
    NotSimple,
    ResidualData,
    cluster_bound,
    error_bound_report,
    quadratic_bound,
    residual_data,
    simple_bound,
    tight_bound,
)
from .mtx import DimensionMismatch, ParseError, read_matrix_market
from .oracle import (
    IllConditionedB,
    NoConvergence,
    SingularPencil,
    Spectrum,
    eigenvalues_charpoly,
    eigenvalues_qr,
    match_spectra,
    testmat_pencil,
    tridiag_analytic,
)
from .reference import (
    chordal_distance,
    chordal_radius,
    in_chordal_region,
    in_chordal_set,
    in_kostic_region,
    in_kostic_set,
)
from .regions import (
    RegionFamily,
    RowRegions,
    disk_from_b_dominance,
    family_union_mask,
    family_union_membership,
    inclusion_family,
    region_from_a_dominance,
    tight_disk_from_b_dominance,
    tight_region_from_a_dominance,
)

__version__ = "0.1.0"
