"""Pointwise membership in the two classical inclusion sets used for comparison.

The chordal (Stewart-Sun) set measures distance on the Riemann sphere from
the diagonal ratio of each row; the Kostic set compares |b_ii*z - a_ii|
against the off-diagonal sums |b_ij*z - a_ij|.  Neither has a simple
Euclidean boundary, so both are evaluated pointwise or on grids.
"""
from __future__ import annotations

import math

import numpy as np

from .core import INFTY, ExtendedComplex, Pencil, is_infinity

__all__ = [
    "chordal_distance",
    "chordal_radius",
    "in_chordal_region",
    "in_chordal_set",
    "in_kostic_region",
    "in_kostic_set",
    "chordal_mask",
    "kostic_mask",
    "kostic_row_lipschitz",
]


def chordal_distance(x: ExtendedComplex, y: ExtendedComplex) -> float:
    """Distance between x and y projected onto the Riemann sphere, in [0, 1]."""
    if is_infinity(x) and is_infinity(y):
        return 0.0
    if is_infinity(x):
        x, y = y, x
    if is_infinity(y):
        return 1.0 / math.hypot(1.0, abs(complex(x)))
    x = complex(x)
    y = complex(y)
    return abs(x - y) / (math.hypot(1.0, abs(x)) * math.hypot(1.0, abs(y)))


def _off_diagonal_sums(pencil: Pencil, i: int) -> tuple[float, float]:
    abs_a = np.abs(pencil.a[i])
    abs_b = np.abs(pencil.b[i])
    return (
        float(abs_a.sum() - abs_a[i]),
        float(abs_b.sum() - abs_b[i]),
    )


def chordal_radius(pencil: Pencil, i: int) -> float:
    """Chordal radius of row i; +inf when both diagonal entries vanish.

    A value >= 1 makes the row's region the whole extended plane.
    """
    off_a, off_b = _off_diagonal_sums(pencil, i)
    denom = math.hypot(abs(pencil.a[i, i]), abs(pencil.b[i, i]))
    if denom == 0.0:
        return math.inf
    return math.hypot(off_a, off_b) / denom


def in_chordal_region(pencil: Pencil, i: int, z: ExtendedComplex, tol: float = 0.0) -> bool:
    """Chordal-set membership of z for row i."""
    a_ii = pencil.a[i, i]
    b_ii = pencil.b[i, i]
    if a_ii == 0 and b_ii == 0:
        return True
    center: ExtendedComplex = INFTY if b_ii == 0 else a_ii / b_ii
    return chordal_distance(z, center) <= chordal_radius(pencil, i) + tol


def in_chordal_set(pencil: Pencil, z: ExtendedComplex, tol: float = 0.0) -> bool:
    return any(in_chordal_region(pencil, i, z, tol) for i in range(pencil.n))


def in_kostic_region(pencil: Pencil, i: int, z: ExtendedComplex, tol: float = 0.0) -> bool:
    """Kostic-set membership of z for row i.

    Finite z: |b_ii*z - a_ii| <= sum_{j != i} |b_ij*z - a_ij| + tol.
    Infinity belongs to the row iff the b-row is not strictly diagonally
    dominant (the set is compact exactly when b is strictly dominant).
    """
    if is_infinity(z):
        abs_b = np.abs(pencil.b[i])
        return abs(pencil.b[i, i]) <= float(abs_b.sum() - abs_b[i]) + tol
    z = complex(z)
    lhs = abs(pencil.b[i, i] * z - pencil.a[i, i])
    row_terms = np.abs(pencil.b[i] * z - pencil.a[i])
    rhs = float(row_terms.sum() - row_terms[i])
    return lhs <= rhs + tol


def in_kostic_set(pencil: Pencil, z: ExtendedComplex, tol: float = 0.0) -> bool:
    return any(in_kostic_region(pencil, i, z, tol) for i in range(pencil.n))


def chordal_mask(pencil: Pencil, zs: np.ndarray, tol: float = 0.0) -> np.ndarray:
    """Vectorized union membership of finite grid points in the chordal set."""
    zs = np.asarray(zs, dtype=complex)
    sphere_z = np.hypot(1.0, np.abs(zs))
    mask = np.zeros(zs.shape, dtype=bool)
    for i in range(pencil.n):
        a_ii = pencil.a[i, i]
        b_ii = pencil.b[i, i]
        if a_ii == 0 and b_ii == 0:
            return np.ones(zs.shape, dtype=bool)
        radius = chordal_radius(pencil, i)
        if b_ii == 0:
            dist = 1.0 / sphere_z
        else:
            center = a_ii / b_ii
            dist = np.abs(zs - center) / (sphere_z * math.hypot(1.0, abs(center)))
        mask |= dist <= radius + tol
    return mask


def kostic_mask(pencil: Pencil, zs: np.ndarray, row_tols=None) -> np.ndarray:
    """Vectorized union membership of finite grid points in the Kostic set.

    ``row_tols`` may be a scalar or a per-row array of absolute tolerances
    added to the right-hand side (used for conservative rasterization).
    Cost scales with the number of structurally nonzero off-diagonal
    entries, so sparse pencils rasterize cheaply.
    """
    zs = np.asarray(zs, dtype=complex)
    n = pencil.n
    if row_tols is None:
        tols = np.zeros(n)
    else:
        tols = np.broadcast_to(np.asarray(row_tols, dtype=float), (n,))
    mask = np.zeros(zs.shape, dtype=bool)
    for i in range(n):
        lhs = np.abs(pencil.b[i, i] * zs - pencil.a[i, i])
        rhs = np.zeros(zs.shape)
        for j in range(n):
            if j == i:
                continue
            a_ij = pencil.a[i, j]
            b_ij = pencil.b[i, j]
            if a_ij == 0 and b_ij == 0:
                continue
            rhs += np.abs(b_ij * zs - a_ij)
        mask |= lhs <= rhs + tols[i]
    return mask


def kostic_row_lipschitz(pencil: Pencil) -> np.ndarray:
    """Per-row Lipschitz constants |b_ii| + sum_{j != i}|b_ij| of the Kostic margin.

    Scaling a spatial tolerance by these makes grid rasterization
    conservative: any cell meeting the set has its center accepted.
    """
    abs_b = np.abs(pencil.b)
    return abs_b.sum(axis=1)
