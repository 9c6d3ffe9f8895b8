"""A-posteriori forward error bounds for a computed eigendecomposition.

Inputs are the transformed matrices ahat = Y^H A X and bhat = Y^H B X of a
diagonalizable pencil, where X, Y hold computed right/left eigenvectors
normalized so that bhat has unit diagonal.  The diagonal of ahat carries the
computed eigenvalues; the off-diagonal row sums of ahat and bhat measure the
residual error and drive three bounds of increasing sharpness:

* simple:     disk radius rho_i around each computed eigenvalue;
* tight:      rho_i shrunk by a diagonal-similarity factor tau0 < 1;
* quadratic:  r^2 / delta', quadratic in the residual size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import DataError, NumericalError

__all__ = [
    "NotNormalized",
    "DominanceViolated",
    "NotSimple",
    "NotACluster",
    "ResidualData",
    "residual_data",
    "SimpleBound",
    "simple_bound",
    "cluster_bound",
    "TightBound",
    "tight_bound",
    "quadratic_bound",
    "ErrorBoundReport",
    "error_bound_report",
]

DIAGONAL_NORMALIZATION_EPS = 1e-12


class NotNormalized(DataError):
    """bhat diagonal deviates from 1 beyond the normalization tolerance."""


class DominanceViolated(DataError):
    """Some off-diagonal row sum of bhat is >= 1, so bhat is not dominant."""


class NotSimple(NumericalError):
    """The target computed eigenvalue coincides with another one."""


class NotACluster(NumericalError):
    """The requested indices do not form a certified equal-eigenvalue cluster."""


@dataclass(frozen=True)
class ResidualData:
    """Computed eigenvalues and residual row sums of the transformed pencil.

    lambdas  diagonal of ahat (the computed eigenvalues)
    e_row    off-diagonal absolute row sums of ahat
    f_row    off-diagonal absolute row sums of bhat (each < 1)
    """

    lambdas: tuple[complex, ...]
    e_row: tuple[float, ...]
    f_row: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.lambdas)


def residual_data(ahat: np.ndarray, bhat: np.ndarray) -> ResidualData:
    """Extract eigenvalues and residual row sums; validate normalization."""
    ahat = np.asarray(ahat, dtype=complex)
    bhat = np.asarray(bhat, dtype=complex)
    if ahat.ndim != 2 or ahat.shape[0] != ahat.shape[1]:
        raise DataError(f"ahat must be square, got shape {ahat.shape}")
    if bhat.shape != ahat.shape:
        raise DataError(f"shape mismatch: ahat {ahat.shape}, bhat {bhat.shape}")
    n = ahat.shape[0]
    diag_b = np.diag(bhat)
    deviation = np.abs(diag_b - 1.0)
    if deviation.max() > DIAGONAL_NORMALIZATION_EPS:
        worst = int(deviation.argmax())
        raise NotNormalized(
            f"bhat diagonal entry {worst} is {diag_b[worst]}, expected 1"
        )
    abs_a = np.abs(ahat)
    abs_b = np.abs(bhat)
    e_row = abs_a.sum(axis=1) - np.diag(abs_a)
    f_row = abs_b.sum(axis=1) - np.diag(abs_b)
    if f_row.max() >= 1.0:
        worst = int(f_row.argmax())
        raise DominanceViolated(f"row {worst} of bhat has off-diagonal sum {f_row[worst]} >= 1")
    return ResidualData(
        lambdas=tuple(complex(v) for v in np.diag(ahat)),
        e_row=tuple(float(v) for v in e_row),
        f_row=tuple(float(v) for v in f_row),
    )


def _disk_radius(d: ResidualData, magnitude: float, j: int) -> float:
    # Row-j inclusion disk radius, evaluated at the reference magnitude
    # |lambda_i| of the target row (the same magnitude is used for every j).
    return (magnitude * d.f_row[j] + d.e_row[j]) / (1.0 - d.f_row[j])


def _gap(d: ResidualData, i: int) -> float:
    others = [abs(d.lambdas[i] - d.lambdas[j]) for j in range(d.n) if j != i]
    return min(others) if others else math.inf


class SimpleBound(NamedTuple):
    rho: float
    certified: bool


def simple_bound(d: ResidualData, i: int) -> SimpleBound:
    """Disk radius rho_i around computed eigenvalue i, plus a disjointness certificate.

    rho_i = (|lambda_i| F_i + E_i)/(1 - F_i).  The certificate checks
    |lambda_i - lambda_j| > rho_i + rho_j for every other row j, with rho_j
    evaluated at |lambda_i| as well; when it holds, exactly one true
    eigenvalue lies within rho_i of lambda_i.
    """
    if _gap(d, i) == 0.0:
        raise NotSimple(f"computed eigenvalue {i} is not simple")
    magnitude = abs(d.lambdas[i])
    rho_i = _disk_radius(d, magnitude, i)
    certified = all(
        abs(d.lambdas[i] - d.lambdas[j]) > rho_i + _disk_radius(d, magnitude, j)
        for j in range(d.n)
        if j != i
    )
    return SimpleBound(rho_i, certified)


def cluster_bound(d: ResidualData, indices) -> float:
    """Radius containing exactly k true eigenvalues for k equal computed ones.

    All computed eigenvalues at ``indices`` must coincide exactly, and their
    disks must be disjoint from every other row's disk; the bound is the
    largest disk radius within the cluster.
    """
    indices = tuple(indices)
    if len(indices) == 0:
        raise NotACluster("empty index set")
    lam = d.lambdas[indices[0]]
    if any(d.lambdas[j] != lam for j in indices):
        raise NotACluster("computed eigenvalues differ across the cluster")
    magnitude = abs(lam)
    inside = {int(j) for j in indices}
    radius = max(_disk_radius(d, magnitude, j) for j in inside)
    for j in range(d.n):
        if j in inside:
            continue
        if abs(lam - d.lambdas[j]) <= radius + _disk_radius(d, magnitude, j):
            raise NotACluster(f"cluster disks overlap row {j}")
    return radius


class TightBound(NamedTuple):
    tau0: float
    bound: float
    improved: bool


def tight_bound(d: ResidualData, i: int) -> TightBound:
    """Diagonal-similarity refinement of the simple bound.

    tau0 = max_{j != i} F_j + max_{j != i}(|lambda_j| F_j + E_j)/(delta - rho_i).
    When tau0 < 1 the refined bound tau0*(|lambda_i| F_i + E_i)/(1 - tau0*F_i)
    holds (falling back to tau0*rho_i if the denominator closes); otherwise
    the similarity gives no improvement and the simple radius stands.
    """
    rho_i, certified = simple_bound(d, i)
    if not certified:
        raise NotSimple(f"row {i} disks are not certified disjoint")
    delta = _gap(d, i)
    others = [j for j in range(d.n) if j != i]
    if not others:
        return TightBound(0.0, 0.0, True)
    max_f = max(d.f_row[j] for j in others)
    max_err = max(abs(d.lambdas[j]) * d.f_row[j] + d.e_row[j] for j in others)
    if math.isinf(delta):
        tau0 = max_f
    else:
        tau0 = max_f + max_err / (delta - rho_i)
    numer = abs(d.lambdas[i]) * d.f_row[i] + d.e_row[i]
    if tau0 * d.f_row[i] < 1.0:
        bound = tau0 * numer / (1.0 - tau0 * d.f_row[i])
    else:
        bound = tau0 * rho_i
    return TightBound(tau0, bound, tau0 < 1.0)


def quadratic_bound(d: ResidualData, i: int) -> float:
    """Bound r^2/delta' that is quadratic in the residual size.

    delta' = delta - rho_i and
    r = max_j ((2|lambda_j| + |lambda_i|) F_j + E_j) / (1 - F_i).
    """
    rho_i, certified = simple_bound(d, i)
    if not certified:
        raise NotSimple(f"row {i} disks are not certified disjoint")
    delta_prime = _gap(d, i) - rho_i
    magnitude = abs(d.lambdas[i])
    r = max(
        (2.0 * abs(d.lambdas[j]) + magnitude) * d.f_row[j] + d.e_row[j]
        for j in range(d.n)
    ) / (1.0 - d.f_row[i])
    if math.isinf(delta_prime):
        return 0.0
    return r * r / delta_prime


@dataclass(frozen=True)
class ErrorBoundReport:
    """All bounds for one computed eigenvalue.

    ``rho_tight``, ``tau0``, ``delta_prime``, ``r_quad`` and ``quad_bound``
    are None when the target is not simple or its disks are not certified
    disjoint.  ``cluster_indices``/``cluster_radius`` are set when the
    computed eigenvalue repeats exactly and its disks separate from the rest.
    """

    index: int
    computed: complex
    rho_simple: float
    certified: bool
    delta: float
    tau0: float | None
    rho_tight: float | None
    improved: bool | None
    delta_prime: float | None
    r_quad: float | None
    quad_bound: float | None
    cluster_indices: tuple[int, ...] | None
    cluster_radius: float | None


def error_bound_report(d: ResidualData, i: int) -> ErrorBoundReport:
    """Assemble every applicable bound for computed eigenvalue i."""
    if not 0 <= i < d.n:
        raise ValueError(f"index {i} out of range for n={d.n}")
    lam = d.lambdas[i]
    magnitude = abs(lam)
    delta = _gap(d, i)
    rho_simple = _disk_radius(d, magnitude, i)

    cluster_indices = None
    cluster_radius = None
    duplicates = tuple(j for j in range(d.n) if d.lambdas[j] == lam)
    if len(duplicates) > 1:
        try:
            cluster_radius = cluster_bound(d, duplicates)
            cluster_indices = duplicates
        except NotACluster:
            pass

    if delta == 0.0:
        return ErrorBoundReport(
            index=i, computed=lam, rho_simple=rho_simple, certified=False,
            delta=delta, tau0=None, rho_tight=None, improved=None,
            delta_prime=None, r_quad=None, quad_bound=None,
            cluster_indices=cluster_indices, cluster_radius=cluster_radius,
        )

    rho, certified = simple_bound(d, i)
    if not certified:
        return ErrorBoundReport(
            index=i, computed=lam, rho_simple=rho, certified=False,
            delta=delta, tau0=None, rho_tight=None, improved=None,
            delta_prime=None, r_quad=None, quad_bound=None,
            cluster_indices=cluster_indices, cluster_radius=cluster_radius,
        )

    tau0, bound, improved = tight_bound(d, i)
    rho_tight = bound if improved else rho
    delta_prime = delta - rho
    r = max(
        (2.0 * abs(d.lambdas[j]) + magnitude) * d.f_row[j] + d.e_row[j]
        for j in range(d.n)
    ) / (1.0 - d.f_row[i])
    quad = quadratic_bound(d, i)
    return ErrorBoundReport(
        index=i, computed=lam, rho_simple=rho, certified=True,
        delta=delta, tau0=tau0, rho_tight=rho_tight, improved=improved,
        delta_prime=delta_prime, r_quad=r, quad_bound=quad,
        cluster_indices=cluster_indices, cluster_radius=cluster_radius,
    )
