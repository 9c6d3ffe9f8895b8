"""Desk-scale generalized eigenvalue solvers used as verification oracles.

Two independent routes cover overlapping size ranges so each can validate
the other:

* :func:`eigenvalues_charpoly` interpolates det(a - z*b) on a circle,
  reads off the polynomial degree (hence the number of infinite
  eigenvalues), and polishes companion-matrix roots with Newton steps.
  Reliable up to n = 16.
* :func:`eigenvalues_qr` reduces b^{-1} a to Hessenberg form and runs a
  complex single-shift QR iteration with Wilkinson shifts.  Requires a
  well-conditioned b; up to n = 400.

:func:`tridiag_analytic` supplies closed-form eigenvalues for the
tridiagonal Toeplitz test pencil and serves as a third, fully independent
check.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import INFTY, ExtendedComplex, NumericalError, Pencil

__all__ = [
    "Spectrum",
    "SingularPencil",
    "NoConvergence",
    "IllConditionedB",
    "eigenvalues_charpoly",
    "eigenvalues_qr",
    "tridiag_analytic",
    "testmat_pencil",
    "match_spectra",
]

CHARPOLY_MAX_N = 16
QR_MAX_N = 400
DEGREE_TRIM_RTOL = 1e-10
QR_DEFLATION_EPS = 1e-13
QR_MAX_SWEEPS_PER_N = 50


class SingularPencil(NumericalError):
    """det(a - z*b) vanishes at every sample point; the pencil is likely singular."""


class NoConvergence(NumericalError):
    """QR iteration exceeded its sweep budget."""


class IllConditionedB(NumericalError):
    """b is too ill conditioned for the similarity b^{-1} a to be trustworthy."""


@dataclass(frozen=True)
class Spectrum:
    """Finite eigenvalues plus a count of infinite ones."""

    finite: tuple[complex, ...]
    infinite_count: int

    @property
    def n(self) -> int:
        return len(self.finite) + self.infinite_count

    def points(self) -> list[ExtendedComplex]:
        """All eigenvalues as extended-plane points."""
        return list(self.finite) + [INFTY] * self.infinite_count


def _sorted_eigs(values) -> tuple[complex, ...]:
    return tuple(sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag)))


def _logabsdet(m: np.ndarray) -> float:
    sign, logdet = np.linalg.slogdet(m)
    if sign == 0:
        return -math.inf
    return float(logdet)


def eigenvalues_charpoly(pencil: Pencil) -> Spectrum:
    """Spectrum via interpolation of det(a - z*b) at n+1 circle points.

    The sample circle radius 1 + ||a||_inf / max(eps, ||b||_inf) dominates
    the finite eigenvalue magnitudes, keeping the interpolation well
    conditioned.  Trailing polynomial coefficients below a relative
    threshold are trimmed to determine the degree d; the pencil then has
    n - d infinite eigenvalues.  Finite roots come from the companion
    matrix of the trimmed polynomial and are polished with two damped
    Newton steps on the determinant.
    """
    n = pencil.n
    if n > CHARPOLY_MAX_N:
        raise ValueError(f"charpoly oracle limited to n <= {CHARPOLY_MAX_N}, got {n}")
    a, b = pencil.a, pencil.b
    norm_a = float(np.abs(a).sum(axis=1).max())
    norm_b = float(np.abs(b).sum(axis=1).max())
    radius = 1.0 + norm_a / max(np.finfo(float).eps, norm_b)

    m = n + 1
    angles = 2.0 * np.pi * np.arange(m) / m
    samples = radius * np.exp(1j * angles)

    logdets = np.empty(m)
    signs = np.empty(m, dtype=complex)
    for k, lam in enumerate(samples):
        sign, logdet = np.linalg.slogdet(a - lam * b)
        signs[k] = sign
        logdets[k] = logdet if sign != 0 else -math.inf

    finite_logs = logdets[np.isfinite(logdets)]
    if finite_logs.size == 0:
        raise SingularPencil("determinant vanished at every sample point")
    log_max = float(finite_logs.max())
    # Hadamard row-norm bound on |det| gives the natural magnitude scale.
    log_scale = max(
        float(np.log(np.linalg.norm(a - lam * b, axis=1)).sum())
        for lam in samples
    )
    if log_max < math.log(DEGREE_TRIM_RTOL) + log_scale:
        raise SingularPencil("all determinant samples negligible against row-norm scale")

    values = np.where(np.isfinite(logdets), signs * np.exp(logdets - log_max), 0.0)
    # values[k] = p(radius * w^k) up to a common scale with w = e^{2pi i/m},
    # so fft/m recovers the coefficients of p in the variable mu = z/radius.
    coeffs = np.fft.fft(values) / m
    magnitude = np.abs(coeffs)
    threshold = DEGREE_TRIM_RTOL * magnitude.max()
    degree = 0
    for j in range(n, -1, -1):
        if magnitude[j] >= threshold:
            degree = j
            break

    if degree == 0:
        return Spectrum((), n)

    poly = coeffs[degree::-1]  # highest power first
    roots = radius * np.roots(poly)
    polished = [_polish_root(a, b, lam) for lam in roots]
    return Spectrum(_sorted_eigs(polished), n - degree)


def _polish_root(a: np.ndarray, b: np.ndarray, lam: complex) -> complex:
    """Two damped Newton steps on det(a - z*b), accepting only improvements.

    The Newton correction is 1 / trace((a - z*b)^{-1} b); a halved step is
    tried when the full step does not reduce |det|.
    """
    lam = complex(lam)
    current = _logabsdet(a - lam * b)
    for _ in range(2):
        try:
            x = np.linalg.solve(a - lam * b, b)
        except np.linalg.LinAlgError:
            break
        t = np.trace(x)
        if not np.isfinite(t) or t == 0:
            break
        step = 1.0 / t
        improved = False
        for factor in (1.0, 0.5):
            cand = lam + factor * step
            value = _logabsdet(a - cand * b)
            if value < current:
                lam, current = cand, value
                improved = True
                break
        if not improved:
            break
    return lam


def eigenvalues_qr(pencil: Pencil) -> Spectrum:
    """Spectrum via Hessenberg reduction of b^{-1} a and shifted QR iteration.

    Deflation accepts a subdiagonal entry as zero when it falls below
    ``QR_DEFLATION_EPS`` times the sum of the neighbouring diagonal moduli.
    Raises :class:`IllConditionedB` when the condition estimate of b exceeds
    1/(n * 1e-12), and :class:`NoConvergence` after 50*n sweeps.
    """
    n = pencil.n
    if n > QR_MAX_N:
        raise ValueError(f"qr oracle limited to n <= {QR_MAX_N}, got {n}")
    cond = _condition_estimate(pencil.b)
    if not math.isfinite(cond) or cond > 1.0 / (n * 1e-12):
        raise IllConditionedB(f"condition estimate {cond:.3e} exceeds budget")
    m = np.linalg.solve(pencil.b, pencil.a)
    h = _hessenberg(m)
    eigs = _qr_eigenvalues(h, max_sweeps=QR_MAX_SWEEPS_PER_N * n)
    return Spectrum(_sorted_eigs(eigs), 0)


def _condition_estimate(b: np.ndarray) -> float:
    try:
        return float(abs(np.linalg.cond(b, 1)))
    except np.linalg.LinAlgError:
        return math.inf


def _hessenberg(m: np.ndarray) -> np.ndarray:
    """Reduce m to upper Hessenberg form by Householder similarity."""
    h = np.array(m, dtype=complex)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        v = x.copy()
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v[0] += phase * norm_x
        v_norm = np.linalg.norm(v)
        if v_norm == 0.0:
            continue
        v /= v_norm
        # Apply P = I - 2 v v^H from the left and right.
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _wilkinson_shift(block: np.ndarray) -> complex:
    """Eigenvalue of the trailing 2x2 closest to its bottom-right entry."""
    x = block[0, 0]
    y = block[0, 1]
    z = block[1, 0]
    w = block[1, 1]
    d = (x - w) / 2.0
    disc = cmath.sqrt(d * d + y * z)
    # Pick the branch that avoids cancellation in the denominator.
    denom = d + disc if abs(d + disc) >= abs(d - disc) else d - disc
    if denom == 0:
        return w
    return w - y * z / denom


def _qr_eigenvalues(h: np.ndarray, max_sweeps: int) -> np.ndarray:
    n = h.shape[0]
    sweeps = 0
    stalls = 0
    hi = n - 1
    while hi > 0:
        # Deflate converged trailing eigenvalues and locate the active block.
        lo = hi
        while lo > 0:
            off = abs(h[lo, lo - 1])
            if off <= QR_DEFLATION_EPS * (abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])):
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            hi -= 1
            stalls = 0
            continue

        sweeps += 1
        if sweeps > max_sweeps:
            raise NoConvergence(f"no deflation after {max_sweeps} sweeps")
        stalls += 1
        block = h[lo:hi + 1, lo:hi + 1]
        if stalls % 16 == 0:
            # Exceptional shift to break rare cycling; Wilkinson otherwise.
            mu = block[-1, -1] + 1.5 * abs(block[-1, -2])
        else:
            mu = _wilkinson_shift(block[-2:, -2:])
        _shifted_qr_sweep(block, mu)
    return np.diag(h)


def _shifted_qr_sweep(s: np.ndarray, mu: complex) -> None:
    """One explicit single-shift QR similarity, in place on a Hessenberg block."""
    k = s.shape[0]
    idx = np.arange(k)
    s[idx, idx] -= mu
    rotations = []
    for j in range(k - 1):
        a = s[j, j]
        b = s[j + 1, j]
        r = math.hypot(abs(a), abs(b))
        if r == 0.0:
            c, sn = 1.0 + 0j, 0.0 + 0j
        else:
            c, sn = a.conjugate() / r, b.conjugate() / r
        rotations.append((c, sn))
        # Rows j, j+1 of the (shifted) matrix: G @ [row_j; row_j+1].
        row_j = s[j, j:].copy()
        row_j1 = s[j + 1, j:].copy()
        s[j, j:] = c * row_j + sn * row_j1
        s[j + 1, j:] = -sn.conjugate() * row_j + c.conjugate() * row_j1
    for j, (c, sn) in enumerate(rotations):
        # Columns j, j+1: [col_j, col_j+1] @ G^H.
        top = min(j + 2, k - 1)
        col_j = s[: top + 1, j].copy()
        col_j1 = s[: top + 1, j + 1].copy()
        s[: top + 1, j] = c.conjugate() * col_j + sn.conjugate() * col_j1
        s[: top + 1, j + 1] = -sn * col_j + c * col_j1
    s[idx, idx] += mu


def tridiag_analytic(n: int, a: float, b: float) -> Spectrum:
    """Closed-form spectrum of the tridiagonal Toeplitz test pencil.

    Both matrices have 4 on the diagonal and a (resp. b) on the first
    off-diagonals; they share the discrete sine eigenvectors, so the pencil
    eigenvalues are the ratios (4 + 2a*cos(k*pi/(n+1)))/(4 + 2b*cos(...)).
    Raises :class:`NumericalError` when a denominator (nearly) vanishes,
    which signals a (near-)infinite eigenvalue configuration.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = np.arange(1, n + 1)
    c = np.cos(k * np.pi / (n + 1))
    num = 4.0 + 2.0 * a * c
    den = 4.0 + 2.0 * b * c
    floor = 1e-12 * (4.0 + 2.0 * abs(b))
    if np.any(np.abs(den) < floor):
        raise NumericalError("denominator vanishes: (near-)infinite eigenvalue configuration")
    return Spectrum(_sorted_eigs(num / den), 0)


def testmat_pencil(n: int, a: float, b: float) -> Pencil:
    """The tridiagonal Toeplitz test pencil with diagonal 4 and couplings a, b."""
    if n < 1:
        raise ValueError("n must be positive")
    mat_a = 4.0 * np.eye(n, dtype=complex)
    mat_b = 4.0 * np.eye(n, dtype=complex)
    idx = np.arange(n - 1)
    mat_a[idx, idx + 1] = a
    mat_a[idx + 1, idx] = a
    mat_b[idx, idx + 1] = b
    mat_b[idx + 1, idx] = b
    return Pencil(mat_a, mat_b)


def match_spectra(first: Spectrum, second: Spectrum) -> float:
    """Largest pairing distance of the two finite eigenvalue multisets.

    Uses an optimal assignment, so reordering does not matter.  Raises
    ``ValueError`` when the finite counts differ.
    """
    from scipy.optimize import linear_sum_assignment

    xs = np.asarray(first.finite)
    ys = np.asarray(second.finite)
    if xs.size != ys.size:
        raise ValueError(f"finite counts differ: {xs.size} vs {ys.size}")
    if xs.size == 0:
        return 0.0
    cost = np.abs(xs[:, None] - ys[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())
