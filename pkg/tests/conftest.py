"""Shared random-pencil generators for the test suite."""
from __future__ import annotations

import numpy as np

from gersh import Pencil


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def boost_row(matrix: np.ndarray, i: int, rng: np.random.Generator, slack: float = 0.5) -> None:
    """Make row i of the matrix strictly diagonally dominant in place."""
    off = np.abs(matrix[i]).sum() - abs(matrix[i, i])
    phase = np.exp(2j * np.pi * rng.random())
    matrix[i, i] = phase * (off + slack + abs(rng.standard_normal()))


def dominant_pencil(rng: np.random.Generator, n: int) -> Pencil:
    """Gaussian pencil with each row of a or b made strictly dominant."""
    a = complex_gaussian(rng, (n, n))
    b = complex_gaussian(rng, (n, n))
    for i in range(n):
        boost_row(a if rng.random() < 0.5 else b, i, rng)
    return Pencil(a, b)


def separated_ratio_pencil(rng: np.random.Generator, n: int, spacing: float = 8.0) -> Pencil:
    """Strictly dominant b with well-separated diagonal ratios a_ii/b_ii."""
    b = 0.08 * complex_gaussian(rng, (n, n))
    a = 0.08 * complex_gaussian(rng, (n, n))
    for i in range(n):
        b[i, i] = 1.0 + 0.2 * rng.random()
        off = np.abs(b[i]).sum() - abs(b[i, i])
        if off >= 0.8 * abs(b[i, i]):
            scale = 0.5 * abs(b[i, i]) / off
            b[i, :i] *= scale
            b[i, i + 1:] *= scale
        ratio = spacing * i + rng.uniform(-0.5, 0.5) + 0.3j * rng.standard_normal()
        a[i, i] = ratio * b[i, i]
    return Pencil(a, b)


def residual_example(rng: np.random.Generator, n: int, scale: float):
    """Diagonal eigenvalues plus residual matrices (e, f) of the given size."""
    lambdas = np.sort(rng.uniform(1.0, 2.0 * n, n)) * np.exp(
        0.2j * rng.standard_normal(n)
    )
    e = scale * complex_gaussian(rng, (n, n))
    f = scale * complex_gaussian(rng, (n, n))
    np.fill_diagonal(e, 0.0)
    np.fill_diagonal(f, 0.0)
    ahat = np.diag(lambdas) + e
    bhat = np.eye(n, dtype=complex) + f
    return ahat, bhat
