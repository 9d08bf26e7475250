"""Two-variable means and distances on the positive definite cone.

All means take ``(A, B, t)`` with ``t`` in ``[0, 1]`` and return a
:class:`~pdmeans.linalg_core.PositiveDefiniteMatrix`; ``t = 0`` gives ``A``
and ``t = 1`` gives ``B``.
"""
from __future__ import annotations

import enum
import math

import numpy as np

from pdmeans.linalg_core import (
    DimensionError,
    PositiveDefiniteMatrix,
    congruence,
    exp_h,
    gram_power,
    inv_h,
    log_h,
    power_h,
    sqrt_h,
)


class MeanKind(enum.Enum):
    METRIC_GEOMETRIC = "metric"
    SPECTRAL_GEOMETRIC = "spectral"
    WASSERSTEIN = "wasserstein"
    LOG_EUCLIDEAN = "logeuclidean"


def check_weight(t: float) -> float:
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"weight t must lie in [0, 1], got {t}")
    return t


def _pair(A, B) -> tuple[PositiveDefiniteMatrix, PositiveDefiniteMatrix]:
    if not isinstance(A, PositiveDefiniteMatrix):
        A = PositiveDefiniteMatrix(A)
    if not isinstance(B, PositiveDefiniteMatrix):
        B = PositiveDefiniteMatrix(B)
    if A.dim != B.dim:
        raise DimensionError(f"dimension mismatch: {A.dim} vs {B.dim}")
    return A, B


def metric_geometric(A, B, t: float) -> PositiveDefiniteMatrix:
    """``A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}``.

    The inner power is taken as ``(Y* Y)^t`` with ``Y = B^{1/2} A^{-1/2}``,
    from the singular values of ``Y``; forming the congruence first would
    square its condition number.
    """
    A, B = _pair(A, B)
    t = check_weight(t)
    inner = gram_power(sqrt_h(B).entries @ power_h(A, -0.5).entries, t)
    return PositiveDefiniteMatrix(congruence(sqrt_h(A), inner))


def geometric_midpoint(A, B) -> PositiveDefiniteMatrix:
    return metric_geometric(A, B, 0.5)


def _inverse_midpoint(A: PositiveDefiniteMatrix, B: PositiveDefiniteMatrix) -> PositiveDefiniteMatrix:
    # A^{-1} # B, the matrix that carries A onto B in both the spectral
    # geometric and the Wasserstein constructions
    return metric_geometric(inv_h(A), B, 0.5)


def spectral_geometric(A, B, t: float) -> PositiveDefiniteMatrix:
    """``C^t A C^t`` with ``C = A^{-1} # B``."""
    A, B = _pair(A, B)
    t = check_weight(t)
    C = _inverse_midpoint(A, B)
    return PositiveDefiniteMatrix(congruence(power_h(C, t), A))


def wasserstein(A, B, t: float) -> PositiveDefiniteMatrix:
    """Bures-Wasserstein interpolant in quadratic form.

    ``(1-t)^2 A + t^2 B + t(1-t) (A C + C A)`` with ``C = A^{-1} # B``.
    """
    A, B = _pair(A, B)
    t = check_weight(t)
    C = _inverse_midpoint(A, B).entries
    a = A.entries
    cross = a @ C + C @ a
    return PositiveDefiniteMatrix((1 - t) ** 2 * a + t**2 * B.entries + t * (1 - t) * cross)


def wasserstein_alt(A, B, t: float) -> PositiveDefiniteMatrix:
    """Bures-Wasserstein interpolant as a congruence.

    ``A^{-1/2} [(1-t) A + t (A^{1/2} B A^{1/2})^{1/2}]^2 A^{-1/2}``. Kept
    separate from :func:`wasserstein` so the two can check each other.
    """
    A, B = _pair(A, B)
    t = check_weight(t)
    root = _cross_root(A, B)
    middle = (1 - t) * A.entries + t * root.entries
    return PositiveDefiniteMatrix(congruence(power_h(A, -0.5), middle @ middle))


def _cross_root(A: PositiveDefiniteMatrix, B: PositiveDefiniteMatrix) -> PositiveDefiniteMatrix:
    # (A^{1/2} B A^{1/2})^{1/2} = |B^{1/2} A^{1/2}|
    return gram_power(sqrt_h(B).entries @ sqrt_h(A).entries, 0.5)


def log_euclidean(A, B, t: float) -> PositiveDefiniteMatrix:
    """``exp((1-t) log A + t log B)``."""
    A, B = _pair(A, B)
    t = check_weight(t)
    return exp_h((1 - t) * log_h(A).entries + t * log_h(B).entries)


_MEANS = {
    MeanKind.METRIC_GEOMETRIC: metric_geometric,
    MeanKind.SPECTRAL_GEOMETRIC: spectral_geometric,
    MeanKind.WASSERSTEIN: wasserstein,
    MeanKind.LOG_EUCLIDEAN: log_euclidean,
}


def mean(kind: MeanKind | str, A, B, t: float) -> PositiveDefiniteMatrix:
    return _MEANS[MeanKind(kind)](A, B, t)


def power_deformed(kind: MeanKind | str, A, B, t: float, p: float) -> PositiveDefiniteMatrix:
    """``(A^p sigma_t B^p)^{1/p}`` for the mean ``sigma`` named by ``kind``.

    ``p = 0`` is rejected; its limit is :func:`log_euclidean`, which callers
    must request explicitly.
    """
    p = float(p)
    if p == 0.0:
        raise ValueError("p must be nonzero; use log_euclidean for the p -> 0 limit")
    A, B = _pair(A, B)
    inner = mean(kind, power_h(A, p), power_h(B, p), t)
    return power_h(inner, 1.0 / p)


def wasserstein_distance(A, B) -> float:
    """``[tr((A + B)/2) - tr (A^{1/2} B A^{1/2})^{1/2}]^{1/2}``.

    A radicand below ``-1e-12`` raises ``ArithmeticError``; smaller negative
    values are rounding and are clamped to zero.
    """
    A, B = _pair(A, B)
    fidelity = float(np.sum(_cross_root(A, B).spectrum.values))
    half_trace = 0.5 * float(np.trace(A.entries).real + np.trace(B.entries).real)
    radicand = half_trace - fidelity
    if radicand < -1e-12:
        raise ArithmeticError(f"negative Wasserstein radicand {radicand:.3e}")
    return math.sqrt(max(radicand, 0.0))


def riemannian_distance(A, B) -> float:
    """``||log(A^{-1/2} B A^{-1/2})||_F``."""
    A, B = _pair(A, B)
    inner = gram_power(sqrt_h(B).entries @ power_h(A, -0.5).entries, 1.0)
    return float(np.sqrt(np.sum(np.log(inner.spectrum.values) ** 2)))
