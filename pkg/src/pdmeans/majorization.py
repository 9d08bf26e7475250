"""Weak log-majorization and log-majorization between positive spectra.

All comparisons are made on prefix sums of logarithms, never on raw
products, so spectra with a wide dynamic range neither overflow nor
underflow.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pdmeans.linalg_core import DimensionError, PositiveDefiniteMatrix

DEFAULT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PositiveTuple:
    """Strictly positive reals in non-increasing order."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float).ravel()
        if vals.size == 0:
            raise ValueError("empty tuple")
        if not np.all(vals > 0):
            raise ValueError("entries must be strictly positive")
        if np.any(np.diff(vals) > 0):
            raise ValueError("entries must be non-increasing")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_unsorted(cls, values) -> PositiveTuple:
        vals = np.asarray(values, dtype=float).ravel()
        return cls(np.sort(vals, kind="stable")[::-1])

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of ``x <_wlog y``.

    ``slack[k]`` is the log-scale margin of the (k+1)-th prefix inequality,
    ``sum_{i<=k} (log y_i - log x_i)``.
    """

    weak_log: bool
    log: bool
    slack: tuple[float, ...]

    @property
    def min_slack(self) -> float:
        return min(self.slack)

    @property
    def end_slack(self) -> float:
        return self.slack[-1]

    def to_dict(self) -> dict:
        return {"weak_log": self.weak_log, "log": self.log, "slack": list(self.slack)}


def _as_positive_tuple(x) -> PositiveTuple:
    if isinstance(x, PositiveTuple):
        return x
    return PositiveTuple.from_unsorted(x)


def sorted_spectrum(A) -> PositiveTuple:
    """Eigenvalues of a positive definite matrix, non-increasing."""
    if not isinstance(A, PositiveDefiniteMatrix):
        A = PositiveDefiniteMatrix(A)
    return PositiveTuple(A.spectrum.values)


def log_prefix_slack(x, y) -> np.ndarray:
    """Prefix gaps ``cumsum(log y) - cumsum(log x)`` of the sorted tuples."""
    x = _as_positive_tuple(x)
    y = _as_positive_tuple(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return np.cumsum(np.log(y.values) - np.log(x.values))


def weak_log_majorizes(x, y, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """Decide whether ``x`` is weakly log-majorized by ``y``.

    ``weak_log`` holds when every prefix slack is at least ``-tol``; ``log``
    additionally requires the full-length slack to be within ``tol`` of zero.
    Unsorted array-likes are sorted first.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    slack = log_prefix_slack(x, y)
    weak = bool(np.all(slack >= -tol))
    return MajorizationVerdict(
        weak_log=weak,
        log=weak and bool(abs(slack[-1]) <= tol),
        slack=tuple(float(s) for s in slack),
    )


def matrix_wlog(A, B, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """``lambda(A) <_wlog lambda(B)`` for positive definite ``A`` and ``B``."""
    x = sorted_spectrum(A)
    y = sorted_spectrum(B)
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return weak_log_majorizes(x, y, tol)
