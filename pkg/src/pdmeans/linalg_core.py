"""Dense Hermitian linear algebra on small matrices.

Everything here is built on one eigensolver (cyclic Jacobi, see
:mod:`pdmeans._jacobi`). Matrix functions go through the spectral
calculus ``U diag(f(lambda)) U*``, and every product that is Hermitian in
exact arithmetic is passed through :func:`hermitian_part` before it is
wrapped.
"""
from __future__ import annotations

import contextlib
import contextvars
import functools
import json
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from pdmeans._jacobi import jacobi_hermitian, jacobi_right_svd

PD_TOLERANCE = 1e-12
RECON_TOLERANCE = 1e-10
ASYMMETRY_TOLERANCE = 1e-12


class DimensionError(ValueError):
    """Raised on non-square input or mismatched dimensions."""


class DomainError(ValueError):
    """Raised when a scalar function is undefined on some eigenvalue."""


class ConvergenceError(ArithmeticError):
    """Raised when the Jacobi iteration exhausts its sweep budget."""


class NotPositiveDefiniteError(ValueError):
    """Raised when a matrix fails the positive definiteness check."""


@dataclass(frozen=True)
class EigSettings:
    """Eigensolver knobs: off-diagonal threshold relative to the Frobenius
    norm, and the sweep budget."""

    tol: float = 1e-14
    max_sweeps: int = 100


_EIG_SETTINGS: contextvars.ContextVar[EigSettings] = contextvars.ContextVar(
    "pdmeans_eig_settings", default=EigSettings()
)


def current_eig_settings() -> EigSettings:
    return _EIG_SETTINGS.get()


@contextlib.contextmanager
def eig_settings(tol: float | None = None, max_sweeps: int | None = None) -> Iterator[EigSettings]:
    """Temporarily override the eigensolver settings for the current context.

    Matrices keep the decomposition computed when they were first asked for
    it, so values that must be recomputed under tighter settings have to be
    rebuilt inside the ``with`` block.
    """
    base = _EIG_SETTINGS.get()
    new = EigSettings(
        tol=base.tol if tol is None else tol,
        max_sweeps=base.max_sweeps if max_sweeps is None else max_sweeps,
    )
    token = _EIG_SETTINGS.set(new)
    try:
        yield new
    finally:
        _EIG_SETTINGS.reset(token)


def _as_square(M) -> np.ndarray:
    if isinstance(M, HermitianMatrix):
        return M.entries
    arr = np.asarray(M, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 1:
        raise DimensionError("matrix dimension must be at least 1")
    return arr


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues (or singular values) in non-increasing order."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float).ravel()
        if np.any(np.diff(vals) > 0):
            raise ValueError("spectrum values must be non-increasing")
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_unsorted(cls, values) -> Spectrum:
        vals = np.asarray(values, dtype=float).ravel()
        return cls(np.sort(vals, kind="stable")[::-1])

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, k):
        return self.values[k]

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Unitary ``basis`` (eigenvectors as columns) and matching ``spectrum``."""

    basis: np.ndarray
    spectrum: Spectrum

    def reconstruct(self) -> np.ndarray:
        return (self.basis * self.spectrum.values) @ self.basis.conj().T

    def apply(self, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        return (self.basis * f(self.spectrum.values)) @ self.basis.conj().T


class HermitianMatrix:
    """Dense complex Hermitian matrix; immutable.

    The constructor symmetrises its argument, so ``entries`` is exactly
    conjugate-symmetric. Use :func:`read_matrix` when the input should be
    rejected rather than repaired.
    """

    __slots__ = ("_entries", "_decomposition", "__weakref__")

    def __init__(self, entries, *, _decomposition: SpectralDecomposition | None = None):
        arr = _as_square(entries)
        self._entries = _frozen(0.5 * (arr + arr.conj().T))
        self._decomposition = _decomposition

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    @property
    def decomposition(self) -> SpectralDecomposition:
        # write-once cache; a racing duplicate computation is harmless
        if self._decomposition is None:
            self._decomposition = eig_h(self)
        return self._decomposition

    @property
    def spectrum(self) -> Spectrum:
        return self.decomposition.spectrum

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._entries
        return self._entries.astype(dtype)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class PositiveDefiniteMatrix(HermitianMatrix):
    """Hermitian matrix whose eigenvalues all exceed ``PD_TOLERANCE`` times
    the largest eigenvalue magnitude."""

    __slots__ = ()

    def __init__(self, entries, *, _decomposition: SpectralDecomposition | None = None):
        super().__init__(entries, _decomposition=_decomposition)
        lam = self.spectrum.values
        scale = np.max(np.abs(lam))
        if not lam[-1] > PD_TOLERANCE * scale:
            raise NotPositiveDefiniteError(
                f"smallest eigenvalue {lam[-1]:.3e} is not positive relative to {scale:.3e}"
            )

    @classmethod
    def from_decomposition(cls, basis: np.ndarray, values: np.ndarray) -> PositiveDefiniteMatrix:
        """Build ``basis diag(values) basis*`` and keep the factorisation."""
        order = np.argsort(-np.asarray(values, dtype=float), kind="stable")
        basis = np.asarray(basis, dtype=np.complex128)[:, order]
        values = np.asarray(values, dtype=float)[order]
        dec = SpectralDecomposition(_frozen(basis), Spectrum(values))
        return cls(dec.reconstruct(), _decomposition=dec)


def hermitian_part(M) -> HermitianMatrix:
    """Return ``(M + M*) / 2``."""
    return HermitianMatrix(_as_square(M))


def eig_h(H) -> SpectralDecomposition:
    """Spectral decomposition of a Hermitian matrix by cyclic Jacobi.

    The spectrum is sorted non-increasing (stable on ties) and the basis
    columns are permuted to match.

    Raises
    ------
    ConvergenceError
        If the off-diagonal mass is still above threshold after the sweep
        budget of the current :class:`EigSettings`.
    """
    if isinstance(H, HermitianMatrix):
        arr = H.entries
    else:
        arr = hermitian_part(H).entries
    settings = current_eig_settings()
    w, v, sweeps, converged = jacobi_hermitian(
        np.ascontiguousarray(arr), settings.tol, settings.max_sweeps
    )
    if not converged:
        raise ConvergenceError(
            f"Jacobi did not converge in {settings.max_sweeps} sweeps (tol={settings.tol:g})"
        )
    order = np.argsort(-w, kind="stable")
    basis = v[:, order]
    basis.flags.writeable = False
    return SpectralDecomposition(basis, Spectrum(w[order]))


def fun_h(H, f: Callable[[np.ndarray], np.ndarray]) -> HermitianMatrix:
    """Apply the real scalar function ``f`` through the spectral calculus.

    ``f`` receives the eigenvalue array and must return an array of the same
    shape. Non-finite outputs are reported as a :class:`DomainError`.
    """
    if not isinstance(H, HermitianMatrix):
        H = HermitianMatrix(H)
    dec = H.decomposition
    lam = dec.spectrum.values
    with np.errstate(all="ignore"):
        vals = np.asarray(f(lam), dtype=float)
    bad = ~np.isfinite(vals)
    if np.any(bad):
        raise DomainError(f"function undefined at eigenvalue {lam[bad][0]!r}")
    return HermitianMatrix(dec.apply(lambda _: vals))


def power_h(A: PositiveDefiniteMatrix, p: float) -> PositiveDefiniteMatrix:
    """``A**p`` for real ``p``; reuses and propagates A's eigenbasis."""
    if not isinstance(A, PositiveDefiniteMatrix):
        A = PositiveDefiniteMatrix(A)
    dec = A.decomposition
    return PositiveDefiniteMatrix.from_decomposition(dec.basis, dec.spectrum.values ** float(p))


def sqrt_h(A: PositiveDefiniteMatrix) -> PositiveDefiniteMatrix:
    return power_h(A, 0.5)


def inv_h(A: PositiveDefiniteMatrix) -> PositiveDefiniteMatrix:
    return power_h(A, -1.0)


def log_h(A: PositiveDefiniteMatrix) -> HermitianMatrix:
    if not isinstance(A, PositiveDefiniteMatrix):
        A = PositiveDefiniteMatrix(A)
    return fun_h(A, np.log)


def exp_h(H) -> PositiveDefiniteMatrix:
    if not isinstance(H, HermitianMatrix):
        H = HermitianMatrix(H)
    dec = H.decomposition
    return PositiveDefiniteMatrix.from_decomposition(dec.basis, np.exp(dec.spectrum.values))


def congruence(X, H) -> HermitianMatrix:
    """``X H X*``, symmetrised."""
    x = _as_square(X)
    h = _as_square(H)
    if x.shape != h.shape:
        raise DimensionError(f"dimension mismatch: {x.shape} vs {h.shape}")
    return hermitian_part(x @ h @ x.conj().T)


def loewner_leq(A, B, tol: float = 1e-9) -> bool:
    """Decide ``A <= B`` in the Loewner order.

    True iff ``min eig(B - A) >= -tol * max(||B - A||_2, 1)``.
    """
    a = _as_square(A)
    b = _as_square(B)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    lam = eig_h(hermitian_part(b - a)).spectrum.values
    scale = max(np.max(np.abs(lam)), 1.0)
    return bool(lam[-1] >= -tol * scale)


def loewner_margin(A, B) -> float:
    """Smallest eigenvalue of ``B - A`` (non-negative iff ``A <= B``)."""
    a = _as_square(A)
    b = _as_square(B)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(eig_h(hermitian_part(b - a)).spectrum.values[-1])


def _right_svd(Y) -> tuple[np.ndarray, np.ndarray]:
    y = np.ascontiguousarray(_as_square(Y))
    settings = current_eig_settings()
    # column cosines cannot be resolved below ~ m * eps
    tol = max(settings.tol, y.shape[0] * np.finfo(float).eps)
    sv, v, sweeps, converged = jacobi_right_svd(y, tol, settings.max_sweeps)
    if not converged:
        raise ConvergenceError(
            f"one-sided Jacobi did not converge in {settings.max_sweeps} sweeps (tol={tol:g})"
        )
    return sv, v


def singular_values(X) -> Spectrum:
    """Eigenvalues of ``(X* X)^{1/2}``, non-increasing.

    Computed by one-sided Jacobi on ``X`` itself, which keeps small
    singular values accurate relative to their size.
    """
    sv, _ = _right_svd(X)
    return Spectrum.from_unsorted(sv)


def gram_power(Y, p: float) -> PositiveDefiniteMatrix:
    """``(Y* Y)^p`` for invertible ``Y``, assembled from the singular value
    decomposition of ``Y`` so that ``Y* Y`` is never formed."""
    sv, v = _right_svd(Y)
    return PositiveDefiniteMatrix.from_decomposition(v, sv ** (2.0 * float(p)))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Unitary factor of a complex Gaussian matrix, phases fixed so the
    distribution is Haar."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_pd(dim: int, log_cond_max: float, seed: int) -> PositiveDefiniteMatrix:
    """Seeded random positive definite matrix ``Q diag(lam) Q*``.

    Eigenvalues are log-uniform in ``[exp(-c/2), exp(c/2)]`` with
    ``c = log_cond_max``, so the condition number never exceeds
    ``exp(log_cond_max)``.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if log_cond_max < 0:
        raise ValueError(f"log_cond_max must be >= 0, got {log_cond_max}")
    rng = np.random.default_rng(seed)
    q = random_unitary(dim, rng)
    lam = np.exp(rng.uniform(-log_cond_max / 2, log_cond_max / 2, size=dim))
    return PositiveDefiniteMatrix.from_decomposition(q, lam)


def relative_error(X, Y) -> float:
    """``||X - Y||_F / ||Y||_F`` (absolute when ``Y`` is zero)."""
    x = np.asarray(X, dtype=np.complex128)
    y = np.asarray(Y, dtype=np.complex128)
    denom = np.linalg.norm(y)
    diff = np.linalg.norm(x - y)
    return float(diff / denom) if denom > 0 else float(diff)


# -- matrix file format -------------------------------------------------------


def matrix_to_json(M) -> dict:
    arr = _as_square(M)
    return {
        "dim": arr.shape[0],
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in arr],
    }


def matrix_from_json(obj: dict, positive_definite: bool = False) -> HermitianMatrix:
    """Parse ``{"dim": m, "entries": [[[re, im], ...], ...]}``.

    Rejects data whose asymmetry ``||M - M*||_F / ||M||_F`` exceeds
    ``ASYMMETRY_TOLERANCE``.
    """
    try:
        dim = int(obj["dim"])
        raw = np.asarray(obj["entries"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if raw.shape != (dim, dim, 2):
        raise DimensionError(f"entries shape {raw.shape} does not match dim {dim}")
    arr = raw[..., 0] + 1j * raw[..., 1]
    norm = np.linalg.norm(arr)
    asym = np.linalg.norm(arr - arr.conj().T)
    if asym > ASYMMETRY_TOLERANCE * max(norm, np.finfo(float).tiny):
        raise ValueError(f"matrix is not Hermitian (relative asymmetry {asym / norm:.3e})")
    cls = PositiveDefiniteMatrix if positive_definite else HermitianMatrix
    return cls(arr)


def read_matrix(path, positive_definite: bool = False) -> HermitianMatrix:
    with open(path) as fh:
        return matrix_from_json(json.load(fh), positive_definite=positive_definite)


def write_matrix(M, path) -> None:
    with open(path, "w") as fh:
        json.dump(matrix_to_json(M), fh)
        fh.write("\n")


@functools.lru_cache(maxsize=None)
def identity(dim: int) -> PositiveDefiniteMatrix:
    return PositiveDefiniteMatrix.from_decomposition(np.eye(dim), np.ones(dim))
