"""Randomised property suites for the inequalities between the means.

Each ``check_*`` function tests one instance and returns a
:class:`VerificationReport` with ``trials == 1``; the ``suite_*`` runners
sweep a seeded corpus and merge those reports, tagging every failure with
the ``(seed, dim, trial)`` triple needed to rebuild the instance.

Tolerance policy: majorization slacks are compared on the log scale with an
absolute ``tol``; matrix identities use relative Frobenius error.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from pdmeans.linalg_core import (
    PositiveDefiniteMatrix,
    eig_h,
    hermitian_part,
    identity,
    inv_h,
    loewner_leq,
    loewner_margin,
    power_h,
    random_pd,
    relative_error,
    sqrt_h,
)
from pdmeans.majorization import matrix_wlog
from pdmeans.means import (
    MeanKind,
    check_weight,
    log_euclidean,
    metric_geometric,
    power_deformed,
    spectral_geometric,
    wasserstein,
)

CHAIN_WEIGHTS = (0.1, 0.25, 0.5, 0.75, 0.9)
LEMMA_WEIGHTS = (0.0, 0.25, 0.5, 0.75, 1.0)
LEMMA_SCALARS = (0.5, 3.0)
SCALAR_F_WEIGHTS = (0.05, 0.1, 0.25, 0.5)
NON_EQUAL_THRESHOLD = 1e-3
STRICT_MARGIN = 1e-12
CONVERGENCE_CONSTANT = 50.0
NEAR_EQUAL_SIZE = 1e-4
# boundary points of the admissible interval are accepted up to rounding
BOUNDARY_RTOL = 1e-12


@dataclass
class VerificationReport:
    suite: str
    trials: int = 0
    failures: list[dict] = field(default_factory=list)
    min_slack: float = math.inf

    @property
    def passed(self) -> bool:
        return not self.failures

    def margin(self, check: str, value: float, tol: float, **context) -> None:
        """Record an inequality margin; below ``-tol`` is a failure."""
        value = float(value)
        self.min_slack = min(self.min_slack, value)
        if value < -tol:
            self.failures.append({"check": check, "slack": value, **context})

    def residual(self, check: str, value: float, bound: float, **context) -> None:
        """Record an identity residual; above ``bound`` is a failure."""
        value = float(value)
        self.min_slack = min(self.min_slack, -value)
        if value > bound:
            self.failures.append({"check": check, "residual": value, **context})

    def bounded(self, check: str, value: float, bound: float, **context) -> None:
        """Record a quantity outside the governing inequality that must not
        exceed ``bound``; leaves ``min_slack`` alone."""
        value = float(value)
        if value > bound:
            self.failures.append({"check": check, "value": value, "bound": bound, **context})

    def require(self, check: str, value: float, threshold: float, **context) -> None:
        """Record a quantity that must strictly exceed ``threshold``."""
        value = float(value)
        if not value > threshold:
            self.failures.append({"check": check, "value": value, **context})

    def absorb(self, other: VerificationReport, **context) -> None:
        self.trials += other.trials
        self.min_slack = min(self.min_slack, other.min_slack)
        for failure in other.failures:
            self.failures.append({**context, **failure})

    def to_dict(self) -> dict:
        out = asdict(self)
        out["min_slack"] = None if math.isinf(self.min_slack) else self.min_slack
        out["passed"] = self.passed
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.suite}: {self.trials} checks, "
            f"{len(self.failures)} failures, min slack {self.min_slack:.3e}"
        )


@dataclass(frozen=True)
class SpectrumExtremes:
    alpha: float
    beta: float


@dataclass(frozen=True)
class TInterval:
    """``(0, lo_upper] U [hi_lower, 1)`` with ``lo_upper + hi_lower = 1``."""

    extremes: SpectrumExtremes
    lo_upper: float
    hi_lower: float

    def contains(self, t: float, rtol: float = BOUNDARY_RTOL) -> bool:
        if not 0.0 < t < 1.0:
            return False
        return t <= self.lo_upper * (1 + rtol) or t >= self.hi_lower * (1 - rtol)


def spectrum_extremes(B) -> SpectrumExtremes:
    lam = _pd(B).spectrum.values
    return SpectrumExtremes(alpha=float(lam[-1]), beta=float(lam[0]))


def admissible_t_interval(B) -> TInterval:
    """Weights for which the square-root monotonicity is claimed, from the
    extreme eigenvalues ``alpha <= beta`` of ``B``."""
    ext = spectrum_extremes(B)
    ra, rb = math.sqrt(ext.alpha), math.sqrt(ext.beta)
    return TInterval(ext, lo_upper=ra / (ra + rb), hi_lower=rb / (ra + rb))


def _pd(X) -> PositiveDefiniteMatrix:
    return X if isinstance(X, PositiveDefiniteMatrix) else PositiveDefiniteMatrix(X)


def _scaled(X: PositiveDefiniteMatrix, c: float) -> PositiveDefiniteMatrix:
    dec = X.decomposition
    return PositiveDefiniteMatrix.from_decomposition(dec.basis, c * dec.spectrum.values)


def _logdet(X: PositiveDefiniteMatrix) -> float:
    return float(np.sum(np.log(X.spectrum.values)))


def _distance(A, B) -> float:
    return float(np.linalg.norm(A.entries - B.entries))


# -- single-instance checks ---------------------------------------------------


def check_chain(A, B, t: float, tol: float = 1e-8) -> VerificationReport:
    """Metric geometric <_log log-Euclidean <_log spectral geometric <_wlog
    Wasserstein, at weight ``t``."""
    A, B = _pd(A), _pd(B)
    t = check_weight(t)
    G = metric_geometric(A, B, t)
    L = log_euclidean(A, B, t)
    S = spectral_geometric(A, B, t)
    W = wasserstein(A, B, t)
    report = VerificationReport("chain", trials=1)
    for name, lower, upper, exact in (
        ("metric<log_euclidean", G, L, True),
        ("log_euclidean<spectral", L, S, True),
        ("spectral<wasserstein", S, W, False),
    ):
        verdict = matrix_wlog(lower, upper, tol)
        report.margin(name, verdict.min_slack, tol, t=t)
        if exact:
            report.residual(name + ":det", abs(verdict.end_slack), tol, t=t)
    return report


def check_main_theorem(
    A, B, t: float, tol: float = 1e-8, strict_margin: float = STRICT_MARGIN
) -> VerificationReport:
    """Spectral geometric <_wlog Wasserstein, plus strict determinant gap
    for distinct inputs and interior weights."""
    A, B = _pd(A), _pd(B)
    t = check_weight(t)
    S = spectral_geometric(A, B, t)
    W = wasserstein(A, B, t)
    verdict = matrix_wlog(S, W, tol)
    report = VerificationReport("main_theorem", trials=1)
    report.margin("spectral<wasserstein", verdict.min_slack, tol, t=t)
    if 0.0 < t < 1.0 and _distance(A, B) >= NON_EQUAL_THRESHOLD:
        report.require("det_strict", verdict.end_slack, strict_margin, t=t)
    return report


def scalar_f(lam, t: float):
    """``(1/t) lam^{(1-t)/(2t)} + (1 - 1/t) lam^{1/(2t)} - 1`` for
    ``0 < t <= 1/2``; accepts scalars or arrays."""
    t = float(t)
    if not 0.0 < t <= 0.5:
        raise ValueError(f"t must lie in (0, 1/2], got {t}")
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise ValueError("lambda must be positive")
    out = (1 / t) * lam ** ((1 - t) / (2 * t)) + (1 - 1 / t) * lam ** (1 / (2 * t)) - 1
    return float(out) if out.ndim == 0 else out


def scalar_f_grid(points: int = 401) -> np.ndarray:
    grid = np.logspace(-4.0, 4.0, points)
    grid[points // 2] = 1.0
    return grid


def check_scalar_f(t: float, tol: float = 1e-12, points: int = 401) -> VerificationReport:
    grid = scalar_f_grid(points)
    values = scalar_f(grid, t)
    report = VerificationReport("scalar_f", trials=1)
    report.margin("f<=0", -float(np.max(values)), tol, t=t)
    report.residual("argmax_at_1", abs(float(np.max(values)) - scalar_f(1.0, t)), tol, t=t)
    return report


def check_sym_product(A, B, tol: float = 1e-8) -> VerificationReport:
    """``B <= I  =>  AB + BA <= 2A``, with ``B`` rescaled to ``lambda_1 = 1``,
    and the inner eigenvalue bound used to argue it."""
    A, B = _pd(A), _pd(B)
    Bs = _scaled(B, 1.0 / B.spectrum.values[0])
    a, b = A.entries, Bs.entries
    report = VerificationReport("sym_product", trials=1)
    lhs = hermitian_part(a @ b + b @ a)
    gap = hermitian_part(2 * a - lhs.entries)
    scale = max(float(np.max(np.abs(gap.spectrum.values))), 1.0)
    report.margin("AB+BA<=2A", gap.spectrum.values[-1] / scale, tol)
    ah, aih = sqrt_h(A).entries, power_h(A, -0.5).entries
    X = hermitian_part(0.5 * (ah @ b @ aih + aih @ b @ ah))
    lam_b = Bs.spectrum.values[0]
    report.margin("inner_lambda1", (lam_b - X.spectrum.values[0]) / lam_b, tol)
    return report


def check_supplement(A0, B0, t: float, tol: float = 1e-8) -> VerificationReport:
    """Rescale ``(A0, B0)`` by ``lambda_1(A0 <>_t B0)`` so that the
    Wasserstein mean is ``<= I``, then test ``A <= B^{-1}`` and ``A <= I``."""
    A0, B0 = _pd(A0), _pd(B0)
    t = check_weight(t)
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    c = wasserstein(A0, B0, t).spectrum.values[0]
    A, B = _scaled(A0, 1.0 / c), _scaled(B0, 1.0 / c)
    eye = identity(A.dim)
    report = VerificationReport("supplement", trials=1)
    W = wasserstein(A, B, t)
    if not loewner_leq(W, eye, tol):
        report.failures.append({"check": "hypothesis", "t": t, "lambda1": float(W.spectrum.values[0])})
    for name, upper in (("A<=B^-1", inv_h(B)), ("A<=I", eye)):
        diff = upper.entries - A.entries
        scale = max(float(np.max(np.abs(eig_h(diff).spectrum.values))), 1.0)
        report.margin(name, loewner_margin(A, upper) / scale, tol, t=t)
    return report


def _square_root_pair(A, B, t):
    lhs = power_h(wasserstein(sqrt_h(A), sqrt_h(B), t), 2.0)
    return lhs, wasserstein(A, B, t)


def _squared_pair(A, B, t):
    lhs = power_h(wasserstein(A, B, t), 2.0)
    return lhs, wasserstein(power_h(A, 2.0), power_h(B, 2.0), t)


def check_square_mono(A, B, t: float, tol: float = 1e-8) -> VerificationReport:
    """``(A^{1/2} <>_t B^{1/2})^2 <_wlog A <>_t B`` and the equivalent
    squared form, for ``t`` in :func:`admissible_t_interval`."""
    A, B = _pd(A), _pd(B)
    t = float(t)
    if not admissible_t_interval(B).contains(t):
        raise ValueError(f"t = {t} is outside the admissible interval")
    report = VerificationReport("square_mono", trials=1)
    for name, pair in (("sqrt_form", _square_root_pair), ("squared_form", _squared_pair)):
        lower, upper = pair(A, B, t)
        report.margin(name, matrix_wlog(lower, upper, tol).min_slack, tol, t=t)
    return report


def deformed_sequence(A, B, t: float, k_max: int) -> list[PositiveDefiniteMatrix]:
    """``M_k = (A^p <>_t B^p)^{1/p}`` for ``p = 2^-k``, ``k = 0..k_max``."""
    return [power_deformed(MeanKind.WASSERSTEIN, A, B, t, 2.0**-k) for k in range(k_max + 1)]


def check_decreasing(
    A, B, t: float, k_max: int = 10, tol: float = 1e-8, constant: float = CONVERGENCE_CONSTANT
) -> VerificationReport:
    """Monotone decrease of the power-deformed Wasserstein means toward the
    log-Euclidean mean as ``p = 2^-k`` shrinks."""
    A, B = _pd(A), _pd(B)
    t = float(t)
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    if not admissible_t_interval(B).contains(t):
        raise ValueError(f"t = {t} is outside the admissible interval")
    seq = deformed_sequence(A, B, t, k_max)
    L = log_euclidean(A, B, t)
    report = VerificationReport("decreasing", trials=1)
    prev_limit_slack = None
    for k, M in enumerate(seq):
        if k < k_max:
            v = matrix_wlog(seq[k + 1], M, tol)
            report.margin("link", v.min_slack, tol, t=t, k=k)
        limit_slack = np.asarray(matrix_wlog(L, M, tol).slack)
        report.margin("limit", float(limit_slack.min()), tol, t=t, k=k)
        if prev_limit_slack is not None:
            growth = float(np.max(limit_slack - prev_limit_slack))
            if growth > tol:
                report.failures.append({"check": "limit_slack_monotone", "growth": growth, "t": t, "k": k})
        prev_limit_slack = limit_slack
    gap = relative_error(seq[-1], L)
    report.bounded("convergence", gap, constant * 2.0**-k_max, t=t)
    return report


def check_spectral_lemma(
    A, B, tol: float = 1e-8, weights: Sequence[float] = LEMMA_WEIGHTS,
    scalars: Sequence[float] = LEMMA_SCALARS,
) -> VerificationReport:
    """Algebraic identities of the spectral geometric mean: swap symmetry,
    inversion, joint homogeneity, re-interpolation and the determinant."""
    A, B = _pd(A), _pd(B)
    Ai, Bi = inv_h(A), inv_h(B)
    cache: dict[float, PositiveDefiniteMatrix] = {}

    def sg(x: float) -> PositiveDefiniteMatrix:
        if x not in cache:
            cache[x] = spectral_geometric(A, B, x)
        return cache[x]

    report = VerificationReport("spectral_lemma", trials=1)
    la, lb = _logdet(A), _logdet(B)
    for t in weights:
        report.residual("swap", relative_error(spectral_geometric(B, A, 1 - t), sg(t)), tol, t=t)
        report.residual("inverse", relative_error(inv_h(sg(t)), spectral_geometric(Ai, Bi, t)), tol, t=t)
        for a in scalars:
            for b in scalars:
                lhs = spectral_geometric(_scaled(A, a), _scaled(B, b), t)
                rhs = a ** (1 - t) * b**t * sg(t).entries
                report.residual("homogeneity", relative_error(lhs, rhs), tol, t=t, a=a, b=b)
        report.residual("det", abs(_logdet(sg(t)) - ((1 - t) * la + t * lb)), tol, t=t)
        for s in weights:
            for u in weights:
                lhs = spectral_geometric(sg(s), sg(u), t)
                rhs = sg((1 - t) * s + t * u)
                report.residual("interpolation", relative_error(lhs, rhs), tol, s=s, t=t, u=u)
    return report


def check_wasserstein_lemma(
    A, B, tol: float = 1e-8, weights: Sequence[float] = LEMMA_WEIGHTS,
    scalars: Sequence[float] = LEMMA_SCALARS, strict_margin: float = STRICT_MARGIN,
) -> VerificationReport:
    """Identities and the determinant inequality of the Wasserstein mean.

    The inversion item is an "if and only if"; it is exercised one way:
    it must hold when ``A`` and ``B`` are identical and must visibly fail
    (residual above ``tol``) for interior ``t`` when ``||A - B||_F`` is at
    least ``NON_EQUAL_THRESHOLD``.
    """
    A, B = _pd(A), _pd(B)
    Ai, Bi = inv_h(A), inv_h(B)
    equal = np.array_equal(A.entries, B.entries)
    distinct = _distance(A, B) >= NON_EQUAL_THRESHOLD
    cache: dict[float, PositiveDefiniteMatrix] = {}

    def wm(x: float) -> PositiveDefiniteMatrix:
        if x not in cache:
            cache[x] = wasserstein(A, B, x)
        return cache[x]

    report = VerificationReport("wasserstein_lemma", trials=1)
    la, lb = _logdet(A), _logdet(B)
    for t in weights:
        report.residual("swap", relative_error(wasserstein(B, A, 1 - t), wm(t)), tol, t=t)
        for a in scalars:
            lhs = wasserstein(_scaled(A, a), _scaled(B, a), t)
            report.residual("homogeneity", relative_error(lhs, a * wm(t).entries), tol, t=t, a=a)
        det_gap = _logdet(wm(t)) - ((1 - t) * la + t * lb)
        report.margin("det", det_gap, tol, t=t)
        interior = 0.0 < t < 1.0
        if interior and distinct:
            report.require("det_strict", det_gap, strict_margin, t=t)
        inv_residual = relative_error(inv_h(wm(t)), wasserstein(Ai, Bi, t))
        if equal:
            report.residual("inverse_equal", inv_residual, tol, t=t)
        elif interior and distinct:
            report.require("inverse_fails", inv_residual, tol, t=t)
        for s in weights:
            for u in weights:
                lhs = wasserstein(wm(s), wm(u), t)
                rhs = wm((1 - t) * s + t * u)
                report.residual("interpolation", relative_error(lhs, rhs), tol, s=s, t=t, u=u)
    return report


def check_eig_substrate(H, tol: float = 1e-10) -> VerificationReport:
    H = hermitian_part(H)
    dec = eig_h(H)
    report = VerificationReport("eig_substrate", trials=1)
    report.residual("reconstruction", relative_error(dec.reconstruct(), H.entries), tol)
    eye = np.eye(H.dim)
    report.residual("unitarity", relative_error(dec.basis.conj().T @ dec.basis, eye), tol)
    return report


# -- corpus -------------------------------------------------------------------

STRATA = ("equal", "commuting", "near_equal", "generic", "generic", "generic", "generic", "generic")


@dataclass
class Trial:
    index: int
    seed: int
    dim: int
    stratum: str
    A: PositiveDefiniteMatrix
    B: PositiveDefiniteMatrix
    rng: np.random.Generator

    @property
    def context(self) -> dict:
        return {"seed": self.seed, "dim": self.dim, "trial": self.index, "stratum": self.stratum}


def make_trial(dim: int, seed: int, index: int, log_cond_max: float = 6.0) -> Trial:
    """Instance ``index`` of the corpus for ``(dim, seed)``.

    Strata cycle with the index: identical pair, commuting pair, pair at
    Frobenius distance ``NEAR_EQUAL_SIZE``, and generic pairs.
    """
    ss = np.random.SeedSequence([seed, dim, index])
    a_seed, b_seed, aux_seed = (int(x) for x in ss.generate_state(3))
    rng = np.random.default_rng(aux_seed)
    stratum = STRATA[index % len(STRATA)]
    A = random_pd(dim, log_cond_max, a_seed)
    if stratum == "equal":
        B = A
    elif stratum == "commuting":
        lam = np.exp(rng.uniform(-log_cond_max / 2, log_cond_max / 2, size=dim))
        B = PositiveDefiniteMatrix.from_decomposition(A.decomposition.basis, lam)
    elif stratum == "near_equal":
        z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        h = hermitian_part(z).entries
        B = PositiveDefiniteMatrix(A.entries + NEAR_EQUAL_SIZE * h / np.linalg.norm(h))
    else:
        B = random_pd(dim, log_cond_max, b_seed)
    return Trial(index, seed, dim, stratum, A, B, rng)


def corpus(dims: Iterable[int], trials: int, seed: int, log_cond_max: float = 6.0) -> Iterator[Trial]:
    for dim in dims:
        for index in range(trials):
            yield make_trial(dim, seed, index, log_cond_max)


# -- suites -------------------------------------------------------------------


@dataclass
class VerifyConfig:
    dims: tuple[int, ...] = (2, 3, 4, 5, 6)
    trials: int = 200
    seed: int = 42
    tol: float = 1e-8
    log_cond_max: float = 6.0
    k_max: int = 10

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        self.dims = tuple(int(d) for d in self.dims)


def _interval_weights(trial: Trial) -> list[float]:
    """Two interior samples and both boundary points of the admissible set."""
    iv = admissible_t_interval(trial.B)
    u1, u2 = trial.rng.uniform(0.0, 1.0, size=2)
    candidates = [u1 * iv.lo_upper, iv.lo_upper, iv.hi_lower, 1.0 - u2 * (1.0 - iv.hi_lower)]
    return [t for t in candidates if 0.0 < t < 1.0]


def suite_chain(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("chain")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        for t in CHAIN_WEIGHTS:
            report.absorb(check_chain(trial.A, trial.B, t, cfg.tol), **trial.context)
    return report


def suite_main_theorem(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("main_theorem")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        for t in CHAIN_WEIGHTS:
            report.absorb(check_main_theorem(trial.A, trial.B, t, cfg.tol), **trial.context)
    return report


def suite_scalar_f(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("scalar_f")
    for t in SCALAR_F_WEIGHTS:
        report.absorb(check_scalar_f(t))
    return report


def suite_spectral_lemma(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("spectral_lemma")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        report.absorb(check_spectral_lemma(trial.A, trial.B, cfg.tol), **trial.context)
    return report


def suite_wasserstein_lemma(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("wasserstein_lemma")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        report.absorb(check_wasserstein_lemma(trial.A, trial.B, cfg.tol), **trial.context)
    return report


def suite_sym_product(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("sym_product")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        report.absorb(check_sym_product(trial.A, trial.B, cfg.tol), **trial.context)
    return report


def suite_supplement(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("supplement")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        t = float(trial.rng.uniform(0.05, 0.95))
        report.absorb(check_supplement(trial.A, trial.B, t, cfg.tol), **trial.context)
    return report


def suite_square_mono(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("square_mono")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        for t in _interval_weights(trial):
            report.absorb(check_square_mono(trial.A, trial.B, t, cfg.tol), **trial.context)
    return report


def suite_decreasing(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("decreasing")
    for trial in corpus(cfg.dims, cfg.trials, cfg.seed, cfg.log_cond_max):
        weights = _interval_weights(trial)
        # one weight from each piece keeps the k-sweep affordable
        for t in (weights[0], weights[-1]):
            report.absorb(check_decreasing(trial.A, trial.B, t, cfg.k_max, cfg.tol), **trial.context)
    return report


def suite_eig_substrate(cfg: VerifyConfig) -> VerificationReport:
    report = VerificationReport("eig_substrate")
    for dim in cfg.dims:
        for index in range(cfg.trials):
            rng = np.random.default_rng([cfg.seed, dim, index, 1])
            z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            report.absorb(check_eig_substrate(z), seed=cfg.seed, dim=dim, trial=index)
    return report


SUITES: dict[str, Callable[[VerifyConfig], VerificationReport]] = {
    "eig_substrate": suite_eig_substrate,
    "chain": suite_chain,
    "main_theorem": suite_main_theorem,
    "scalar_f": suite_scalar_f,
    "spectral_lemma": suite_spectral_lemma,
    "wasserstein_lemma": suite_wasserstein_lemma,
    "sym_product": suite_sym_product,
    "supplement": suite_supplement,
    "square_mono": suite_square_mono,
    "decreasing": suite_decreasing,
}


def run_all(cfg: VerifyConfig | None = None, suites: Sequence[str] | None = None) -> list[VerificationReport]:
    """Run the named suites (all by default) in registry order."""
    cfg = cfg or VerifyConfig()
    names = list(SUITES) if suites is None else list(suites)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    return [SUITES[name](cfg) for name in names]
