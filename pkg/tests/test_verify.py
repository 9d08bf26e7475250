import json
import math

import mpmath as mp
import numpy as np
import pytest

import mp_oracle
from conftest import pd_pair
from pdmeans.linalg_core import PositiveDefiniteMatrix, random_pd, random_unitary
from pdmeans.majorization import matrix_wlog
from pdmeans.means import log_euclidean
from pdmeans.verify import (
    SUITES,
    STRATA,
    VerificationReport,
    VerifyConfig,
    admissible_t_interval,
    check_chain,
    check_decreasing,
    check_eig_substrate,
    check_main_theorem,
    check_scalar_f,
    check_spectral_lemma,
    check_square_mono,
    check_supplement,
    check_sym_product,
    check_wasserstein_lemma,
    corpus,
    deformed_sequence,
    make_trial,
    run_all,
    scalar_f,
    scalar_f_grid,
    spectrum_extremes,
)

D41 = np.diag([4.0, 1.0])
D14 = np.diag([1.0, 4.0])

# A 2x2 pair on which the square-root monotonicity fails at the upper
# boundary of its admissible interval (found by the corpus sweep)
WITNESS_A = np.array(
    [[5.625308118478721, 7.813791903852695 + 1.5383986634573195j],
     [7.813791903852695 - 1.5383986634573195j, 11.486960146524993]]
)
WITNESS_B = np.array(
    [[8.835961538783735, 1.1321640163668012 - 9.2960291226147422j],
     [1.1321640163668012 + 9.2960291226147422j, 10.088143872320112]]
)


# -- report plumbing ----------------------------------------------------------


def test_report_bookkeeping():
    r = VerificationReport("x")
    r.margin("m", 0.5, 1e-8)
    r.margin("m", -1e-9, 1e-8)
    assert r.passed and r.min_slack == -1e-9
    r.residual("r", 1e-3, 1e-8, t=0.5)
    assert not r.passed
    assert r.failures[0] == {"check": "r", "residual": 1e-3, "t": 0.5}
    d = r.to_dict()
    assert d["passed"] is False
    json.dumps(d)


def test_report_bounded_leaves_min_slack():
    r = VerificationReport("x")
    r.bounded("gap", 0.1, 0.01)
    assert math.isinf(r.min_slack) and not r.passed


# -- chain and main theorem ---------------------------------------------------


def test_chain_equal_inputs_zero_slack():
    A = random_pd(3, 6.0, 1)
    r = check_chain(A, A, 0.4)
    assert r.passed and abs(r.min_slack) < 1e-10


def test_chain_at_zero_weight():
    A, B = pd_pair(3, 2)
    assert check_chain(A, B, 0.0).passed


def test_chain_seeded_pair():
    A, B = pd_pair(4, 3)
    assert check_chain(A, B, 0.37, 1e-8).passed


def test_main_theorem_equal_inputs():
    A = random_pd(3, 6.0, 4)
    r = check_main_theorem(A, A, 0.5)
    assert r.passed


def test_main_theorem_commuting_hand_value():
    r = check_main_theorem(D41, D14, 0.5)
    assert r.passed
    # the only failing prefix would be the first; min slack is log 1.125
    assert r.min_slack == pytest.approx(math.log(1.125), abs=1e-10)


def test_main_theorem_seeded_pair():
    A, B = pd_pair(3, 5)
    assert check_main_theorem(A, B, 0.5).passed


def test_main_theorem_strictness_detects_equal_determinants():
    # identical inputs have zero determinant gap; the strict check only runs
    # for distinct pairs, so a distinct pair forced to a tiny gap must fail
    A, B = pd_pair(3, 6)
    r = check_main_theorem(A, B, 0.5, strict_margin=1e6)
    assert any(f["check"] == "det_strict" for f in r.failures)


# -- scalar inequality --------------------------------------------------------


def test_scalar_f_values():
    for t in (0.05, 0.25, 0.5):
        assert scalar_f(1.0, t) == pytest.approx(0.0, abs=1e-15)
    lam = np.array([0.01, 0.3, 2.0, 50.0])
    assert np.allclose(scalar_f(lam, 0.5), -((np.sqrt(lam) - 1) ** 2), atol=1e-13)
    # 4 * 0.5^{3/2} - 3 * 0.5^2 - 1
    assert scalar_f(0.5, 0.25) == pytest.approx(math.sqrt(2) - 1.75, abs=1e-15)
    assert scalar_f(0.5, 0.25) < 0


@pytest.mark.parametrize("t", [0.0, 0.6, -0.1])
def test_scalar_f_rejects_bad_weight(t):
    with pytest.raises(ValueError):
        scalar_f(1.0, t)


def test_scalar_f_grid_contains_one():
    grid = scalar_f_grid(401)
    assert len(grid) == 401 and 1.0 in grid
    assert grid[0] == pytest.approx(1e-4) and grid[-1] == pytest.approx(1e4)


@pytest.mark.parametrize("t", [0.05, 0.1, 0.25, 0.5])
def test_scalar_f_maximum_at_one(t):
    assert check_scalar_f(t).passed


# -- product inequality under B <= I --------------------------------------------


def test_sym_product_identity_second_argument():
    A = random_pd(3, 6.0, 7)
    assert check_sym_product(A, np.eye(3)).passed


def test_sym_product_diagonal_example():
    # AB + BA = diag(4, 2) <= diag(8, 2) = 2A
    assert check_sym_product(D41, np.diag([0.5, 1.0])).passed


def test_sym_product_fails_on_explicit_pair():
    # B <= I, but 2A - AB - BA = [[1, -0.404], [-0.404, 0.01]] has negative
    # determinant: the product inequality does not follow from B <= I
    A = np.diag([1.0, 0.01])
    B = np.array([[0.5, 0.4], [0.4, 0.5]])
    gap = 2 * A - A @ B - B @ A
    assert np.allclose(gap, [[1.0, -0.404], [-0.404, 0.01]])
    assert np.linalg.det(gap) < 0
    assert np.linalg.eigvalsh(gap)[0] == pytest.approx(-0.1339, abs=1e-4)
    r = check_sym_product(A, B / 0.9)  # rescaling restores B = [[.5,.4],[.4,.5]]
    assert {f["check"] for f in r.failures} == {"AB+BA<=2A", "inner_lambda1"}


def test_similar_matrices_do_not_share_singular_values():
    # the operator A^{1/2} B A^{-1/2} has B's eigenvalues but not its norm
    A = np.diag([1.0, 0.01])
    B = np.array([[0.5, 0.4], [0.4, 0.5]])
    X = np.sqrt(A) @ B @ np.diag([1.0, 10.0])
    assert np.allclose(np.sort(np.linalg.eigvals(X).real), [0.1, 0.9])
    assert np.linalg.norm(X, 2) > 1.0


# -- rescaled supplement ----------------------------------------------------------


def test_supplement_half_identity():
    assert check_supplement(0.5 * np.eye(3), 0.5 * np.eye(3), 0.3).passed


def test_supplement_commuting_example_violates_second_conclusion():
    # A <>_{1/2} B = 2.25 I, so the rescaled A is diag(16/9, 4/9), not <= I;
    # the first conclusion A <= B^{-1} = diag(9/4, 9/16) does hold
    r = check_supplement(D41, D14, 0.5)
    checks = {f["check"]: f for f in r.failures}
    assert set(checks) == {"A<=I"}
    # I - A has eigenvalues -7/9 and 5/9
    assert checks["A<=I"]["slack"] == pytest.approx(-7 / 9, abs=1e-12)


def test_supplement_scalar_counterexample():
    # a = 4, b = 0.01, t = 1/2: a <> b = 1.1025, rescaled a = 3.628 > 1
    r = check_supplement([[4.0]], [[0.01]], 0.5)
    assert not r.passed
    assert 4.0 / 1.1025 > 1


def test_supplement_rejects_endpoint_weights():
    with pytest.raises(ValueError):
        check_supplement(np.eye(2), np.eye(2), 1.0)


# -- admissible interval ------------------------------------------------------


def test_interval_identity():
    iv = admissible_t_interval(np.eye(3))
    assert iv.lo_upper == pytest.approx(0.5) and iv.hi_lower == pytest.approx(0.5)
    assert all(iv.contains(t) for t in (0.01, 0.5, 0.99))


def test_interval_diag_four_one():
    iv = admissible_t_interval(D41)
    assert iv.lo_upper == pytest.approx(1 / 3, abs=1e-12)
    assert iv.hi_lower == pytest.approx(2 / 3, abs=1e-12)
    ext = spectrum_extremes(D41)
    assert (ext.alpha, ext.beta) == (1.0, 4.0)
    assert iv.contains(1 / 3) and iv.contains(2 / 3)
    assert not iv.contains(0.5) and not iv.contains(0.0) and not iv.contains(1.0)


def test_interval_nine_one():
    U = random_unitary(2, np.random.default_rng(0))
    B = PositiveDefiniteMatrix.from_decomposition(U, np.array([9.0, 1.0]))
    iv = admissible_t_interval(B)
    assert iv.lo_upper == pytest.approx(0.25, abs=1e-12)
    assert iv.hi_lower == pytest.approx(0.75, abs=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_interval_pieces_sum_to_one(seed):
    iv = admissible_t_interval(random_pd(4, 6.0, seed))
    assert iv.lo_upper + iv.hi_lower == pytest.approx(1.0, abs=1e-15)
    assert iv.lo_upper <= 0.5 <= iv.hi_lower


# -- square-root monotonicity -------------------------------------------------


def test_square_mono_equal_inputs():
    A = random_pd(3, 6.0, 8)
    t = admissible_t_interval(A).lo_upper
    r = check_square_mono(A, A, t)
    assert r.passed and abs(r.min_slack) < 1e-10


def commuting_square_profiles(a, b, t):
    lhs = ((1 - t) * a**0.25 + t * b**0.25) ** 4
    rhs = ((1 - t) * np.sqrt(a) + t * np.sqrt(b)) ** 2
    return lhs, rhs


def test_square_mono_commuting_boundary():
    t = 1 / 3
    lhs, rhs = commuting_square_profiles(np.array([4.0, 1.0]), np.array([1.0, 4.0]), t)
    v_oracle = matrix_wlog(np.diag(lhs), np.diag(rhs))
    r = check_square_mono(D41, D14, t)
    assert r.passed
    assert v_oracle.weak_log
    assert r.min_slack <= v_oracle.min_slack + 1e-12


def test_square_mono_rejects_gap_weight():
    with pytest.raises(ValueError):
        check_square_mono(D41, D14, 0.5)


def test_square_mono_boundary_rounding_accepted():
    t = admissible_t_interval(D14).lo_upper
    check_square_mono(D41, D14, t * (1 + 1e-14))


def test_square_mono_seeded_pair_each_piece():
    A, B = pd_pair(4, 9)
    iv = admissible_t_interval(B)
    for t in (0.5 * iv.lo_upper, iv.lo_upper):
        assert check_square_mono(A, B, t).passed


def test_square_mono_witness_fails_in_float():
    t = admissible_t_interval(WITNESS_B).hi_lower
    r = check_square_mono(WITNESS_A, WITNESS_B, t)
    sqrt_form = [f for f in r.failures if f["check"] == "sqrt_form"]
    assert sqrt_form and sqrt_form[0]["slack"] < -0.03


@pytest.mark.slow
def test_square_mono_witness_confirmed_at_high_precision():
    t = admissible_t_interval(WITNESS_B).hi_lower
    r = check_square_mono(WITNESS_A, WITNESS_B, t)
    float_slack = next(f["slack"] for f in r.failures if f["check"] == "sqrt_form")
    with mp.workdps(50):
        A = mp_oracle.to_mp(WITNESS_A)
        B = mp_oracle.to_mp(WITNESS_B)
        w = mp_oracle.eigvals_desc(B)
        ra, rb = mp.sqrt(w[-1]), mp.sqrt(w[0])
        t_mp = rb / (ra + rb)
        slack = mp_oracle.sqrt_form_slack(A, B, t_mp)
    assert float(slack) < -0.03
    assert float(slack) == pytest.approx(float_slack, abs=1e-10)


def test_corpus_witness_fails_at_both_pieces():
    trial = make_trial(2, 42, 165)
    assert trial.stratum == "generic"
    iv = admissible_t_interval(trial.B)
    for t in (0.98 * iv.lo_upper, iv.hi_lower + 0.1 * (1 - iv.hi_lower)):
        r = check_square_mono(trial.A, trial.B, t)
        assert any(f["check"] == "sqrt_form" for f in r.failures)


# -- decreasing sequence ------------------------------------------------------


def test_decreasing_equal_inputs():
    A = random_pd(3, 6.0, 10)
    t = admissible_t_interval(A).lo_upper
    assert check_decreasing(A, A, t, k_max=4).passed


def test_decreasing_commuting_matches_scalar_sequence():
    t, k_max = 0.25, 8
    a, b = np.array([4.0, 1.0]), np.array([1.0, 4.0])
    seq = deformed_sequence(D41, D14, t, k_max)
    for k, M in enumerate(seq):
        p = 2.0**-k
        expected = ((1 - t) * a ** (p / 2) + t * b ** (p / 2)) ** (2 / p)
        assert np.max(np.abs(np.diag(M.entries).real - expected)) <= 1e-10
    scalar = [((1 - t) * a ** (2.0**-k / 2) + t * b ** (2.0**-k / 2)) ** (2 / 2.0**-k) for k in range(9)]
    assert all(np.all(scalar[k + 1] <= scalar[k]) for k in range(8))
    r = check_decreasing(D41, D14, t, k_max=k_max)
    assert r.passed


def test_decreasing_seeded_pair():
    A = random_pd(3, 6.0, 11)
    B = random_pd(3, 2.0, 12)
    iv = admissible_t_interval(B)
    assert iv.contains(0.2)
    r = check_decreasing(A, B, 0.2, k_max=10)
    assert r.passed
    seq = deformed_sequence(A, B, 0.2, 10)
    L = log_euclidean(A, B, 0.2).entries
    assert np.linalg.norm(seq[-1].entries - L) / np.linalg.norm(L) <= 1e-2


def test_decreasing_preconditions():
    with pytest.raises(ValueError):
        check_decreasing(D41, D14, 0.25, k_max=1)
    with pytest.raises(ValueError):
        check_decreasing(D41, D14, 0.5)


def test_decreasing_first_link_is_square_root_form():
    # M_1 <_wlog M_0 is the square-root monotonicity itself
    trial = make_trial(2, 42, 165)
    t = admissible_t_interval(trial.B).hi_lower
    dec = check_decreasing(trial.A, trial.B, t, k_max=2)
    sq = check_square_mono(trial.A, trial.B, t)
    link0 = next(f["slack"] for f in dec.failures if f["check"] == "link" and f["k"] == 0)
    root = next(f["slack"] for f in sq.failures if f["check"] == "sqrt_form")
    assert link0 == pytest.approx(root, abs=1e-12)


# -- identity lemmas ----------------------------------------------------------


@pytest.mark.parametrize("index", range(8))
def test_spectral_lemma_on_each_stratum(index):
    trial = make_trial(3, 1, index)
    assert check_spectral_lemma(trial.A, trial.B).passed


@pytest.mark.parametrize("index", range(8))
def test_wasserstein_lemma_on_each_stratum(index):
    trial = make_trial(3, 1, index)
    r = check_wasserstein_lemma(trial.A, trial.B)
    assert r.passed, r.failures


def test_wasserstein_lemma_inverse_fails_for_distinct_pair():
    A, B = pd_pair(3, 13)
    # identical inputs: the inverse identity is exercised as an equality
    assert check_wasserstein_lemma(A, A).passed
    assert check_wasserstein_lemma(A, B).passed


def test_eig_substrate_single():
    z = np.random.default_rng(0).standard_normal((5, 5))
    assert check_eig_substrate(z).passed


# -- corpus and runner --------------------------------------------------------


def test_corpus_strata_cycle():
    trials = list(corpus([3], 16, 42))
    assert [t.stratum for t in trials] == list(STRATA) * 2
    eq = trials[0]
    assert np.array_equal(eq.A.entries, eq.B.entries)
    comm = trials[1]
    assert np.allclose(comm.A.entries @ comm.B.entries, comm.B.entries @ comm.A.entries, atol=1e-10)
    near = trials[2]
    assert np.linalg.norm(near.A.entries - near.B.entries) == pytest.approx(1e-4, rel=1e-6)


def test_corpus_is_deterministic():
    a = make_trial(4, 42, 11)
    b = make_trial(4, 42, 11)
    assert np.array_equal(a.A.entries, b.A.entries) and np.array_equal(a.B.entries, b.B.entries)
    assert not np.array_equal(a.A.entries, make_trial(4, 43, 11).A.entries)


def test_corpus_condition_cap():
    for trial in corpus([4], 16, 3):
        for M in (trial.A, trial.B):
            lam = M.spectrum.values
            assert lam[0] / lam[-1] <= math.exp(6.0) * 1.001


def test_run_all_scalars_pass():
    reports = run_all(VerifyConfig(dims=(1,), trials=1))
    assert [r.suite for r in reports] == list(SUITES)
    assert all(r.passed for r in reports), [r.summary() for r in reports if not r.passed]


def test_run_all_is_deterministic():
    cfg = VerifyConfig(dims=(2, 3), trials=3, seed=5)
    names = ["chain", "square_mono", "supplement"]
    a = json.dumps([r.to_dict() for r in run_all(cfg, names)])
    b = json.dumps([r.to_dict() for r in run_all(cfg, names)])
    assert a == b


def test_run_all_rejects_unknown_suite():
    with pytest.raises(ValueError):
        run_all(VerifyConfig(trials=1), ["nope"])
    with pytest.raises(ValueError):
        VerifyConfig(trials=0)
