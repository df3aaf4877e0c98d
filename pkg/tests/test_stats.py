import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special
from scipy import stats as sps

from wager.errors import DomainError
from wager.harness import DEFAULT_ALPHAS
from wager.stats import (
    BetaParams,
    ConfidenceInterval,
    Counts,
    beta_mean,
    beta_posterior,
    beta_quantile,
    confidence_interval,
    interval_cache_info,
    interval_coverage,
    regularized_incomplete_beta,
)

QUANTILE_LEVELS = [0.001, 0.025, 0.05, 0.5, 0.95, 0.975, 0.999]

shapes = st.floats(min_value=0.1, max_value=50.0)
inner = st.floats(min_value=1e-6, max_value=1 - 1e-6)
dyadic = st.integers(min_value=1, max_value=2**20 - 1).map(lambda k: k / 2**20)
counts = st.builds(
    Counts,
    st.integers(min_value=0, max_value=60),
    st.integers(min_value=0, max_value=60),
).filter(lambda c: c.total > 0)
priors = st.builds(BetaParams, shapes, shapes)


def _integrated_cdf(x: float, a: float, b: float) -> float:
    density = lambda t: t ** (a - 1) * (1 - t) ** (b - 1)
    area, _ = integrate.quad(density, 0.0, x, epsabs=1e-14, epsrel=1e-12)
    return area / special.beta(a, b)


########################################
# Types
########################################


def test_beta_params_rejects_nonpositive():
    with pytest.raises(DomainError):
        BetaParams(0, 1)
    with pytest.raises(DomainError):
        BetaParams(1, float("nan"))


def test_counts_add():
    assert Counts(3, 1).add(True) == Counts(4, 1)
    assert Counts(3, 1).add(False) == Counts(3, 2)
    assert Counts(3, 1).total == 4

    with pytest.raises(DomainError):
        Counts(-1, 0)


def test_interval_invariants():
    with pytest.raises(DomainError):
        ConfidenceInterval(0.6, 0.4, 0.9)
    with pytest.raises(DomainError):
        ConfidenceInterval(0.1, 0.4, 1.0)

    interval = ConfidenceInterval(0.2, 0.4, 0.9)
    assert interval.contains(0.2) and interval.contains(0.4)
    assert not interval.contains(0.41)
    assert interval.width == pytest.approx(0.2)


########################################
# Incomplete beta
########################################


@pytest.mark.parametrize(
    "x, a, b, expected",
    [
        (0.3, 1, 1, 0.3),
        (0.5, 2, 2, 0.5),
        (0.25, 2, 1, 0.0625),
        (0.0, 3, 4, 0.0),
        (1.0, 3, 4, 1.0),
    ],
)
def test_incomplete_beta_examples(x, a, b, expected):
    assert regularized_incomplete_beta(x, a, b) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x, a, b", [(-0.1, 1, 1), (1.5, 1, 1), (0.5, 0, 1), (0.5, 1, -2)])
def test_incomplete_beta_domain(x, a, b):
    with pytest.raises(DomainError):
        regularized_incomplete_beta(x, a, b)


def test_incomplete_beta_matches_library_on_random_grid():
    rng = np.random.default_rng(1234)
    a_values = rng.uniform(0.1, 50.0, 1000)
    b_values = rng.uniform(0.1, 50.0, 1000)
    x_values = rng.uniform(0.0, 1.0, 1000)

    for x, a, b in zip(x_values, a_values, b_values):
        expected = special.betainc(a, b, x)
        assert abs(regularized_incomplete_beta(x, a, b) - expected) <= 1e-10


@pytest.mark.parametrize(
    "x, a, b",
    [(0.2, 2.0, 3.0), (0.7, 5.0, 6.0), (0.45, 1.5, 1.5), (0.9, 12.0, 2.0), (0.05, 1.0, 30.0)],
)
def test_incomplete_beta_matches_integration(x, a, b):
    assert regularized_incomplete_beta(x, a, b) == pytest.approx(
        _integrated_cdf(x, a, b), abs=1e-10
    )


@settings(max_examples=200)
@given(x=dyadic, a=shapes, b=shapes)
def test_incomplete_beta_reflection(x, a, b):
    left = regularized_incomplete_beta(x, a, b)
    right = 1.0 - regularized_incomplete_beta(1.0 - x, b, a)
    assert left == pytest.approx(right, abs=1e-12)


@settings(max_examples=100)
@given(a=shapes, b=shapes, x=inner, y=inner)
def test_incomplete_beta_monotone(a, b, x, y):
    lo, hi = sorted((x, y))
    assert regularized_incomplete_beta(lo, a, b) <= regularized_incomplete_beta(hi, a, b)


########################################
# Quantile
########################################


@pytest.mark.parametrize(
    "q, a, b, expected",
    [(0.5, 1, 1, 0.5), (0.25, 2, 1, 0.5), (0.0, 2, 3, 0.0), (1.0, 2, 3, 1.0)],
)
def test_quantile_examples(q, a, b, expected):
    assert beta_quantile(q, a, b) == pytest.approx(expected, abs=1e-10)


def test_quantile_matches_library():
    assert beta_quantile(0.05, 5, 6) == pytest.approx(sps.beta.ppf(0.05, 5, 6), abs=1e-9)


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3), (5, 6), (0.5, 0.5), (20, 30), (1, 21)])
@pytest.mark.parametrize("q", QUANTILE_LEVELS)
def test_quantile_roundtrip(q, a, b):
    x = beta_quantile(q, a, b)
    assert abs(regularized_incomplete_beta(x, a, b) - q) <= 1e-10


def test_quantile_domain():
    with pytest.raises(DomainError):
        beta_quantile(1.2, 1, 1)
    with pytest.raises(DomainError):
        beta_quantile(0.5, 1, 0)


########################################
# Conjugate updating
########################################


def test_posterior():
    assert beta_posterior(BetaParams(1, 1), Counts(3, 1)) == BetaParams(4, 2)
    assert beta_posterior(BetaParams(2, 5), Counts()) == BetaParams(2, 5)
    assert beta_mean(BetaParams(2, 1)) == pytest.approx(2 / 3)


@settings(max_examples=200)
@given(evidence=counts, prior=priors)
def test_posterior_mean_between_prior_and_sample(evidence, prior):
    posterior_mean = beta_mean(beta_posterior(prior, evidence))
    sample = evidence.heads / evidence.total
    lo, hi = sorted((beta_mean(prior), sample))
    assert lo - 1e-12 <= posterior_mean <= hi + 1e-12


########################################
# Intervals
########################################


def test_interval_of_no_evidence_is_total_ignorance():
    interval = confidence_interval(Counts(), 0.1)
    assert (interval.lower, interval.upper) == (0.0, 1.0)
    assert interval.level == pytest.approx(0.9)


def test_interval_all_tails_closed_form():
    interval = confidence_interval(Counts(0, 10), 0.05)
    assert interval.lower == 0.0
    assert interval.upper == pytest.approx(1 - 0.025 ** (1 / 10), abs=1e-10)
    assert interval.upper == pytest.approx(0.3085, abs=1e-4)


def test_interval_single_head():
    interval = confidence_interval(Counts(1, 0), 0.1)
    assert interval.lower == pytest.approx(0.05, abs=1e-10)
    assert interval.upper == 1.0


def test_interval_symmetric_counts():
    interval = confidence_interval(Counts(5, 5), 0.1)
    assert interval.lower == pytest.approx(1 - interval.upper, abs=1e-10)
    assert interval.lower == pytest.approx(sps.beta.ppf(0.05, 5, 6), abs=1e-9)


def test_interval_rejects_bad_alpha():
    with pytest.raises(DomainError):
        confidence_interval(Counts(1, 1), 1.0)


@settings(max_examples=200)
@given(evidence=counts, alpha=st.sampled_from(DEFAULT_ALPHAS))
def test_interval_contains_sample_proportion(evidence, alpha):
    interval = confidence_interval(evidence, alpha)
    assert interval.contains(evidence.heads / evidence.total)


@settings(max_examples=100)
@given(
    heads=st.integers(min_value=0, max_value=40),
    tails=st.integers(min_value=0, max_value=40),
    alphas=st.tuples(st.sampled_from(DEFAULT_ALPHAS), st.sampled_from(DEFAULT_ALPHAS)),
)
def test_intervals_nest_with_confidence(heads, tails, alphas):
    wide_alpha, narrow_alpha = sorted(alphas)
    wide = confidence_interval(Counts(heads, tails), wide_alpha)
    narrow = confidence_interval(Counts(heads, tails), narrow_alpha)
    assert wide.lower <= narrow.lower + 1e-12
    assert narrow.upper <= wide.upper + 1e-12


def test_intervals_are_cached():
    confidence_interval(Counts(7, 3), 0.2)
    before = interval_cache_info().hits
    confidence_interval(Counts(7, 3), 0.2)
    assert interval_cache_info().hits == before + 1


@pytest.mark.parametrize("alpha", DEFAULT_ALPHAS)
def test_exact_coverage(alpha):
    grid = [i / 100 for i in range(1, 100)]
    for n in range(26):
        for p in grid:
            assert interval_coverage(n, p, alpha) >= 1 - alpha - 1e-12, (n, p)


def test_coverage_of_no_evidence_is_certain():
    assert math.isclose(interval_coverage(0, 0.3, 0.1), 1.0)
