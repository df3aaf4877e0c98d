"""
Numerics for beta-binomial inference.

Holds the evidence and belief value types shared by all agents,
the regularized incomplete beta function with its inverse,
conjugate updating and exact (Clopper-Pearson) binomial intervals.
All functions are pure and work on 64-bit floats.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

CF_TOLERANCE = 1e-15
CF_MAX_ITERATIONS = 500

QUANTILE_WIDTH = 1e-12
QUANTILE_TOLERANCE = 1e-11
QUANTILE_MAX_ITERATIONS = 200

_FPMIN = 1e-300


########################################
# Types
########################################


def _is_positive(value: float):
    return math.isfinite(value) and value > 0


@dataclass(frozen=True)
class BetaParams:

    """Beta belief: pseudo-counts of heads (a) and tails (b)"""

    a: float
    b: float

    def __post_init__(self):
        if not (_is_positive(self.a) and _is_positive(self.b)):
            msg = f"a and b must be positive, got a={self.a}, b={self.b}"
            raise DomainError("BetaParams", msg)

    def __str__(self) -> str:
        return f"beta({self.a:g},{self.b:g})"


@dataclass(frozen=True)
class Counts:

    """Observed heads and tails"""

    heads: int = 0
    tails: int = 0

    def __post_init__(self):
        if self.heads < 0 or self.tails < 0:
            msg = f"counts must be nonnegative, got {self.heads}/{self.tails}"
            raise DomainError("Counts", msg)

    @property
    def total(self) -> int:
        return self.heads + self.tails

    def add(self, heads: bool) -> "Counts":
        if heads:
            return Counts(self.heads + 1, self.tails)
        return Counts(self.heads, self.tails + 1)


@dataclass(frozen=True)
class ConfidenceInterval:

    """Accepted frequency bounds [lower, upper] at confidence level"""

    lower: float
    upper: float
    level: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper <= 1.0):
            msg = f"bounds must satisfy 0 <= l <= u <= 1: [{self.lower}, {self.upper}]"
            raise DomainError("ConfidenceInterval", msg)

        if not (0.0 < self.level < 1.0):
            msg = f"level must lie in (0, 1), got {self.level}"
            raise DomainError("ConfidenceInterval", msg)

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper

    @property
    def width(self) -> float:
        return self.upper - self.lower


########################################
# Incomplete beta
########################################


def _check_shape(func: str, a: float, b: float):
    if not (_is_positive(a) and _is_positive(b)):
        raise DomainError(func, f"a and b must be positive, got a={a}, b={b}")


def _check_probability(func: str, name: str, value: float):
    if not (0.0 <= value <= 1.0):  # also rejects nan
        raise DomainError(func, f"{name} must lie in [0, 1], got {value}")


def _beta_continued_fraction(x: float, a: float, b: float):

    """
    Continued fraction for I_x(a, b), evaluated by modified Lentz.
    Converges quickly for x < (a + 1) / (a + b + 2)
    """

    qab = a + b
    qap = a + 1.0
    qam = a - 1.0

    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    result = d

    for m in range(1, CF_MAX_ITERATIONS + 1):
        m2 = 2 * m

        # Even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        result *= d * c

        # Odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        result *= delta

        if abs(delta - 1.0) < CF_TOLERANCE:
            return result

    raise ConvergenceError("regularized_incomplete_beta", CF_MAX_ITERATIONS)


def regularized_incomplete_beta(x: float, a: float, b: float) -> float:

    """Beta(a, b) CDF at x, that is I_x(a, b)"""

    func = "regularized_incomplete_beta"
    _check_probability(func, "x", x)
    _check_shape(func, a, b)

    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0

    log_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(log_front)

    if x < (a + 1.0) / (a + b + 2.0):
        value = front * _beta_continued_fraction(x, a, b) / a
    else:
        value = 1.0 - front * _beta_continued_fraction(1.0 - x, b, a) / b

    return min(1.0, max(0.0, value))


def beta_quantile(q: float, a: float, b: float) -> float:

    """
    Inverse of the Beta(a, b) CDF found by bisection on [0, 1].
    Stops once the bracket is narrower than QUANTILE_WIDTH and the CDF
    residual is within QUANTILE_TOLERANCE, or the bracket can no longer
    be split in floating point
    """

    func = "beta_quantile"
    _check_probability(func, "q", q)
    _check_shape(func, a, b)

    if q == 0.0:
        return 0.0
    if q == 1.0:
        return 1.0

    lo, hi = 0.0, 1.0
    for _ in range(QUANTILE_MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid

        value = regularized_incomplete_beta(mid, a, b)
        if hi - lo <= QUANTILE_WIDTH and abs(value - q) <= QUANTILE_TOLERANCE:
            return mid

        if value < q:
            lo = mid
        else:
            hi = mid

    raise ConvergenceError(func, QUANTILE_MAX_ITERATIONS)


########################################
# Conjugate updating
########################################


def beta_posterior(prior: BetaParams, evidence: Counts) -> BetaParams:
    return BetaParams(prior.a + evidence.heads, prior.b + evidence.tails)


def beta_mean(params: BetaParams) -> float:
    return params.a / (params.a + params.b)


########################################
# Confidence intervals
########################################


@lru_cache(maxsize=65536)
def _clopper_pearson(heads: int, tails: int, alpha: float):

    n = heads + tails
    if n == 0:
        return 0.0, 1.0

    if heads == 0:
        lower = 0.0
    else:
        lower = beta_quantile(alpha / 2, heads, tails + 1)

    if tails == 0:
        upper = 1.0
    else:
        upper = beta_quantile(1 - alpha / 2, heads + 1, tails)

    return lower, upper


def confidence_interval(evidence: Counts, alpha: float) -> ConfidenceInterval:

    """
    Clopper-Pearson exact interval for the chance of heads.
    Empty evidence gives total ignorance, the interval [0, 1]
    """

    if not (0.0 < alpha < 1.0):
        raise DomainError("confidence_interval", f"alpha must lie in (0, 1), got {alpha}")

    lower, upper = _clopper_pearson(evidence.heads, evidence.tails, float(alpha))
    return ConfidenceInterval(lower, upper, 1.0 - alpha)


def interval_cache_info():
    return _clopper_pearson.cache_info()


def log_interval_cache():
    logger.debug("Interval cache: %s", interval_cache_info())


def interval_coverage(n: int, p: float, alpha: float) -> float:

    """
    Exact probability that the interval built from n tosses
    contains p, by enumeration of all head counts
    """

    if n < 0:
        raise DomainError("interval_coverage", f"n must be nonnegative, got {n}")

    covered = 0.0
    for heads in range(n + 1):
        interval = confidence_interval(Counts(heads, n - heads), alpha)
        if interval.contains(p):
            covered += math.comb(n, heads) * p**heads * (1 - p) ** (n - heads)

    return covered
