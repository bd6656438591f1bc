"""Truncated series and closed forms tied to zeta zeros on the critical strip.

All functions work in plain binary64 and accumulate through the
compensated engine in :mod:`zetagamma.summation`.  The two headline
results are ``gamma_type1`` and ``gamma_type2``: estimates of the
Euler-Mascheroni constant built from a single non-trivial zeta zero
ordinate, one via the alternating (eta-form) series, one via the
non-alternating truncated series.  Both reduce an O(k^2) double sum to
O(k) through the squared-trig-sum factorization checked against the
brute-force oracle ``offdiag_naive``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction

import numpy as np

from .errors import DomainError, OracleCapError
from .summation import (
    SumAccumulator,
    _neumaier_array,
    chunked_parallel_pair_sum,
    chunked_parallel_sum,
)

#: Reference value of the Euler-Mascheroni constant used throughout.
EULER_GAMMA = 0.577215664901533

#: Largest k the O(k^2) brute-force off-diagonal path accepts by default.
#: At k = 1e5 the pair count is already almost 5e9; the factorized path
#: is the production route.  Pass ``cap`` explicitly to override.
ORACLE_CAP = 50_000


def _check_positive_int(value: int, name: str, minimum: int = 1) -> int:
    if not isinstance(value, (int, np.integer)):
        raise DomainError(f"{name} must be an integer")
    value = int(value)
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}")
    return value


@dataclass(frozen=True)
class SeriesParams:
    """(sigma, t, k) triple parameterizing a truncated critical-strip sum.

    ``sigma`` is the abscissa (must lie in the open strip (0, 1)), ``t``
    the imaginary ordinate, ``k`` the truncation length.
    """

    sigma: float
    t: float
    k: int

    def __post_init__(self):
        if not (0.0 < self.sigma < 1.0):
            raise DomainError("sigma must lie in the open interval (0, 1)")
        if not math.isfinite(self.t):
            raise DomainError("t must be finite")
        _check_positive_int(self.k, "k")


@dataclass(frozen=True)
class TrigSums:
    """Paired cosine/sine partial sums over n = 1..k.

    With ``alternating`` set these are the real and (negated) imaginary
    parts of the truncated alternating series sum((-1)^n n^-s); without it
    they are the plain truncated sums of cos(t log n)/n^sigma and
    sin(t log n)/n^sigma.
    """

    cos_sum: float
    sin_sum: float
    alternating: bool
    params: SeriesParams


class GammaMethod(Enum):
    ALT_TYPE1 = "type1"
    NONALT_TYPE2 = "type2"


@dataclass(frozen=True)
class GammaEstimate:
    """A gamma value plus the provenance that produced it."""

    value: float
    method: GammaMethod
    q: int | None
    t_q: float
    k: int

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError("gamma estimate is not finite")


def _bernoulli_even_rationals(count: int) -> tuple[Fraction, ...]:
    # B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0 (m >= 1), exact rationals.
    n_max = 2 * count
    b = [Fraction(0)] * (n_max + 1)
    b[0] = Fraction(1)
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * b[j]
        b[m] = -acc / (m + 1)
    return tuple(b[2 * i] for i in range(1, count + 1))


@dataclass(frozen=True)
class BernoulliTable:
    """Even-index Bernoulli numbers B_2, B_4, ... rendered to binary64."""

    values: tuple[float, ...]

    def __post_init__(self):
        if len(self.values) < 4:
            raise DomainError("Bernoulli table must hold at least B_2..B_8")
        if self.values[0] != float(Fraction(1, 6)) or \
                self.values[1] != float(Fraction(-1, 30)):
            raise DomainError("Bernoulli table must start with 1/6, -1/30")

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def default(cls, count: int = 8) -> "BernoulliTable":
        """Exact-rational table of B_2..B_{2*count} rounded once to binary64."""
        if count < 4:
            raise DomainError("table length must be >= 4")
        return cls(tuple(float(x) for x in _bernoulli_even_rationals(count)))


_DEFAULT_BERNOULLI = BernoulliTable.default()


def harmonic_partial_sum(k: int) -> float:
    """H_k = sum of 1/n for n = 1..k, compensated."""
    k = _check_positive_int(k, "k")
    return chunked_parallel_sum(lambda n: 1.0 / n, k)


def harmonic_asymptotic(k: int, gamma: float, n_terms: int,
                        bernoulli: BernoulliTable | None = None) -> float:
    """Asymptotic expansion of H_k.

    Returns ``gamma + log k + 1/(2k) - sum_{n=1..n_terms} B_2n/(2n k^2n)``.
    ``n_terms = 0`` keeps only the 1/(2k) correction.
    """
    k = _check_positive_int(k, "k")
    if bernoulli is None:
        bernoulli = _DEFAULT_BERNOULLI
    if n_terms < 0:
        raise DomainError("n_terms must be >= 0")
    if n_terms > len(bernoulli):
        raise DomainError(
            f"n_terms={n_terms} exceeds Bernoulli table length {len(bernoulli)}")
    result = gamma + math.log(k) + 1.0 / (2.0 * k)
    kf = float(k)
    for n in range(1, n_terms + 1):
        result -= bernoulli.values[n - 1] / (2.0 * n * kf ** (2 * n))
    return result


def stieltjes_estimate(n: int, m: int) -> float:
    """Truncated-limit estimate of the nth Stieltjes constant.

    Returns ``sum_{j=1..m} (log j)^n / j - (log m)^(n+1)/(n+1)``.  For
    n = 0 this tends to the Euler-Mascheroni constant as m grows.
    """
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError("n must be a nonnegative integer")
    m = _check_positive_int(m, "m", minimum=2)
    n = int(n)
    if n == 0:
        series = chunked_parallel_sum(lambda j: 1.0 / j, m)
    else:
        series = chunked_parallel_sum(
            lambda j: np.log(j.astype(np.float64)) ** n / j, m)
    return series - math.log(m) ** (n + 1) / (n + 1)


def trig_sums(params: SeriesParams, alternating: bool) -> TrigSums:
    """Cosine and sine partial sums in a single traversal of n = 1..k.

    alternating=True:  A = sum (-1)^n cos(t log n)/n^sigma,
                       B = -sum (-1)^n sin(t log n)/n^sigma.
    alternating=False: P = sum cos(t log n)/n^sigma,
                       Q = sum sin(t log n)/n^sigma.

    log n is computed once per index and shared by both components.
    """
    sigma = params.sigma
    t = params.t

    def pair(idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        nf = idx.astype(np.float64)
        if sigma == 0.5:
            w = 1.0 / np.sqrt(nf)
        else:
            w = nf ** (-sigma)
        arg = t * np.log(nf)
        c = np.cos(arg) * w
        s = np.sin(arg) * w
        if alternating:
            sign = np.where((idx & 1) == 1, -1.0, 1.0)
            return sign * c, -sign * s
        return c, s

    a, b = chunked_parallel_pair_sum(pair, params.k)
    return TrigSums(cos_sum=a, sin_sum=b, alternating=alternating, params=params)


def c_squared(sigma: float, t: float) -> float:
    """Squared modulus of the eta-to-zeta prefactor 1/(1 - 2^(1-s)).

    Returns ``1/(1 + 2^(2(1-sigma)) - 2^(2-sigma) cos(t log 2))``, which is
    strictly positive on the open strip (the denominator equals
    ``(1 - 2^(1-sigma))^2 + 2^(2-sigma)(1 - cos(t log 2))``).
    """
    if not (0.0 < sigma < 1.0):
        raise DomainError("sigma must lie in the open interval (0, 1)")
    denom = 1.0 + 2.0 ** (2.0 * (1.0 - sigma)) \
        - 2.0 ** (2.0 - sigma) * math.cos(t * math.log(2.0))
    return 1.0 / denom


def zeta_mag_sq_alternating(params: SeriesParams) -> float:
    """|zeta|^2 via the alternating route: C^2 (A^2 + B^2) at truncation k."""
    ts = trig_sums(params, alternating=True)
    return c_squared(params.sigma, params.t) * (
        ts.cos_sum * ts.cos_sum + ts.sin_sum * ts.sin_sum)


def _diagonal_sum(sigma: float, k: int) -> float:
    two_sigma = 2.0 * sigma
    if two_sigma == 1.0:
        return chunked_parallel_sum(lambda n: 1.0 / n, k)
    return chunked_parallel_sum(
        lambda n: n.astype(np.float64) ** (-two_sigma), k)


def offdiag_naive(params: SeriesParams, alternating: bool,
                  cap: int = ORACLE_CAP) -> float:
    """Doubled off-diagonal double sum by brute force - the O(k^2) oracle.

    Returns ``2 sum_{n=1..k} sum_{m=n+1..k} s_mn cos(t log(m/n)) / (mn)^sigma``
    where ``s_mn = (-1)^m (-1)^n`` when alternating, else +1.  Each inner
    row is evaluated directly from m/n (no trig factorization) so this
    stays an independent check on ``offdiag_factorized``.

    Refuses k beyond ``cap`` to bound the quadratic runtime.
    """
    k = params.k
    if k > cap:
        raise OracleCapError(
            f"k={k} exceeds the brute-force cap {cap} "
            "(pass cap= explicitly to override)")
    if k < 2:
        return 0.0
    t = params.t
    sigma = params.sigma
    m_all = np.arange(1, k + 1, dtype=np.float64)
    if sigma == 0.5:
        w_all = 1.0 / np.sqrt(m_all)
    else:
        w_all = m_all ** (-sigma)
    if alternating:
        sign_all = np.where((np.arange(1, k + 1) & 1) == 1, -1.0, 1.0)
    acc = SumAccumulator()
    for n in range(1, k):
        terms = np.cos(t * np.log(m_all[n:] / float(n))) * w_all[n:]
        terms *= w_all[n - 1]
        if alternating:
            terms *= sign_all[n:] * sign_all[n - 1]
        acc.add(_neumaier_array(np.ascontiguousarray(terms)))
    return 2.0 * acc.total


def offdiag_factorized(params: SeriesParams, alternating: bool) -> float:
    """Doubled off-diagonal sum via the O(k) factorization.

    The squared trig sums expand into diagonal plus off-diagonal parts:
    ``cos_sum^2 + sin_sum^2 = sum_{n<=k} n^(-2 sigma) + offdiag``, so the
    off-diagonal part is recovered by subtracting the diagonal.  Equals
    ``offdiag_naive`` at every finite k up to rounding.
    """
    ts = trig_sums(params, alternating)
    diag = _diagonal_sum(params.sigma, params.k)
    return ts.cos_sum * ts.cos_sum + ts.sin_sum * ts.sin_sum - diag


def gamma_type1(t_q: float, k: int, q: int | None = None) -> GammaEstimate:
    """Euler-Mascheroni estimate from the alternating series at a zero.

    Computes ``-offdiag_factorized(sigma=1/2, t_q, k, alternating) - log k``;
    the sign absorption turns the cancellation of the alternating double
    sum against H_k into a direct gamma estimate.
    """
    k = _check_positive_int(k, "k", minimum=2)
    if not (t_q > 0.0):
        raise DomainError("t_q must be positive")
    off = offdiag_factorized(SeriesParams(0.5, t_q, k), alternating=True)
    return GammaEstimate(value=-off - math.log(k),
                         method=GammaMethod.ALT_TYPE1, q=q, t_q=t_q, k=k)


def gamma_type2(t_q: float, k: int, q: int | None = None) -> GammaEstimate:
    """Euler-Mascheroni estimate from the non-alternating series at a zero.

    Computes ``k/(1/4 + t_q^2) - offdiag_factorized(sigma=1/2, t_q, k-1,
    alternating=False) - log(k-1)``.  The double sum is truncated at k-1,
    matching the bundled reference tables; the reindexed variant that sums
    to k with leading term (k+1) is the same quantity evaluated at k+1.
    """
    k = _check_positive_int(k, "k", minimum=2)
    if not (t_q > 0.0):
        raise DomainError("t_q must be positive")
    off = offdiag_factorized(SeriesParams(0.5, t_q, k - 1), alternating=False)
    value = k / (0.25 + t_q * t_q) - off - math.log(k - 1)
    return GammaEstimate(value=value, method=GammaMethod.NONALT_TYPE2,
                         q=q, t_q=t_q, k=k)


class EulerMaclaurinOrder(IntEnum):
    """How many Euler-Maclaurin correction terms the zeta expansion keeps."""

    POLE_ONLY = 0   # series + pole subtraction -k^(1-s)/(1-s)
    HALF_TERM = 1   # ... + k^(-s)/2
    B2_TERM = 2     # ... + (B_2/2) s k^(-s-1)


def zeta_em(s_sigma: float, s_t: float, k: int,
            order: EulerMaclaurinOrder = EulerMaclaurinOrder.HALF_TERM) -> complex:
    """Euler-Maclaurin continuation of the zeta series, valid for Re(s) > 0.

    Returns ``sum_{n=1..k-1} n^(-s) - k^(1-s)/(1-s)`` plus the corrections
    selected by ``order``, as a complex value.
    """
    k = _check_positive_int(k, "k", minimum=2)
    if s_sigma == 1.0 and s_t == 0.0:
        raise DomainError("s = 1 is the pole of zeta")
    sigma = float(s_sigma)
    t = float(s_t)

    def pair(idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        nf = idx.astype(np.float64)
        w = nf ** (-sigma)
        arg = t * np.log(nf)
        return np.cos(arg) * w, -np.sin(arg) * w

    re, im = chunked_parallel_pair_sum(pair, k - 1)
    s = complex(sigma, t)
    z = complex(re, im) - k ** (1.0 - s) / (1.0 - s)
    if order >= EulerMaclaurinOrder.HALF_TERM:
        z += 0.5 * k ** (-s)
    if order >= EulerMaclaurinOrder.B2_TERM:
        z += s * k ** (-s - 1.0) / 12.0  # B_2 / 2 = 1/12
    return z


def em_rhs(t_q: float, k: int) -> tuple[float, float]:
    """Closed-form asymptotic right-hand sides for the non-alternating sums.

    Returns the pair that the truncated sums of cos(t log n)/sqrt(n) and
    sin(t log n)/sqrt(n) over n = 1..k-1 approach when t_q is a zero
    ordinate::

        sqrt(k)/(1/4 + t^2) * (cos(t log k)/2 + t sin(t log k))
        sqrt(k)/(1/4 + t^2) * (sin(t log k)/2 - t cos(t log k))
    """
    k = _check_positive_int(k, "k")
    if not (t_q > 0.0):
        raise DomainError("t_q must be positive")
    lk = math.log(k)
    pref = math.sqrt(k) / (0.25 + t_q * t_q)
    return (pref * (0.5 * math.cos(t_q * lk) + t_q * math.sin(t_q * lk)),
            pref * (0.5 * math.sin(t_q * lk) - t_q * math.cos(t_q * lk)))
