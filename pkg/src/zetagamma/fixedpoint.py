"""Fixed-point maps whose fixed points are zeta zero ordinates.

Two maps are exposed.  The f map inverts the non-alternating harmonic
asymptotics (square-root form, needs a gamma reference); the g map comes
from the cosine asymptotic equation (cotangent form).  Iterating either
from a nearby starting value can recover a zero ordinate, but convergence
is fragile - it depends strongly on the truncation k and the start point,
so non-convergence is reported as a status, never an exception.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DomainError, SingularGuardError
from .series import EULER_GAMMA, SeriesParams, offdiag_factorized
from .summation import chunked_parallel_sum

#: Guard on |sin(t log k)| and |cos(t log k)| in the g map; the cot and
#: sec factors amplify roundoff without bound near their poles.
SINGULARITY_EPS = 1e-8


class FixedPointMap(Enum):
    F_MAP = "f"
    G_MAP = "g"


class FixedPointStatus(Enum):
    CONVERGED = "converged"
    MAX_ITERS = "max_iters"
    DIVERGED = "diverged"
    SINGULAR_GUARD = "singular_guard"


@dataclass(frozen=True)
class FixedPointTrace:
    """Ordered iterates of a fixed-point run plus its termination status.

    ``iterates[0]`` is the starting value.  ``final_residual`` is the last
    step size |y_i - y_{i-1}| (None when no step completed).
    """

    iterates: tuple[float, ...]
    k: int
    status: FixedPointStatus
    final_residual: float | None
    map: FixedPointMap
    tol: float

    def __post_init__(self):
        if not self.iterates:
            raise DomainError("trace must contain at least the starting value")

    def to_json_dict(self) -> dict:
        return {
            "map": self.map.value,
            "k": self.k,
            "tol": self.tol,
            "status": self.status.value,
            "final_residual": self.final_residual,
            "iterates": list(self.iterates),
        }

    def csv_rows(self) -> list[tuple[int, float]]:
        return list(enumerate(self.iterates))


def f_of_t(t: float, k: int, gamma_ref: float = EULER_GAMMA) -> float:
    """Square-root zero map built on the non-alternating off-diagonal sum.

    Returns ``sqrt((k+1) / (gamma_ref + log k + offdiag) - 1/4)`` with the
    doubled off-diagonal sum taken at sigma = 1/2 via the factorized path.
    Fixed points of the k -> infinity limit are the zero ordinates.

    Raises ``SingularGuardError`` when the inverted quantity is not
    positive or the square-root argument is negative - the formula left
    its real domain at this (t, k).
    """
    if not (t > 0.0):
        raise DomainError("t must be positive")
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise DomainError("k must be an integer >= 2")
    k = int(k)
    off = offdiag_factorized(SeriesParams(0.5, t, k), alternating=False)
    denom = gamma_ref + math.log(k) + off
    if denom <= 0.0:
        raise SingularGuardError(
            f"inverted term {denom!r} is not positive at t={t!r}, k={k}")
    radicand = (k + 1) / denom - 0.25
    if radicand < 0.0:
        raise SingularGuardError(
            f"square-root argument {radicand!r} is negative at t={t!r}, k={k}")
    return math.sqrt(radicand)


def t_squared_extract(t: float, k: int, gamma_ref: float = EULER_GAMMA) -> float:
    """Squared-ordinate form of the same extraction; exactly f_of_t(...)^2."""
    return f_of_t(t, k, gamma_ref) ** 2


def g_of_t(t: float, k: int, guard_eps: float = SINGULARITY_EPS) -> float:
    """Cotangent zero map built on the single cosine sum.

    Returns ``cot(t log k) * ((1/4 + t^2)/(sqrt(k) cos(t log k)) *
    sum_{n=1..k} cos(t log n)/sqrt(n) - 1/2)``.

    Raises ``SingularGuardError`` when |sin(t log k)| or |cos(t log k)|
    falls below ``guard_eps``; retry with a different k in that case.
    """
    if not (t > 0.0):
        raise DomainError("t must be positive")
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise DomainError("k must be an integer >= 2")
    k = int(k)
    x = t * math.log(k)
    s = math.sin(x)
    c = math.cos(x)
    if abs(s) < guard_eps or abs(c) < guard_eps:
        raise SingularGuardError(
            f"t log k = {x!r} sits within {guard_eps} of a trig pole "
            f"(|sin|={abs(s):.3e}, |cos|={abs(c):.3e})")
    cos_sum = chunked_parallel_sum(
        lambda idx: np.cos(t * np.log(idx.astype(np.float64)))
        / np.sqrt(idx.astype(np.float64)),
        k)
    return (c / s) * ((0.25 + t * t) / (math.sqrt(k) * c) * cos_sum - 0.5)


def iterate_fixed_point(map: FixedPointMap, y0: float, k: int,
                        max_iters: int, tol: float,
                        gamma_ref: float = EULER_GAMMA) -> FixedPointTrace:
    """Apply the chosen map repeatedly from y0 and record the full trace.

    Stops with CONVERGED when a step is <= tol, MAX_ITERS after
    ``max_iters`` steps, DIVERGED when an iterate becomes non-finite or
    leaves (0, 10*y0), and SINGULAR_GUARD when a guard trips.  Failure
    modes are statuses, not exceptions: most start points do not converge.
    """
    if not (y0 > 0.0):
        raise DomainError("y0 must be positive")
    if max_iters < 1:
        raise DomainError("max_iters must be >= 1")
    iterates = [float(y0)]
    status = FixedPointStatus.MAX_ITERS
    residual: float | None = None
    upper = 10.0 * y0
    for _ in range(max_iters):
        prev = iterates[-1]
        try:
            if map is FixedPointMap.G_MAP:
                y = g_of_t(prev, k)
            else:
                y = f_of_t(prev, k, gamma_ref)
        except SingularGuardError:
            status = FixedPointStatus.SINGULAR_GUARD
            break
        iterates.append(y)
        if not math.isfinite(y) or not (0.0 < y < upper):
            status = FixedPointStatus.DIVERGED
            residual = abs(y - prev) if math.isfinite(y) else None
            break
        residual = abs(y - prev)
        if residual <= tol:
            status = FixedPointStatus.CONVERGED
            break
    return FixedPointTrace(iterates=tuple(iterates), k=int(k), status=status,
                           final_residual=residual, map=map, tol=float(tol))
