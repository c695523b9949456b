"""Entropy-matching transform.

Given a mass function ``m``, find the distribution ``P`` with
``Bel({w_i}) <= p_i <= Pl({w_i})`` and ``sum p_i = 1`` whose Shannon entropy is
closest to the Deng entropy of ``m``.

Shannon entropy is strictly concave, so over the box-simplex polytope its range
is ``[H_min, H_max]``: the maximum is the water-filling point and the minimum
sits at a vertex. A target above the range returns the maximizer, a target
below it returns the minimizing vertex, and a target inside it returns the
point on the segment from that vertex to the maximizer where the entropy
crosses the target.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .baselines import pignistic
from .entropy import DEFAULT_BASE, EntropyValue, check_base, deng_entropy, shannon_entropy
from .errors import CapacityError, ConvergenceError, ValidationError
from .evidence import (
    BOUND_TOL,
    MAX_FRAME_SIZE,
    Frame,
    IntervalConstraints,
    MassFunction,
    ProbabilityDistribution,
    singleton_bounds,
)

DEFAULT_TOL = 1e-9
MAX_BISECTIONS = 200
ORACLE_MAX_N = 4
ORACLE_MAX_STEP = 0.1
ORACLE_BUDGET = 20_000_000

ABOVE_MAX = "above-max"
BELOW_MIN = "below-min"
INTERIOR = "interior"
POINT_FEASIBLE = "point-feasible"
REGIMES = (ABOVE_MAX, BELOW_MIN, INTERIOR, POINT_FEASIBLE)


@dataclass(frozen=True)
class FeasiblePolytope:
    constraints: IntervalConstraints

    @property
    def frame(self) -> Frame:
        return self.constraints.frame

    @property
    def lower(self) -> tuple[float, ...]:
        return self.constraints.lower

    @property
    def upper(self) -> tuple[float, ...]:
        return self.constraints.upper

    @property
    def is_point(self) -> bool:
        return all(hi - lo <= 1e-12 for lo, hi in zip(self.lower, self.upper))

    def contains(self, probs, tol: float = BOUND_TOL) -> bool:
        return self.constraints.contains(probs, tol)


@dataclass(frozen=True)
class TransformResult:
    distribution: ProbabilityDistribution
    target_entropy: EntropyValue
    achieved_entropy: EntropyValue
    gap: float
    regime: str
    iterations: int

    def __post_init__(self):
        if self.regime not in REGIMES:
            raise ValueError(f"unknown regime {self.regime!r}")


def feasible_region(m: MassFunction) -> FeasiblePolytope:
    region = FeasiblePolytope(singleton_bounds(m))
    # the pignistic distribution always satisfies Bel <= BetP <= Pl
    assert region.contains(pignistic(m).probs), "singleton bounds exclude the pignistic point"
    return region


def _distribution(frame: Frame, probs) -> ProbabilityDistribution:
    return ProbabilityDistribution(frame, tuple(float(p) for p in probs))


def _max_point(region: FeasiblePolytope) -> tuple[ProbabilityDistribution, int]:
    probs, iters = _kernels.waterfill(region.lower, region.upper, MAX_BISECTIONS, 1e-12)
    return _distribution(region.frame, probs), iters


def max_entropy_point(region: FeasiblePolytope) -> ProbabilityDistribution:
    """Unique maximizer of Shannon entropy over the polytope (water-filling)."""
    return _max_point(region)[0]


def min_entropy_vertex(
    region: FeasiblePolytope, base: float = DEFAULT_BASE
) -> tuple[ProbabilityDistribution, EntropyValue]:
    """Vertex of minimal Shannon entropy, ties to the lexicographically smallest."""
    base = check_base(base)
    if region.frame.n > MAX_FRAME_SIZE:
        raise CapacityError(f"vertex enumeration supports at most {MAX_FRAME_SIZE} elements")
    probs, _, _ = _kernels.min_entropy_vertex(region.lower, region.upper)
    dist = _distribution(region.frame, probs)
    return dist, shannon_entropy(dist, base)


def match_entropy(
    region: FeasiblePolytope,
    target: float,
    tol: float = DEFAULT_TOL,
    base: float = DEFAULT_BASE,
) -> TransformResult:
    """Feasible distribution whose Shannon entropy is closest to ``target``.

    ``target`` and ``tol`` are in units of ``base``.
    """
    base = check_base(base)
    if not tol > 0:
        raise ValidationError(f"tolerance must be positive, got {tol!r}")
    target = EntropyValue(target, base)
    frame = region.frame

    def result(dist, regime, iters):
        achieved = shannon_entropy(dist, base)
        if not region.contains(dist.probs):
            raise AssertionError(f"solver left the feasible region: {dist.probs}")
        return TransformResult(dist, target, achieved, abs(target - achieved), regime, iters)

    hi_point, iters = _max_point(region)
    if region.is_point:
        return result(hi_point, POINT_FEASIBLE, iters)
    h_max = shannon_entropy(hi_point, base)
    if target >= h_max - tol:
        return result(hi_point, ABOVE_MAX, iters)

    lo_point, h_min = min_entropy_vertex(region, base)
    if target <= h_min + tol:
        return result(lo_point, BELOW_MIN, iters)

    nats = math.log(base)
    # half the tolerance inside the kernel leaves room for the final re-evaluation
    probs, steps, ok = _kernels.segment_bisect(
        lo_point.probs, hi_point.probs, target * nats, 0.5 * tol * nats, MAX_BISECTIONS
    )
    if not ok:
        raise ConvergenceError(
            f"no point within {tol:g} of the target after {MAX_BISECTIONS} bisections"
        )
    return result(_distribution(frame, probs), INTERIOR, iters + steps)


def entropy_match(
    m: MassFunction, tol: float = DEFAULT_TOL, base: float = DEFAULT_BASE
) -> TransformResult:
    """Distribution within the singleton Bel/Pl bounds whose Shannon entropy is
    closest to the Deng entropy of ``m``."""
    return match_entropy(feasible_region(m), deng_entropy(m, base), tol, base)


def grid_oracle(
    m: MassFunction, step: float = 0.01, base: float = DEFAULT_BASE
) -> TransformResult:
    """Exhaustive grid search used as independent ground truth in tests.

    Candidates are points with coordinates on multiples of ``step``, inside the
    box, summing to one within ``step / 2`` (renormalized before scoring). When
    the box holds no grid point, the feasible point snapped to the grid is
    returned. The regime label is read from the sign of the best candidate's
    entropy error.
    """
    base = check_base(base)
    frame = m.frame
    if frame.n > ORACLE_MAX_N:
        raise CapacityError(f"grid oracle supports at most {ORACLE_MAX_N} elements")
    if not 0 < step <= ORACLE_MAX_STEP:
        raise ValidationError(f"grid step must lie in (0, {ORACLE_MAX_STEP}]")
    bounds = singleton_bounds(m)
    lower, upper = bounds.lower, bounds.upper
    budget = 1
    for lo, hi in zip(lower[:-1], upper[:-1]):
        budget *= math.floor((hi + 1e-9) / step) - math.ceil((lo - 1e-9) / step) + 1
    if budget > ORACLE_BUDGET:
        raise CapacityError(f"grid of about {budget} points exceeds the oracle budget")

    target = deng_entropy(m, base)
    nats = math.log(base)
    probs, _, count = _kernels.grid_search(lower, upper, step, target * nats)
    if probs is None:
        snapped = [round(lo / step) * step for lo in lower]
        total = math.fsum(snapped)
        probs = [p / total for p in snapped] if total > 0 else list(lower)
    dist = _distribution(frame, probs)
    achieved = shannon_entropy(dist, base)
    if all(hi - lo <= 1e-12 for lo, hi in zip(lower, upper)):
        regime = POINT_FEASIBLE
    elif achieved < target - DEFAULT_TOL:
        regime = ABOVE_MAX
    elif achieved > target + DEFAULT_TOL:
        regime = BELOW_MIN
    else:
        regime = INTERIOR
    return TransformResult(dist, target, achieved, abs(target - achieved), regime, count)
