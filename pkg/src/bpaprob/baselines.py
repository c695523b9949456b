"""Classical BPA-to-probability transforms used as comparison baselines.

Sources for each formula are listed in ``docs/transforms.md``.
"""

from __future__ import annotations

import math

from .errors import UndefinedTransformError
from .evidence import MassFunction, ProbabilityDistribution, belief, plausibility


def _normalized(m: MassFunction, weights: list[float]) -> ProbabilityDistribution:
    total = math.fsum(weights)
    return ProbabilityDistribution(m.frame, tuple(w / total for w in weights))


def pignistic(m: MassFunction) -> ProbabilityDistribution:
    """BetP: every focal mass is shared equally among its members."""
    acc: list[list[float]] = [[] for _ in range(m.frame.n)]
    for fs, v in m.focal:
        share = v / fs.cardinality
        for i in fs.members():
            acc[i].append(share)
    return ProbabilityDistribution(m.frame, tuple(math.fsum(a) for a in acc))


def plausibility_transform(m: MassFunction) -> ProbabilityDistribution:
    frame = m.frame
    pl = [plausibility(m, frame.singleton(i)) for i in range(frame.n)]
    return _normalized(m, pl)


def relative_belief_transform(m: MassFunction) -> ProbabilityDistribution:
    frame = m.frame
    bel = [belief(m, frame.singleton(i)) for i in range(frame.n)]
    if math.fsum(bel) <= 0.0:
        raise UndefinedTransformError(
            "relative belief transform undefined: all singleton beliefs are zero"
        )
    return _normalized(m, bel)


def proportional_transform(m: MassFunction) -> ProbabilityDistribution:
    """Composite masses flow to members in proportion to their singleton masses.

    A composite focal set whose members all carry zero singleton mass is split
    uniformly among them.
    """
    n = m.frame.n
    single = [0.0] * n
    for fs, v in m.focal:
        if fs.cardinality == 1:
            single[fs.members()[0]] = v
    acc = [[s] for s in single]
    for fs, v in m.focal:
        if fs.cardinality == 1:
            continue
        members = fs.members()
        denom = math.fsum(single[i] for i in members)
        for i in members:
            acc[i].append(v * single[i] / denom if denom > 0 else v / len(members))
    return ProbabilityDistribution(m.frame, tuple(math.fsum(a) for a in acc))


BASELINES = {
    "pignistic": pignistic,
    "plausibility": plausibility_transform,
    "relative-belief": relative_belief_transform,
    "proportional": proportional_transform,
}
