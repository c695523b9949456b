"""Seeded random mass functions for experiments and tests.

Randomness comes from :class:`random.Random` (Mersenne Twister), whose output
for a given integer seed is fixed across platforms and Python versions.
Masses are flat-Dirichlet draws built from the gaps between sorted uniform
draws on ``[0, 1]``.
"""

from __future__ import annotations

import random

from .errors import ValidationError
from .evidence import FocalSet, Frame, MassFunction, make_frame, make_mass


def _simplex(rng: random.Random, k: int) -> list[float]:
    while True:
        cuts = sorted(rng.random() for _ in range(k - 1))
        edges = [0.0, *cuts, 1.0]
        gaps = [b - a for a, b in zip(edges, edges[1:])]
        if all(g > 0.0 for g in gaps):
            return gaps


def random_bpa(frame: Frame, focal_count: int, seed: int) -> MassFunction:
    """Mass function with exactly ``focal_count`` distinct focal sets."""
    n_subsets = (1 << frame.n) - 1
    if not 1 <= focal_count <= n_subsets:
        raise ValidationError(f"focal_count must lie in [1, {n_subsets}], got {focal_count}")
    rng = random.Random(seed)
    masks = rng.sample(range(1, n_subsets + 1), focal_count)
    return make_mass(frame, zip(map(FocalSet, masks), _simplex(rng, focal_count)))


def random_bayesian(frame: Frame, seed: int) -> MassFunction:
    """Mass function whose focal sets are all singletons of the frame."""
    rng = random.Random(seed)
    return make_mass(frame, zip(map(frame.singleton, range(frame.n)), _simplex(rng, frame.n)))


def default_frame(n: int) -> Frame:
    return make_frame([f"w{i + 1}" for i in range(n)])
