"""Shared test data and generators."""

import random

from hypothesis import strategies as st

from bpaprob import make_mass
from bpaprob.evidence import FocalSet
from bpaprob.sampling import default_frame, random_bayesian, random_bpa

EXAMPLE2_ENTRIES = [
    (["w1"], 0.4),
    (["w2"], 0.05),
    (["w3"], 0.1),
    (["w1", "w2"], 0.1),
    (["w1", "w3"], 0.2),
    (["w1", "w2", "w3"], 0.15),
]


def random_bpas(count, n_range=(2, 6), seed=0):
    """Deterministic stream of random mass functions over varied frames."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        frame = default_frame(n)
        k = rng.randint(1, min(2**n - 1, 12))
        out.append(random_bpa(frame, k, rng.randrange(2**31)))
    return out


def random_bayesians(count, n_range=(2, 6), seed=0):
    rng = random.Random(seed)
    return [
        random_bayesian(default_frame(rng.randint(*n_range)), rng.randrange(2**31))
        for _ in range(count)
    ]


@st.composite
def mass_functions(draw, max_n=6):
    """Hypothesis strategy: arbitrary normalized mass functions."""
    n = draw(st.integers(1, max_n))
    frame = default_frame(n)
    masks = draw(
        st.lists(st.integers(1, 2**n - 1), min_size=1, max_size=min(8, 2**n - 1), unique=True)
    )
    weights = draw(
        st.lists(
            st.floats(0.01, 1.0, allow_nan=False), min_size=len(masks), max_size=len(masks)
        )
    )
    total = sum(weights)
    return make_mass(frame, [(FocalSet(k), w / total) for k, w in zip(masks, weights)], tol=1e-6)


def permuted(m, order):
    """Same mass function over a frame whose labels are listed in ``order``."""
    from bpaprob import make_frame

    frame = make_frame([m.frame.labels[i] for i in order])
    return make_mass(frame, list(m.as_dict().items()))


def scale_composites(m, factor):
    """Shrink every composite focal mass by ``factor``; the freed mass goes to
    the singletons in proportion to their mass (uniformly if they have none)."""
    frame = m.frame
    single = {fs.members()[0]: v for fs, v in m.focal if fs.cardinality == 1}
    composite = [(fs, v * factor) for fs, v in m.focal if fs.cardinality > 1]
    freed = sum(v for fs, v in m.focal if fs.cardinality > 1) * (1 - factor)
    s_total = sum(single.values())
    if s_total > 0:
        singles = [(frame.singleton(i), v + freed * v / s_total) for i, v in single.items()]
    else:
        singles = [(frame.singleton(i), freed / frame.n) for i in range(frame.n)]
    return make_mass(frame, singles + composite, tol=1e-6)
