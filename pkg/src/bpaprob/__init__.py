"""Belief-function to probability transforms.

The headline method, :func:`entropy_match`, picks the distribution inside the
singleton belief/plausibility bounds whose Shannon entropy is closest to the
Deng entropy of the mass function. Four classical transforms are provided for
comparison.
"""

from ._kernels import BACKEND
from .baselines import (
    pignistic,
    plausibility_transform,
    proportional_transform,
    relative_belief_transform,
)
from .documents import (
    BpaDocument,
    emit_bpa,
    emit_json,
    load_document,
    parse_bpa,
    parse_document,
    parse_json,
)
from .entropy import EntropyValue, deng_entropy, shannon_entropy
from .errors import (
    CapacityError,
    ConvergenceError,
    EvidenceError,
    ParseError,
    UndefinedTransformError,
    ValidationError,
)
from .evidence import (
    FocalSet,
    Frame,
    IntervalConstraints,
    MassFunction,
    ProbabilityDistribution,
    belief,
    make_frame,
    make_mass,
    plausibility,
    singleton_bounds,
)
from .matching import (
    FeasiblePolytope,
    TransformResult,
    entropy_match,
    feasible_region,
    grid_oracle,
    match_entropy,
    max_entropy_point,
    min_entropy_vertex,
)
from .report import ComparisonReport, compare
from .sampling import random_bayesian, random_bpa

__version__ = "0.1.0"
