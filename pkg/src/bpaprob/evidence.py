"""Frames of discernment, focal sets, mass functions, belief and plausibility.

Subsets of a frame are bit patterns over element indices: bit ``i`` set means
the ``i``-th label is a member. Frames hold at most :data:`MAX_FRAME_SIZE`
elements so every subset fits in a machine word.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    BlankLabelError,
    CapacityError,
    DistributionError,
    DuplicateLabelError,
    DuplicateSubsetError,
    EmptyFrameError,
    EmptySetMassError,
    FrameMismatchError,
    MassSumError,
    NegativeMassError,
    UnknownLabelError,
    ValidationError,
)

MAX_FRAME_SIZE = 30
MASS_TOL = 1e-9
# slack for bound checks on values produced by floating-point arithmetic
BOUND_TOL = 1e-9


@dataclass(frozen=True)
class Frame:
    """Ordered set of mutually exclusive hypothesis labels."""

    labels: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise EmptyFrameError("frame must contain at least one label")
        for lab in labels:
            if not isinstance(lab, str) or not lab.strip():
                raise BlankLabelError(f"blank frame label: {lab!r}")
        seen = set()
        for lab in labels:
            if lab in seen:
                raise DuplicateLabelError(f"duplicate frame label: {lab!r}")
            seen.add(lab)
        if len(labels) > MAX_FRAME_SIZE:
            raise CapacityError(
                f"frame has {len(labels)} elements; at most {MAX_FRAME_SIZE} supported"
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"label {label!r} is not in the frame") from None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def omega(self) -> FocalSet:
        return FocalSet(self.full_mask)

    def singleton(self, i: int) -> FocalSet:
        if not 0 <= i < self.n:
            raise FrameMismatchError(f"element index {i} outside frame of size {self.n}")
        return FocalSet(1 << i)

    def subset(self, labels: Union[str, Iterable[str]]) -> FocalSet:
        """Focal set for a label or an iterable of labels."""
        if isinstance(labels, str):
            labels = (labels,)
        mask = 0
        for lab in labels:
            mask |= 1 << self.index(lab)
        if mask == 0:
            raise ValidationError("subset must be non-empty")
        return FocalSet(mask)

    def coerce(self, subset) -> FocalSet:
        """Accept a FocalSet, a label, or an iterable of labels."""
        if isinstance(subset, FocalSet):
            if subset.mask >> self.n:
                raise FrameMismatchError(
                    f"subset {subset.mask:#b} has members outside a frame of size {self.n}"
                )
            return subset
        return self.subset(subset)

    def labels_of(self, subset: FocalSet) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in subset.members())


def make_frame(labels: Iterable[str]) -> Frame:
    return Frame(tuple(labels))


@dataclass(frozen=True, order=True)
class FocalSet:
    """Non-empty subset of a frame stored as a bit pattern."""

    mask: int

    def __post_init__(self):
        if not isinstance(self.mask, int) or self.mask <= 0:
            raise EmptySetMassError("focal sets must be non-empty")

    @property
    def cardinality(self) -> int:
        return bin(self.mask).count("1")

    def members(self) -> tuple[int, ...]:
        m, out, i = self.mask, [], 0
        while m:
            if m & 1:
                out.append(i)
            m >>= 1
            i += 1
        return tuple(out)

    def issubset(self, other: FocalSet) -> bool:
        return self.mask & ~other.mask == 0

    def intersects(self, other: FocalSet) -> bool:
        return self.mask & other.mask != 0


@dataclass(frozen=True)
class MassFunction:
    """Basic probability assignment over a frame.

    ``focal`` holds ``(FocalSet, mass)`` pairs sorted by bit pattern, every mass
    strictly positive. ``adjustment`` records ``raw_sum - 1`` when the input was
    renormalized on construction.
    """

    frame: Frame
    focal: tuple[tuple[FocalSet, float], ...]
    adjustment: float = 0.0

    def __post_init__(self):
        focal = tuple(sorted(self.focal, key=lambda fm: fm[0].mask))
        if not focal:
            raise MassSumError("mass function has no focal sets")
        for fs, v in focal:
            if fs.mask >> self.frame.n:
                raise FrameMismatchError("focal set outside the frame")
            if not v > 0:
                raise NegativeMassError(f"stored masses must be positive, got {v!r}")
        masks = [fs.mask for fs, _ in focal]
        if len(set(masks)) != len(masks):
            raise DuplicateSubsetError("duplicate focal set")
        total = math.fsum(v for _, v in focal)
        if abs(total - 1.0) > MASS_TOL:
            raise MassSumError(f"masses sum to {total!r}, expected 1")
        object.__setattr__(self, "focal", focal)

    def __len__(self) -> int:
        return len(self.focal)

    def __iter__(self):
        return iter(self.focal)

    def mass(self, subset) -> float:
        fs = self.frame.coerce(subset)
        for f, v in self.focal:
            if f.mask == fs.mask:
                return v
        return 0.0

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(fs.mask for fs, _ in self.focal)

    @property
    def masses(self) -> tuple[float, ...]:
        return tuple(v for _, v in self.focal)

    @property
    def is_bayesian(self) -> bool:
        return all(fs.cardinality == 1 for fs, _ in self.focal)

    def as_dict(self) -> dict[tuple[str, ...], float]:
        return {self.frame.labels_of(fs): v for fs, v in self.focal}


SubsetLike = Union[FocalSet, str, Iterable[str]]


def make_mass(
    frame: Frame,
    entries: Union[Mapping, Iterable[tuple[SubsetLike, float]]],
    tol: float = MASS_TOL,
) -> MassFunction:
    """Validate ``(subset, mass)`` entries and build a mass function.

    Zero masses are dropped. A total within ``tol`` of one is renormalized to
    sum exactly to one and the deviation is kept in ``adjustment``.
    """
    if isinstance(entries, Mapping):
        entries = entries.items()
    seen: dict[int, float] = {}
    for subset, value in entries:
        if isinstance(subset, FocalSet):
            mask = frame.coerce(subset).mask
        else:
            labels = (subset,) if isinstance(subset, str) else tuple(subset)
            if not labels:
                raise EmptySetMassError("mass assigned to the empty set")
            mask = frame.subset(labels).mask
        value = float(value)
        if math.isnan(value) or value < 0:
            raise NegativeMassError(f"mass must be non-negative, got {value!r}")
        if mask in seen:
            raise DuplicateSubsetError(
                f"subset {{{', '.join(frame.labels_of(FocalSet(mask)))}}} assigned twice"
            )
        seen[mask] = value
    total = math.fsum(seen.values())
    if not abs(total - 1.0) <= tol:
        raise MassSumError(f"masses sum to {total:.12g}, expected 1")
    scale = 1.0 if total == 1.0 else total
    focal = tuple((FocalSet(k), v / scale) for k, v in seen.items() if v > 0)
    return MassFunction(frame, focal, adjustment=total - 1.0)


def belief(m: MassFunction, subset: SubsetLike) -> float:
    """Total mass of focal sets contained in ``subset``."""
    a = m.frame.coerce(subset).mask
    if a == m.frame.full_mask:
        return 1.0
    return min(1.0, math.fsum(v for fs, v in m.focal if fs.mask & ~a == 0))


def plausibility(m: MassFunction, subset: SubsetLike) -> float:
    """Total mass of focal sets meeting ``subset``."""
    a = m.frame.coerce(subset).mask
    if a == m.frame.full_mask:
        return 1.0
    return min(1.0, math.fsum(v for fs, v in m.focal if fs.mask & a))


@dataclass(frozen=True)
class ProbabilityDistribution:
    frame: Frame
    probs: tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        if len(probs) != self.frame.n:
            raise FrameMismatchError(
                f"{len(probs)} probabilities for a frame of size {self.frame.n}"
            )
        for p in probs:
            if not -BOUND_TOL <= p <= 1.0 + BOUND_TOL:
                raise DistributionError(f"probability {p!r} outside [0, 1]")
        if abs(math.fsum(probs) - 1.0) > MASS_TOL:
            raise DistributionError(f"probabilities sum to {math.fsum(probs)!r}")
        object.__setattr__(self, "probs", tuple(min(1.0, max(0.0, p)) for p in probs))

    def __getitem__(self, label: str) -> float:
        return self.probs[self.frame.index(label)]

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def argmax(self) -> str:
        """Label with the largest probability; the first one on ties."""
        best = max(range(len(self.probs)), key=lambda i: (self.probs[i], -i))
        return self.frame.labels[best]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.frame.labels, self.probs))


@dataclass(frozen=True)
class IntervalConstraints:
    """Per-singleton probability bounds ``lower[i] <= p_i <= upper[i]``."""

    frame: Frame
    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __post_init__(self):
        lower, upper = tuple(map(float, self.lower)), tuple(map(float, self.upper))
        n = self.frame.n
        if len(lower) != n or len(upper) != n:
            raise FrameMismatchError("bound vectors must match the frame size")
        for lo, hi in zip(lower, upper):
            if not (-BOUND_TOL <= lo <= hi + BOUND_TOL and hi <= 1.0 + BOUND_TOL):
                raise ValidationError(f"invalid interval [{lo!r}, {hi!r}]")
        if math.fsum(lower) > 1.0 + BOUND_TOL or math.fsum(upper) < 1.0 - BOUND_TOL:
            raise ValidationError("box does not intersect the probability simplex")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    def contains(self, probs: Sequence[float], tol: float = BOUND_TOL) -> bool:
        if abs(math.fsum(probs) - 1.0) > tol:
            return False
        return all(lo - tol <= p <= hi + tol for p, lo, hi in zip(probs, self.lower, self.upper))


def singleton_bounds(m: MassFunction) -> IntervalConstraints:
    """Belief and plausibility of every singleton."""
    frame = m.frame
    lower = tuple(belief(m, frame.singleton(i)) for i in range(frame.n))
    upper = tuple(plausibility(m, frame.singleton(i)) for i in range(frame.n))
    return IntervalConstraints(frame, lower, upper)
