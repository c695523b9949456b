"""Shannon entropy of distributions and Deng entropy of mass functions."""

from __future__ import annotations

import math
from typing import Sequence, Union

from .errors import ValidationError
from .evidence import MassFunction, ProbabilityDistribution

DEFAULT_BASE = 2.0


class EntropyValue(float):
    """A float that remembers the logarithm base it was measured in."""

    base: float

    def __new__(cls, value: float, base: float = DEFAULT_BASE):
        obj = super().__new__(cls, value)
        obj.base = float(base)
        return obj

    def __repr__(self) -> str:
        return f"EntropyValue({float(self)!r}, base={self.base!r})"

    @property
    def value(self) -> float:
        return float(self)

    def to_base(self, base: float) -> EntropyValue:
        check_base(base)
        return EntropyValue(float(self) * math.log(self.base) / math.log(base), base)


def check_base(base: float) -> float:
    base = float(base)
    if not (math.isfinite(base) and base > 1.0):
        raise ValidationError(f"logarithm base must be a finite number > 1, got {base!r}")
    return base


def log_base(x: float, base: float) -> float:
    if base == 2.0:
        return math.log2(x)
    if base == math.e:
        return math.log(x)
    if base == 10.0:
        return math.log10(x)
    return math.log(x) / math.log(base)


def shannon_entropy(
    p: Union[ProbabilityDistribution, Sequence[float]], base: float = DEFAULT_BASE
) -> EntropyValue:
    """``-sum p_i log p_i`` with ``0 log 0 = 0``."""
    base = check_base(base)
    h = math.fsum(-x * log_base(x, base) for x in p if x > 0.0)
    return EntropyValue(max(h, 0.0), base)


def deng_entropy(m: MassFunction, base: float = DEFAULT_BASE) -> EntropyValue:
    """Each focal mass is spread over the ``2**|F| - 1`` non-empty subsets of ``F``
    inside the logarithm; for singleton focal sets this is Shannon entropy."""
    base = check_base(base)
    h = math.fsum(
        -v * log_base(v / ((1 << fs.cardinality) - 1), base) for fs, v in m.focal
    )
    return EntropyValue(max(h, 0.0), base)
