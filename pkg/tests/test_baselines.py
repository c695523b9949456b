import math

import pytest
from hypothesis import given, settings

from bpaprob import (
    belief,
    make_frame,
    make_mass,
    pignistic,
    plausibility,
    plausibility_transform,
    proportional_transform,
    relative_belief_transform,
)
from bpaprob.errors import UndefinedTransformError
from helpers import mass_functions, permuted, random_bayesians, random_bpas
import oracles

TRANSFORMS = [pignistic, plausibility_transform, relative_belief_transform, proportional_transform]


def _safe(t, m):
    try:
        return t(m)
    except UndefinedTransformError:
        return None


class TestPignistic:
    def test_vacuous(self, example1):
        assert pignistic(example1).probs == pytest.approx((0.25,) * 4, abs=1e-15)

    def test_example2(self, example2):
        # hand sums: w1 0.4+0.1/2+0.2/2+0.15/3, w2 0.05+0.1/2+0.15/3, w3 0.1+0.2/2+0.15/3
        assert pignistic(example2).probs == pytest.approx((0.6, 0.15, 0.25), abs=1e-12)

    def test_matches_oracle(self):
        for m in random_bpas(50, seed=2):
            ref = oracles.betp(oracles.as_sets(m), m.frame.labels)
            assert pignistic(m).probs == pytest.approx(ref, abs=1e-12)

    @settings(max_examples=200, deadline=None)
    @given(mass_functions())
    def test_inside_singleton_bounds(self, m):
        p = pignistic(m)
        for i in range(m.frame.n):
            s = m.frame.singleton(i)
            assert belief(m, s) - 1e-12 <= p.probs[i] <= plausibility(m, s) + 1e-12


class TestPlausibilityTransform:
    def test_vacuous(self, example1):
        assert plausibility_transform(example1).probs == pytest.approx((0.25,) * 4)

    def test_example2(self, example2):
        expected = (0.85 / 1.6, 0.3 / 1.6, 0.45 / 1.6)
        assert expected == pytest.approx((0.53125, 0.1875, 0.28125))
        assert plausibility_transform(example2).probs == pytest.approx(expected, abs=1e-12)


class TestRelativeBelief:
    def test_example2(self, example2):
        got = relative_belief_transform(example2).probs
        assert got == pytest.approx((0.72727, 0.09091, 0.18182), abs=1e-5)
        assert got == pytest.approx((0.4 / 0.55, 0.05 / 0.55, 0.1 / 0.55), abs=1e-12)

    def test_undefined_without_singleton_belief(self, example1):
        with pytest.raises(UndefinedTransformError, match="singleton beliefs are zero"):
            relative_belief_transform(example1)


class TestProportional:
    def test_zero_singleton_member(self):
        m = make_mass(make_frame(["a", "b"]), [("a", 0.6), (["a", "b"], 0.4)])
        assert proportional_transform(m).probs == pytest.approx((1.0, 0.0), abs=1e-15)

    def test_uniform_fallback(self):
        frame = make_frame(["a", "b", "c"])
        m = make_mass(frame, [(frame.labels, 1.0)])
        assert proportional_transform(m).probs == pytest.approx((1 / 3,) * 3, abs=1e-15)

    def test_example2(self, example2):
        # w1 gets 0.1*0.4/0.45 + 0.2*0.4/0.5 + 0.15*0.4/0.55 on top of 0.4
        w1 = 0.4 + 0.1 * 0.4 / 0.45 + 0.2 * 0.4 / 0.5 + 0.15 * 0.4 / 0.55
        assert proportional_transform(example2).probs[0] == pytest.approx(w1, abs=1e-12)


@pytest.mark.parametrize("transform", TRANSFORMS)
def test_fixed_point_on_bayesian(transform):
    for m in random_bayesians(100, seed=8):
        expected = [0.0] * m.frame.n
        for fs, v in m.focal:
            expected[fs.members()[0]] = v
        assert transform(m).probs == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("transform", TRANSFORMS)
def test_valid_distribution(transform):
    for m in random_bpas(100, seed=4):
        p = _safe(transform, m)
        if p is None:
            continue
        assert all(0.0 <= x <= 1.0 for x in p.probs)
        assert math.fsum(p.probs) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("transform", TRANSFORMS)
def test_permutation_equivariance(transform):
    for k, m in enumerate(random_bpas(40, seed=9)):
        order = list(reversed(range(m.frame.n)))
        if k % 2:
            order = order[1:] + order[:1]
        base, moved = _safe(transform, m), _safe(transform, permuted(m, order))
        if base is None:
            assert moved is None
            continue
        assert moved.probs == pytest.approx([base.probs[i] for i in order], abs=1e-12)
