import math
import random

import pytest
from hypothesis import given, strategies as st

from trisolve import DomainError, componendo, lemma_equivalence_check

reals = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


class TestComponendo:
    def test_three_one(self):
        assert componendo(3.0, 1.0) == 0.5

    def test_symmetric_zero(self):
        assert componendo(7.3, 7.3) == 0.0

    def test_four_two(self):
        assert componendo(4.0, 2.0) == pytest.approx(1.0 / 3.0, rel=1e-15)

    def test_zero_sum_rejected(self):
        with pytest.raises(DomainError):
            componendo(1.0, -1.0)

    def test_tiny_sum_rejected(self):
        with pytest.raises(DomainError):
            componendo(1e-301, 0.0)

    @given(reals, reals)
    def test_antisymmetry_exact(self, x, y):
        if abs(x + y) <= 1e-300:
            return
        assert componendo(x, y) == -componendo(y, x)


class TestLemmaEquivalence:
    def test_proportional(self):
        left, right = lemma_equivalence_check(2.0, 1.0, 4.0, 2.0)
        assert left == 0.0 and right == 0.0

    def test_equal_pairs(self):
        assert lemma_equivalence_check(1.0, 1.0, 5.0, 5.0) == (0.0, 0.0)

    def test_three_one_six_two(self):
        assert lemma_equivalence_check(3.0, 1.0, 6.0, 2.0) == (0.0, 0.0)

    def test_hypothesis_violations(self):
        with pytest.raises(DomainError):
            lemma_equivalence_check(1.0, 0.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            lemma_equivalence_check(1.0, -1.0, 1.0, 1.0)
        with pytest.raises(DomainError):
            lemma_equivalence_check(1.0, 1.0, 1.0, -1.0)


def test_forward_direction_random():
    """a = bk, c = dk implies the two transformed ratios agree (both equal
    (k-1)/(k+1))."""
    rng = random.Random(31337)
    checked = 0
    while checked < 10_000:
        b = math.exp(rng.uniform(math.log(1e-3), math.log(1e3))) * rng.choice((-1, 1))
        d = math.exp(rng.uniform(math.log(1e-3), math.log(1e3))) * rng.choice((-1, 1))
        k = rng.uniform(-10.0, 10.0)
        if abs(k + 1.0) < 5e-2:  # transform diverges at k = -1; stay where the absolute bound is meaningful
            continue
        a, c = b * k, d * k
        _, right = lemma_equivalence_check(a, b, c, d)
        assert right <= 1e-12
        checked += 1


def test_reverse_direction_random():
    """Quadruples whose transforms agree have (nearly) equal ratios."""
    rng = random.Random(8128)
    checked = 0
    while checked < 10_000:
        b = math.exp(rng.uniform(math.log(1e-3), math.log(1e3)))
        d = math.exp(rng.uniform(math.log(1e-3), math.log(1e3)))
        k = rng.uniform(-10.0, 10.0)
        if abs(k + 1.0) < 5e-2:  # transform diverges at k = -1; stay where the absolute bound is meaningful
            continue
        a, c = b * k, d * k
        left, right = lemma_equivalence_check(a, b, c, d)
        if right > 1e-15:
            continue
        assert left / max(abs(a / b), abs(c / d), 1.0) <= 1e-10
        checked += 1
