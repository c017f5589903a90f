"""Seeded pseudo-random specs and series for self-checks."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .gchar import GroupSeries
from .groups import FiniteAbelianGroup
from .series import GradingSpec, Series


def random_spec(rng: random.Random, max_arity=4, max_count=3, max_degree=10, all_even=False) -> GradingSpec:
    r = rng.randint(1, max_arity)
    counts = [rng.randint(1, max_count) for _ in range(r)]
    odd = [False] * r if all_even else [rng.random() < 0.5 for _ in range(r)]
    return GradingSpec.from_counts(counts, odd, max_degree)


def _random_multidegree(rng, spec, min_degree=1):
    n = rng.randint(min_degree, spec.max_degree)
    alpha = [0] * spec.arity
    for _ in range(n):
        alpha[rng.randrange(spec.arity)] += 1
    return tuple(alpha)


def _random_coeff(rng) -> Fraction:
    num = 0
    while not num:
        num = rng.randint(-5, 5)
    return Fraction(num, rng.randint(1, 4))


def random_series(rng: random.Random, spec: GradingSpec, terms=5, constant=0) -> Series:
    """A sparse series with ``terms`` random nonconstant terms plus the given constant."""
    data = {(0,) * spec.arity: constant}
    for _ in range(terms):
        data[_random_multidegree(rng, spec)] = _random_coeff(rng)
    return Series(spec, data)


def z2_spec(rng: random.Random, max_arity=3, max_count=2, max_degree=8) -> GradingSpec:
    """Spec graded by ``Z_2 x Z_2`` with the parity split of the four-class example."""
    group = FiniteAbelianGroup((2, 2), frozenset({(0, 1), (1, 0)}))
    elements = list(product(range(2), repeat=2))
    r = rng.randint(1, max_arity)
    gens = [(rng.choice(elements), rng.randint(1, max_count)) for _ in range(r)]
    return GradingSpec.from_labels(group, gens, max_degree)


def random_group_series(rng: random.Random, spec: GradingSpec, terms=5, constant=0) -> GroupSeries:
    elements = list(spec.group.elements())
    data = {((0,) * spec.arity, spec.group.identity): constant}
    for _ in range(terms):
        data[(_random_multidegree(rng, spec), rng.choice(elements))] = _random_coeff(rng)
    return GroupSeries(spec, data)
