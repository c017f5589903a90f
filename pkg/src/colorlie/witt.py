"""Closed-form Witt-type dimension formulas.

These never touch the series machinery: each value is a finite Mobius sum
evaluated in exact rationals, then checked to be a nonnegative integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, prod
from typing import NamedTuple

from .arith import Prime, as_dimension, divisors, mobius, mobius_p, multinomial
from .series import GradingSpec, Multidegree, Series


def _check_alpha(spec: GradingSpec, alpha) -> Multidegree:
    alpha = spec.check_multidegree(alpha)
    if not any(alpha):
        raise ValueError("the zero multidegree has no Lie component")
    return alpha


def dim_multidegree(spec: GradingSpec, alpha) -> int:
    """``dim L_a`` for the free color Lie superalgebra on ``spec``.

    ``(-1)^|a|_- / |a| * sum_{n | a} mu(n) (|a|/n)! / prod (a_i/n)!
    * (-1)^(|a|_-/n) * prod s_i^(a_i/n)``, with ``n`` running over the common
    divisors of the entries of ``a``.
    """
    alpha = _check_alpha(spec, alpha)
    odd = spec.odd_part(alpha)
    size = sum(alpha)
    acc = 0
    for n in divisors(gcd(*alpha)):
        mu = mobius(n)
        if not mu:
            continue
        beta = [a // n for a in alpha]
        term = multinomial(beta) * prod(s**b for s, b in zip(spec.counts, beta))
        acc += mu * (-1) ** (odd // n) * term
    return as_dimension(Fraction((-1) ** odd * acc, size))


def dim_total_super(k: int, l: int, n: int) -> int:
    """``dim L_n`` for ``k`` even and ``l`` odd generators, all of degree one."""
    if k < 0 or l < 0 or k + l < 1:
        raise ValueError("need at least one generator")
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    acc = sum(mobius(m) * (k - (-1) ** m * l) ** (n // m) for m in divisors(n))
    return as_dimension(Fraction(acc, n))


class SuperHilbertSeries(NamedTuple):
    bivariate: Series
    univariate: Series


def hilbert_series_super(k: int, l: int, max_degree: int) -> SuperHilbertSeries:
    """Hilbert series in ``(t_+, t_-)`` and its diagonal ``t_+ = t_- = t``."""
    if k < 0 or l < 0:
        raise ValueError("generator counts must be nonnegative")
    if k + l < 1:
        raise ValueError("empty generating set")
    # counts here only shape the ring; the inner series carries k and l
    ring = GradingSpec.from_counts([1, 1], [False, True], max_degree)
    acc = Series.zero(ring)
    for n in range(1, max_degree + 1):
        mu = mobius(n)
        if not mu:
            continue
        inner = Series(ring, {(n, 0): k, (0, n): -l * (-1) ** n})
        acc = acc - (1 - inner).log() * Fraction(mu, n)
    for _, c in acc.items():
        as_dimension(c)
    diagonal = Series.univariate(acc.coefficients(), max_degree)
    return SuperHilbertSeries(acc, diagonal)


def _require_even(spec: GradingSpec):
    if not spec.all_even:
        raise ValueError("restricted formulas need every generator class to be even")


def dim_multidegree_p(spec: GradingSpec, alpha, p: int) -> int:
    """``dim L_a`` for the free color Lie p-algebra (all classes even)."""
    p = Prime(p)
    _require_even(spec)
    alpha = _check_alpha(spec, alpha)
    acc = 0
    for n in divisors(gcd(*alpha)):
        mu = mobius_p(n, p)
        if not mu:
            continue
        beta = [a // n for a in alpha]
        acc += mu * multinomial(beta) * prod(s**b for s, b in zip(spec.counts, beta))
    return as_dimension(Fraction(acc, sum(alpha)))


def dim_total_p(r: int, n: int, p: int) -> int:
    """``dim L_n`` for the free color Lie p-algebra on ``r`` degree-one generators."""
    p = Prime(p)
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    acc = sum(mobius_p(m, p) * r ** (n // m) for m in divisors(n))
    return as_dimension(Fraction(acc, n))
