"""Exponential/logarithm-type operators relating Lie and enveloping characters.

``op_E(f) = exp(sum_m f^[m] / m)`` and ``op_L(f) = sum_n mu(n)/n log f^[n]``
are mutually inverse; the restricted pair swaps in ``one_p`` and
``mobius_p``.  Here ``f^[m]`` is the twisted dilation, so the odd variables
pick up the Grassmann sign and ``op_E`` of a single odd generator is
``1 + u`` rather than ``1/(1 - u)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Prime, as_dimension, divisors, mobius, mobius_p, one_p
from .series import GradingSpec, Multidegree, Series, TruncatedSeries, free_assoc_character, generator_character


def _weighted_dilation_sum(f: TruncatedSeries, weight) -> TruncatedSeries:
    # f^[m] vanishes below degree m, so m <= N is exact
    acc = f.zero(f.spec)
    for m in range(1, f.spec.max_degree + 1):
        w = weight(m)
        if w:
            acc = acc + f.dilate(m) * Fraction(w, m)
    return acc


def _weighted_log_sum(f: TruncatedSeries, weight) -> TruncatedSeries:
    acc = f.zero(f.spec)
    for n in range(1, f.spec.max_degree + 1):
        w = weight(n)
        if w:
            acc = acc + f.dilate(n).log() * Fraction(w, n)
    return acc


def _require_zero_constant(f: TruncatedSeries, name: str):
    if f.constant or any(f._key_degree(k) == 0 for k in f.keys()):
        raise ValueError(f"{name} needs a series with zero constant term")


def _require_unit_constant(f: TruncatedSeries, name: str):
    if f.constant != 1 or any(f._key_degree(k) == 0 and k != f._key_unit() for k in f.keys()):
        raise ValueError(f"{name} needs a series with constant term 1")


def _require_even(spec: GradingSpec, name: str):
    if not spec.all_even:
        raise ValueError(f"{name} is only defined when every generator class is even")


def op_E(f: TruncatedSeries) -> TruncatedSeries:
    _require_zero_constant(f, "op_E")
    return _weighted_dilation_sum(f, lambda m: 1).exp()


def op_L(f: TruncatedSeries) -> TruncatedSeries:
    _require_unit_constant(f, "op_L")
    return _weighted_log_sum(f, mobius)


def op_Ep(f: Series, p: int) -> Series:
    p = Prime(p)
    _require_even(f.spec, "op_Ep")
    _require_zero_constant(f, "op_Ep")
    return _weighted_dilation_sum(f, lambda m: one_p(m, p)).exp()


def op_Lp(f: Series, p: int) -> Series:
    p = Prime(p)
    _require_even(f.spec, "op_Lp")
    _require_unit_constant(f, "op_Lp")
    return _weighted_log_sum(f, lambda n: mobius_p(n, p))


def op_Ep_mixed(f: Series, p: int) -> Series:
    """Restricted ``E_p`` on the even-parity part times plain ``E`` on the odd part."""
    p = Prime(p)
    _require_zero_constant(f, "op_Ep_mixed")
    plus, minus = f.split_by_parity()
    even_factor = _weighted_dilation_sum(plus, lambda m: one_p(m, p)).exp()
    odd_factor = _weighted_dilation_sum(minus, lambda m: 1).exp()
    return even_factor * odd_factor


def _checked_dimensions(f: Series) -> Series:
    for _, c in f.items():
        as_dimension(c)
    return f


def free_super_character(spec: GradingSpec) -> Series:
    """Character of the free color Lie superalgebra: coefficient of ``t^a`` is ``dim L_a``."""
    x = generator_character(spec)
    acc = Series.zero(spec)
    for n in range(1, spec.max_degree + 1):
        mu = mobius(n)
        if mu:
            acc = acc - (1 - x.dilate(n)).log() * Fraction(mu, n)
    return _checked_dimensions(acc)


def free_restricted_character(spec: GradingSpec, p: int) -> Series:
    """Character of the free color Lie p-algebra (all classes even)."""
    p = Prime(p)
    _require_even(spec, "free_restricted_character")
    x = generator_character(spec)
    acc = Series.zero(spec)
    for n in range(1, spec.max_degree + 1):
        mu = mobius_p(n, p)
        if mu:
            acc = acc - (1 - x.dilate(n)).log() * Fraction(mu, n)
    return _checked_dimensions(acc)


def homogeneous_character_p(spec: GradingSpec, p: int, n: int) -> Series:
    """Degree-``n`` slice of the free restricted character, from the closed formula

    ``(1/n) sum_{k | n} mu_p(k) (ch X^[k])^(n/k)``.
    """
    p = Prime(p)
    _require_even(spec, "homogeneous_character_p")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive int, got {n!r}")
    if n > spec.max_degree:
        raise ValueError(f"degree {n} exceeds the truncation {spec.max_degree}")
    x = generator_character(spec)
    acc = Series.zero(spec)
    for k in divisors(n):
        mu = mobius_p(k, p)
        if mu:
            acc = acc + x.dilate(k) ** (n // k) * mu
    return _checked_dimensions(acc / n)


@dataclass(frozen=True)
class VerificationReport:
    name: str
    passed: bool
    max_degree: int
    mismatch: Multidegree | tuple | None = None
    expected: Fraction | None = None
    actual: Fraction | None = None

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.name}: pass (to degree {self.max_degree})"
        return (
            f"{self.name}: FAIL at {self.mismatch}: expected {self.expected}, got {self.actual}"
        )


def compare_series(name: str, expected: TruncatedSeries, actual: TruncatedSeries) -> VerificationReport:
    """Report the first differing key (ordered by degree, then key)."""
    n = expected.spec.max_degree
    keys = set(expected.keys()) | set(actual.keys())
    for key in sorted(keys, key=lambda k: (expected._key_degree(k), k)):
        if expected[key] != actual[key]:
            return VerificationReport(name, False, n, key, expected[key], actual[key])
    return VerificationReport(name, True, n)


def pbw_verify(spec: GradingSpec) -> VerificationReport:
    """Check ``op_E(ch L(X)) == 1/(1 - ch X)`` up to the truncation degree."""
    return compare_series("pbw", free_assoc_character(spec), op_E(free_super_character(spec)))


def pbw_verify_p(spec: GradingSpec, p: int) -> VerificationReport:
    """Restricted analogue: ``op_Ep(ch L(X), p) == 1/(1 - ch X)``."""
    _require_even(spec, "pbw_verify_p")
    return compare_series(
        f"pbw-p (p={int(p)})",
        free_assoc_character(spec),
        op_Ep(free_restricted_character(spec, p), p),
    )
