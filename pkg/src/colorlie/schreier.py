"""Generating functions for free generators of subalgebras of free Lie algebras."""

from __future__ import annotations

from math import comb

from .arith import as_dimension
from .series import Series


def _univariate_integer_coeffs(f: Series, what: str) -> list[int]:
    if f.spec.arity != 1 or not f.spec.all_even:
        raise ValueError(f"{what} must be a series in one even variable")
    coeffs = f.coefficients()
    if coeffs[0]:
        raise ValueError(f"{what} must have zero constant term")
    try:
        return [as_dimension(c) for c in coeffs]
    except ArithmeticError as exc:
        raise ValueError(f"{what} must have nonnegative integer coefficients") from exc


def epsilon_univariate(f: Series) -> Series:
    """``sum a_i t^i  ->  prod_i (1 - t^i)^(-a_i)``, truncated."""
    a = _univariate_integer_coeffs(f, "epsilon input")
    n = f.spec.max_degree
    result = [0] * (n + 1)
    result[0] = 1
    for i in range(1, n + 1):
        if not a[i]:
            continue
        # (1 - t^i)^(-a) = sum_k C(a + k - 1, k) t^(ik)
        factor = {i * k: comb(a[i] + k - 1, k) for k in range(n // i + 1)}
        result = [
            sum(result[d - e] * c for e, c in factor.items() if e <= d)
            for d in range(n + 1)
        ]
    return Series.univariate(result, n)


def schreier_generators_series(hx: Series, hquot: Series) -> Series:
    """``H(Z) = (H(X) - 1) * epsilon(H(L/K)) + 1``.

    ``hx`` is the generating function of the free generators of ``L`` and
    ``hquot`` that of ``L/K``.  Raises ``ValueError`` if the result has a
    negative coefficient, which means the inputs are inconsistent.
    """
    _univariate_integer_coeffs(hx, "H(X)")
    if hquot.spec.max_degree != hx.spec.max_degree:
        raise ValueError("H(X) and H(L/K) are truncated at different degrees")
    hz = (hx - 1) * epsilon_univariate(hquot) + 1
    for c in hz.coefficients():
        if c < 0 or c.denominator != 1:
            raise ValueError(f"H(Z) has coefficient {c}; inputs are inconsistent")
    return hz
