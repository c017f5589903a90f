"""Exact number-theoretic helpers: Mobius-type functions, divisors, multinomials.

Rationals are :class:`fractions.Fraction`, which already normalizes eagerly
to lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

Rational = Fraction


class IntegralityError(ArithmeticError):
    """A quantity that must be a dimension came out fractional or negative."""


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Prime(int):
    """An ``int`` that is known to be prime."""

    def __new__(cls, value: int) -> Prime:
        if isinstance(value, Prime):
            return value
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"prime must be an int, got {type(value).__name__}")
        if not is_prime(value):
            raise ValueError(f"{value} is not prime")
        return super().__new__(cls, value)

    def __repr__(self) -> str:
        return f"Prime({int(self)})"


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as ``((p1, e1), (p2, e2), ...)``, ascending."""
    _check_positive(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    _check_positive(n)
    factors = factorize(n)
    if any(e > 1 for _, e in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def _split_p(n: int, p: int) -> tuple[int, int]:
    """Write ``n = m * p**s`` with ``p`` not dividing ``m``."""
    s = 0
    while n % p == 0:
        n //= p
        s += 1
    return n, s


def one_p(n: int, p: int) -> int:
    """1 if ``p`` does not divide ``n``, else ``1 - p``."""
    _check_positive(n)
    p = Prime(p)
    return 1 - p if n % p == 0 else 1


def mobius_p(n: int, p: int) -> int:
    _check_positive(n)
    p = Prime(p)
    m, s = _split_p(n, p)
    if s == 0:
        return mobius(n)
    return mobius(m) * (p**s - p ** (s - 1))


def multinomial(parts) -> int:
    parts = list(parts)
    if any(k < 0 for k in parts):
        raise ValueError("multinomial parts must be nonnegative")
    return factorial(sum(parts)) // prod(factorial(k) for k in parts)


def as_dimension(value) -> int:
    """Return ``value`` as an ``int`` after checking it is a nonnegative integer.

    Every dimension the package reports goes through here.
    """
    q = Fraction(value)
    if q.denominator != 1:
        raise IntegralityError(f"dimension {q} is not an integer")
    if q < 0:
        raise IntegralityError(f"dimension {q} is negative")
    return int(q)
