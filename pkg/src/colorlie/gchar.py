"""Characters with coefficients in the group algebra ``Q[G]``.

A :class:`GroupSeries` term is ``c [g] t^a``.  Multiplication multiplies the
group elements and adds the multidegrees.  The twisted dilation sends
``c [g] t^a`` to ``c * s^(m+1) [g^m] t^(m a)`` where ``s`` is the sign of
the multidegree ``a`` (``-1`` iff it has odd total odd-degree); on
characters, where ``g`` is the group degree of ``a``, this is the sign of
``g`` itself.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import Prime, as_dimension, mobius
from .groups import GroupElement
from .operators import _require_unit_constant, _require_zero_constant, _weighted_dilation_sum, _weighted_log_sum
from .series import GradingSpec, Multidegree, Series, TruncatedSeries, generator_character
from .witt import dim_multidegree, dim_multidegree_p


def _require_group(spec: GradingSpec):
    if spec.group is None:
        raise ValueError("this operation needs a spec with group labels")


class GroupSeries(TruncatedSeries):
    """Truncated series over ``Q[G]``, keyed by ``(multidegree, group element)``."""

    __slots__ = ()

    def __init__(self, spec: GradingSpec, terms=None):
        _require_group(spec)
        super().__init__(spec, terms)

    def _key_check(self, key):
        alpha, g = key
        return self.spec.check_multidegree(alpha), self.spec.group.element(g)

    @staticmethod
    def _key_degree(key) -> int:
        return sum(key[0])

    def _key_add(self, a, b):
        group = self.spec.group
        return tuple(x + y for x, y in zip(a[0], b[0])), group.add(a[1], b[1])

    def _key_unit(self):
        return (0,) * self.spec.arity, self.spec.group.identity

    def _key_dilate(self, key, m):
        alpha, g = key
        sign = -1 if (m % 2 == 0 and self.spec.odd_part(alpha) % 2) else 1
        return (tuple(a * m for a in alpha), self.spec.group.power(g, m)), sign

    def _key_odd_part(self, key) -> int:
        return self.spec.odd_part(key[0])

    @classmethod
    def from_series(cls, f: Series) -> GroupSeries:
        """Attach to every term the group degree of its multidegree."""
        spec = f.spec
        _require_group(spec)
        return cls(spec, {(alpha, spec.group_degree(alpha)): c for alpha, c in f.items()})

    def forget_group(self) -> Series:
        """Sum the group-algebra coefficients (augmentation ``[g] -> 1``)."""
        terms = {}
        for (alpha, _), c in self.items():
            terms[alpha] = terms.get(alpha, 0) + c
        return Series(self.spec, terms)

    def group_slice(self, n: int) -> dict[GroupElement, Fraction]:
        """Coefficients of total degree ``n`` collected by group element."""
        out: dict[GroupElement, Fraction] = {}
        for (alpha, g), c in self.items():
            if sum(alpha) == n:
                out[g] = out.get(g, 0) + c
        return out

    def csdim(self, alpha: Multidegree) -> dict[GroupElement, Fraction]:
        """Color super dimension of the ``alpha`` component as an element of ``Q[G]``."""
        alpha = self.spec.check_multidegree(alpha)
        sign = -1 if self.spec.odd_part(alpha) % 2 else 1
        return {g: sign * c for (a, g), c in self.items() if a == alpha}

    def sorted_items(self):
        return sorted(self.items(), key=lambda kc: (sum(kc[0][0]), kc[0]))

    def __repr__(self):
        if self.is_zero():
            return "0"
        pieces = [f"{c}[{','.join(map(str, g))}]t^{alpha}" for (alpha, g), c in self.sorted_items()]
        return " + ".join(pieces)


def group_mul(a: GroupSeries, b: GroupSeries) -> GroupSeries:
    return a * b


def group_twisted_dilate(f: GroupSeries, m: int) -> GroupSeries:
    return f.dilate(m)


def op_EG(f: GroupSeries) -> GroupSeries:
    _require_zero_constant(f, "op_EG")
    return _weighted_dilation_sum(f, lambda m: 1).exp()


def op_LG(f: GroupSeries) -> GroupSeries:
    _require_unit_constant(f, "op_LG")
    return _weighted_log_sum(f, mobius)


def group_generator_character(spec: GradingSpec) -> GroupSeries:
    return GroupSeries.from_series(generator_character(spec))


def g_character_free(spec: GradingSpec) -> GroupSeries:
    """G-character of the free color Lie superalgebra, ``L_G(1/(1 - sum s_i [g_i] t_i))``."""
    _require_group(spec)
    envelope = (1 - group_generator_character(spec)).inverse()
    ch = op_LG(envelope)
    for _, c in ch.items():
        as_dimension(c)
    return ch


def group_fiber(spec: GradingSpec, n: int, g) -> list[Multidegree]:
    """All multidegrees of total degree ``n`` whose group degree is ``g``."""
    _require_group(spec)
    g = spec.group.element(g)
    return [alpha for alpha in spec.multidegrees(n) if spec.group_degree(alpha) == g]


def dim_by_group_degree(spec: GradingSpec, n: int, g, p: int | None = None) -> int:
    """``dim L^(n, g)``: sum of ``dim L_a`` over the full fiber of ``(n, g)``."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive int, got {n!r}")
    if n > spec.max_degree:
        raise ValueError(f"degree {n} exceeds the truncation {spec.max_degree}")
    if p is not None:
        p = Prime(p)
    fiber = group_fiber(spec, n, g)
    if p is None:
        return sum(dim_multidegree(spec, alpha) for alpha in fiber)
    return sum(dim_multidegree_p(spec, alpha, p) for alpha in fiber)
