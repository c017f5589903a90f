"""Finite abelian groups presented as products of cyclic groups, with a parity split."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """``Z_{m1} x ... x Z_{mk}`` with a designated set of odd elements.

    The odd elements ``negatives`` must be the complement of a subgroup of
    index at most two, so that the sign map (``+1`` on even, ``-1`` on odd
    elements) is a homomorphism to ``{+1, -1}``.
    """

    moduli: tuple[int, ...]
    negatives: frozenset[GroupElement] = field(default_factory=frozenset)

    def __post_init__(self):
        moduli = tuple(self.moduli)
        if not moduli:
            raise ValueError("a group needs at least one cyclic factor")
        if any(not isinstance(m, int) or m < 2 for m in moduli):
            raise ValueError(f"cyclic orders must be integers >= 2, got {moduli}")
        object.__setattr__(self, "moduli", moduli)
        negs = frozenset(self._coerce(g) for g in self.negatives)
        object.__setattr__(self, "negatives", negs)
        for a in self.elements():
            for b in self.elements():
                if self.sign(self.add(a, b)) != self.sign(a) * self.sign(b):
                    raise ValueError(
                        "parity map is not a homomorphism: "
                        f"sign({a})*sign({b}) != sign({self.add(a, b)})"
                    )

    def _coerce(self, g) -> GroupElement:
        g = tuple(int(x) for x in g)
        if len(g) != len(self.moduli):
            raise ValueError(f"element {g} has wrong length for moduli {self.moduli}")
        if any(not 0 <= x < m for x, m in zip(g, self.moduli)):
            raise ValueError(f"element {g} is not reduced modulo {self.moduli}")
        return g

    def element(self, g) -> GroupElement:
        """Validate and return ``g`` as a canonical element."""
        return self._coerce(g)

    @property
    def identity(self) -> GroupElement:
        return (0,) * len(self.moduli)

    @property
    def order(self) -> int:
        n = 1
        for m in self.moduli:
            n *= m
        return n

    def elements(self):
        return product(*(range(m) for m in self.moduli))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        return tuple((x * k) % m for x, m in zip(g, self.moduli))

    def combine(self, labels, exponents) -> GroupElement:
        """``prod g_i^{a_i}`` written additively."""
        out = self.identity
        for g, a in zip(labels, exponents):
            if a:
                out = self.add(out, self.power(g, a))
        return out

    def is_odd(self, g: GroupElement) -> bool:
        return tuple(g) in self.negatives

    def sign(self, g: GroupElement) -> int:
        return -1 if self.is_odd(g) else 1
