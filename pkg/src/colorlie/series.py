"""Truncated multivariate power series with exact rational coefficients.

A series lives over a :class:`GradingSpec`: one variable ``t_i`` per
generator class, each variable even or odd, everything cut off above a
single total degree ``N``.  Terms are kept in a sparse dict keyed by the
exponent vector (the *multidegree*).

The parity of the variables only matters for :meth:`Series.dilate`, the
twisted dilation ``t^a -> (-1)^((m+1) * odd(a)) t^(m a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .groups import FiniteAbelianGroup, GroupElement

Multidegree = tuple[int, ...]


def total(alpha: Multidegree) -> int:
    return sum(alpha)


def compositions(n: int, r: int):
    """All ``r``-tuples of nonnegative ints summing to ``n``, in lexicographic order."""
    if r == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, r - 1):
            yield (first, *rest)


@dataclass(frozen=True)
class GeneratorClass:
    count: int
    odd: bool = False
    label: GroupElement | None = None

    def __post_init__(self):
        if not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"generator count must be a positive int, got {self.count!r}")
        if self.label is not None:
            object.__setattr__(self, "label", tuple(self.label))


@dataclass(frozen=True)
class GradingSpec:
    """Generator classes ``X_1, ..., X_r`` and the truncation degree ``N``.

    Class ``i`` holds ``count`` generators of weight ``e_i`` (the ``i``-th
    unit vector).  When a group is attached every class carries a label and
    its parity must agree with the label's parity in the group.
    """

    classes: tuple[GeneratorClass, ...]
    max_degree: int = 12
    group: FiniteAbelianGroup | None = None

    def __post_init__(self):
        classes = tuple(self.classes)
        object.__setattr__(self, "classes", classes)
        if not classes:
            raise ValueError("a grading needs at least one generator class")
        if not isinstance(self.max_degree, int) or self.max_degree < 1:
            raise ValueError(f"max degree must be a positive int, got {self.max_degree!r}")
        labelled = [c.label is not None for c in classes]
        if self.group is None:
            if any(labelled):
                raise ValueError("group labels given without a group")
            return
        if not all(labelled):
            raise ValueError("with a group attached every class needs a label")
        for c in classes:
            g = self.group.element(c.label)
            if self.group.is_odd(g) != c.odd:
                raise ValueError(
                    f"class labelled {g} has parity {'odd' if c.odd else 'even'} "
                    "but the group says otherwise"
                )

    @classmethod
    def from_counts(cls, counts, odd=None, max_degree: int = 12) -> GradingSpec:
        odd = odd if odd is not None else [False] * len(counts)
        if len(odd) != len(counts):
            raise ValueError("counts and parities differ in length")
        return cls(tuple(GeneratorClass(int(s), bool(o)) for s, o in zip(counts, odd)), max_degree)

    @classmethod
    def from_labels(cls, group: FiniteAbelianGroup, generators, max_degree: int = 12) -> GradingSpec:
        """Build from ``(label, count)`` pairs; parities are read off the group."""
        classes = []
        for label, count in generators:
            g = group.element(label)
            classes.append(GeneratorClass(int(count), group.is_odd(g), g))
        return cls(tuple(classes), max_degree, group)

    @property
    def arity(self) -> int:
        return len(self.classes)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(c.count for c in self.classes)

    @property
    def parities(self) -> tuple[bool, ...]:
        """``True`` for odd classes."""
        return tuple(c.odd for c in self.classes)

    @property
    def labels(self) -> tuple[GroupElement, ...] | None:
        if self.group is None:
            return None
        return tuple(c.label for c in self.classes)

    @property
    def all_even(self) -> bool:
        return not any(self.parities)

    @property
    def shape(self):
        """What two series must share to be combined."""
        return (self.parities, self.max_degree)

    def with_max_degree(self, n: int) -> GradingSpec:
        return GradingSpec(self.classes, n, self.group)

    def odd_part(self, alpha: Multidegree) -> int:
        return sum(a for a, o in zip(alpha, self.parities) if o)

    def group_degree(self, alpha: Multidegree) -> GroupElement:
        if self.group is None:
            raise ValueError("spec has no group labels")
        return self.group.combine(self.labels, alpha)

    def multidegrees(self, n: int):
        return compositions(n, self.arity)

    def check_multidegree(self, alpha) -> Multidegree:
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.arity:
            raise ValueError(f"multidegree {alpha} has length {len(alpha)}, expected {self.arity}")
        if any(a < 0 for a in alpha):
            raise ValueError(f"multidegree {alpha} has a negative entry")
        return alpha


class TruncatedSeries:
    """Shared arithmetic for :class:`Series` and group-coefficient series.

    Subclasses fix the key type by overriding the ``_key_*`` hooks.
    Instances are immutable; every operation returns a new series.
    """

    __slots__ = ("spec", "_terms")

    def __init__(self, spec: GradingSpec, terms=None):
        self.spec = spec
        n = spec.max_degree
        clean = {}
        for key, c in (terms or {}).items():
            key = self._key_check(key)
            c = Fraction(c)
            if c and self._key_degree(key) <= n:
                clean[key] = c
        self._terms = clean

    @classmethod
    def _raw(cls, spec, terms):
        obj = cls.__new__(cls)
        obj.spec = spec
        obj._terms = terms
        return obj

    # key hooks
    def _key_check(self, key):
        raise NotImplementedError

    @staticmethod
    def _key_degree(key) -> int:
        raise NotImplementedError

    def _key_add(self, a, b):
        raise NotImplementedError

    def _key_unit(self):
        raise NotImplementedError

    def _key_dilate(self, key, m: int):
        raise NotImplementedError

    def _key_odd_part(self, key) -> int:
        raise NotImplementedError

    # construction helpers
    @classmethod
    def one(cls, spec: GradingSpec):
        obj = cls._raw(spec, {})
        obj._terms = {obj._key_unit(): Fraction(1)}
        return obj

    @classmethod
    def zero(cls, spec: GradingSpec):
        return cls._raw(spec, {})

    # mapping-like access
    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(self._key_check(key), Fraction(0))

    def to_dict(self) -> dict:
        return dict(self._terms)

    @property
    def constant(self) -> Fraction:
        return self._terms.get(self._key_unit(), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree_part(self, n: int):
        """The homogeneous component of total degree ``n``."""
        return self._raw(self.spec, {k: c for k, c in self._terms.items() if self._key_degree(k) == n})

    def _parts(self) -> list[dict]:
        parts = [{} for _ in range(self.spec.max_degree + 1)]
        for k, c in self._terms.items():
            parts[self._key_degree(k)][k] = c
        return parts

    def _from_parts(self, parts):
        terms = {}
        for part in parts:
            terms.update((k, c) for k, c in part.items() if c)
        return self._raw(self.spec, terms)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.spec.shape != self.spec.shape or other.spec.group != self.spec.group:
            raise ValueError("series live over incompatible gradings")

    # ring operations
    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            if isinstance(other, (int, Fraction)):
                return self == type(self).one(self.spec) * other
            return NotImplemented
        return (
            type(other) is type(self)
            and other.spec.shape == self.spec.shape
            and self._terms == other._terms
        )

    __hash__ = None

    def __neg__(self):
        return self._raw(self.spec, {k: -c for k, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).one(self.spec) * other
        self._check_compatible(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return self._raw(self.spec, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.zero(self.spec)
            return self._raw(self.spec, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        n = self.spec.max_degree
        a, b = self._parts(), other._parts()
        out = [{} for _ in range(n + 1)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(n - i + 1):
                if b[j]:
                    self._convolve_into(out[i + j], ai, b[j], 1)
        return self._from_parts(out)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = type(self).one(self.spec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _convolve_into(self, target: dict, p: dict, q: dict, scale):
        add = self._key_add
        for ka, ca in p.items():
            ca = ca * scale
            for kb, cb in q.items():
                k = add(ka, kb)
                target[k] = target.get(k, 0) + ca * cb

    # exp / log / inverse, by the total-degree recurrence D(g) = g D(f)
    def inverse(self):
        """Multiplicative inverse; the constant term must be a nonzero scalar."""
        parts = self._parts()
        c0 = self._scalar_constant("inverse")
        if not c0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        inv0 = 1 / c0
        g = [{} for _ in parts]
        g[0] = {self._key_unit(): inv0}
        for n in range(1, len(parts)):
            acc = {}
            for k in range(1, n + 1):
                if parts[k] and g[n - k]:
                    self._convolve_into(acc, parts[k], g[n - k], -inv0)
            g[n] = {key: c for key, c in acc.items() if c}
        return self._from_parts(g)

    def exp(self):
        """``exp(f)`` for ``f`` with zero constant term."""
        if self.constant or any(self._key_degree(k) == 0 for k in self._terms):
            raise ValueError("exp needs a series with zero constant term")
        f = self._parts()
        g = [{} for _ in f]
        g[0] = {self._key_unit(): Fraction(1)}
        for n in range(1, len(f)):
            acc = {}
            for k in range(1, n + 1):
                if f[k] and g[n - k]:
                    self._convolve_into(acc, f[k], g[n - k], k)
            g[n] = {key: c / n for key, c in acc.items() if c}
        return self._from_parts(g)

    def log(self):
        """``log(f)`` for ``f`` with constant term exactly 1."""
        if any(self._key_degree(k) == 0 for k in self._terms if k != self._key_unit()) or self.constant != 1:
            raise ValueError("log needs a series with constant term 1")
        f = self._parts()
        h = [{} for _ in f]
        for n in range(1, len(f)):
            acc = {}
            for k in range(1, n):
                if h[k] and f[n - k]:
                    self._convolve_into(acc, h[k], f[n - k], Fraction(-k, n))
            for key, c in f[n].items():
                acc[key] = acc.get(key, 0) + c
            h[n] = {key: c for key, c in acc.items() if c}
        return self._from_parts(h)

    def _scalar_constant(self, what: str) -> Fraction:
        degree0 = [k for k in self._terms if self._key_degree(k) == 0]
        if any(k != self._key_unit() for k in degree0):
            raise ValueError(f"{what} needs a scalar constant term")
        return self.constant

    def dilate(self, m: int):
        """Twisted dilation by ``m``; terms pushed past degree ``N`` are dropped."""
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"dilation factor must be a positive int, got {m!r}")
        if m == 1:
            return self
        n = self.spec.max_degree
        terms = {}
        for k, c in self._terms.items():
            if self._key_degree(k) * m > n:
                continue
            key, sign = self._key_dilate(k, m)
            terms[key] = terms.get(key, 0) + sign * c
        return self._raw(self.spec, {k: c for k, c in terms.items() if c})

    def split_by_parity(self):
        """``(f_plus, f_minus)``: terms of even and of odd total odd-degree."""
        plus, minus = {}, {}
        for k, c in self._terms.items():
            (minus if self._key_odd_part(k) % 2 else plus)[k] = c
        return self._raw(self.spec, plus), self._raw(self.spec, minus)


class Series(TruncatedSeries):
    """Truncated series with rational coefficients, keyed by multidegree."""

    __slots__ = ()

    def _key_check(self, key) -> Multidegree:
        if isinstance(key, int):
            key = (key,)
        return self.spec.check_multidegree(key)

    @staticmethod
    def _key_degree(key) -> int:
        return sum(key)

    def _key_add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _key_unit(self):
        return (0,) * self.spec.arity

    def _key_dilate(self, key, m):
        sign = -1 if (m % 2 == 0 and self.spec.odd_part(key) % 2) else 1
        return tuple(a * m for a in key), sign

    def _key_odd_part(self, key) -> int:
        return self.spec.odd_part(key)

    @classmethod
    def monomial(cls, spec: GradingSpec, alpha, coeff=1) -> Series:
        return cls(spec, {tuple(alpha): coeff})

    @classmethod
    def variable(cls, spec: GradingSpec, i: int) -> Series:
        alpha = [0] * spec.arity
        alpha[i] = 1
        return cls(spec, {tuple(alpha): 1})

    @classmethod
    def univariate(cls, coeffs, max_degree: int) -> Series:
        """Series in one even variable from a coefficient list ``[c0, c1, ...]``."""
        spec = univariate_spec(max_degree)
        return cls(spec, {(i,): c for i, c in enumerate(coeffs) if i <= max_degree})

    def coefficients(self) -> list[Fraction]:
        """Coefficients summed by total degree, ``[c0, ..., cN]``."""
        out = [Fraction(0)] * (self.spec.max_degree + 1)
        for k, c in self._terms.items():
            out[sum(k)] += c
        return out

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kc: (sum(kc[0]), kc[0]))

    def __repr__(self):
        if not self._terms:
            return "0"
        names = _variable_names(self.spec)
        pieces = []
        for alpha, c in self.sorted_items():
            mono = "*".join(
                f"{v}^{a}" if a > 1 else v for v, a in zip(names, alpha) if a
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append(f"-{mono}")
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ") + f" + O(deg {self.spec.max_degree + 1})"


def _variable_names(spec: GradingSpec) -> list[str]:
    if spec.arity == 1:
        return ["u" if spec.parities[0] else "t"]
    return [f"t{i + 1}" for i in range(spec.arity)]


def univariate_spec(max_degree: int) -> GradingSpec:
    return GradingSpec((GeneratorClass(1),), max_degree)


def twisted_dilate(f: TruncatedSeries, m: int):
    return f.dilate(m)


def generator_character(spec: GradingSpec) -> Series:
    """``sum_i s_i t_i``."""
    return Series(spec, {tuple(int(i == j) for j in range(spec.arity)): c.count
                         for i, c in enumerate(spec.classes)})


def free_assoc_character(spec: GradingSpec) -> Series:
    """Character of the free associative algebra on the generators, ``1/(1 - ch X)``."""
    return (1 - generator_character(spec)).inverse()


def all_multidegrees(spec: GradingSpec, min_degree: int = 1):
    for n in range(min_degree, spec.max_degree + 1):
        yield from spec.multidegrees(n)


def parity_assignments(r: int):
    return product((False, True), repeat=r)
