"""Brute-force dimension oracle built on Lyndon words.

Nothing here uses a Mobius sum.  Dimensions of free Lie superalgebras are
counted as Lyndon words plus squares of odd Lyndon words; free restricted
Lie algebras add the ``p^s``-th powers of a Lie basis.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .arith import Prime
from .series import GradingSpec, Multidegree, compositions

DEFAULT_CAP = 14

Word = tuple[int, ...]


def alphabet(spec: GradingSpec) -> list[int]:
    """Class index of every letter; letters are ordered class-major."""
    return [i for i, c in enumerate(spec.classes) for _ in range(c.count)]


def is_lyndon(word: Word) -> bool:
    """Strictly smaller than each of its proper rotations."""
    return bool(word) and all(word < word[i:] + word[:i] for i in range(1, len(word)))


def word_multidegree(spec: GradingSpec, word: Word) -> Multidegree:
    letters = alphabet(spec)
    out = [0] * spec.arity
    for x in word:
        out[letters[x]] += 1
    return tuple(out)


def word_is_odd(spec: GradingSpec, word: Word) -> bool:
    return spec.odd_part(word_multidegree(spec, word)) % 2 == 1


def lyndon_words(spec: GradingSpec, alpha) -> list[Word]:
    """Every Lyndon word of multidegree ``alpha``, by exhaustive search over all words."""
    alpha = spec.check_multidegree(alpha)
    letters = alphabet(spec)
    found = []
    for word in product(range(len(letters)), repeat=sum(alpha)):
        if word_multidegree(spec, word) == alpha and is_lyndon(word):
            found.append(word)
    return found


def _multiset_words(content: tuple[int, ...]):
    """All distinct words using letter ``i`` exactly ``content[i]`` times."""
    remaining = list(content)
    n = sum(content)
    word = []

    def extend():
        if len(word) == n:
            yield tuple(word)
            return
        for letter, left in enumerate(remaining):
            if left:
                remaining[letter] -= 1
                word.append(letter)
                yield from extend()
                word.pop()
                remaining[letter] += 1

    yield from extend()


@lru_cache(maxsize=None)
def _lyndon_count_by_content(content: tuple[int, ...]) -> int:
    return sum(1 for w in _multiset_words(content) if is_lyndon(w))


def _check_cap(n: int, cap: int):
    if n > cap:
        raise ValueError(f"degree {n} exceeds the oracle cap {cap}")


def count_lyndon(spec: GradingSpec, alpha, cap: int = DEFAULT_CAP) -> int:
    """Number of Lyndon words of multidegree ``alpha``.

    Words are grouped by exact letter content.  Renaming letters permutes
    the words of a content class and the Lyndon count does not depend on
    the letter order (Lyndon words of a content are the aperiodic
    necklaces), so each content is enumerated once in sorted form.
    """
    alpha = spec.check_multidegree(alpha)
    _check_cap(sum(alpha), cap)
    if not any(alpha):
        return 0
    per_class = [list(compositions(a, c.count)) for a, c in zip(alpha, spec.classes)]
    total = 0
    for split in product(*per_class):
        content = tuple(sorted((x for part in split for x in part if x), reverse=True))
        total += _lyndon_count_by_content(content)
    return total


def oracle_dim_super(spec: GradingSpec, alpha, cap: int = DEFAULT_CAP) -> int:
    """Lyndon words of multidegree ``alpha`` plus squares of odd Lyndon words of ``alpha/2``."""
    alpha = spec.check_multidegree(alpha)
    dim = count_lyndon(spec, alpha, cap)
    if all(a % 2 == 0 for a in alpha) and any(alpha):
        half = tuple(a // 2 for a in alpha)
        if spec.odd_part(half) % 2:
            dim += count_lyndon(spec, half, cap)
    return dim


def _p_power_splits(n: int, p: int):
    """Pairs ``(m, p^s)`` with ``n = m * p^s``."""
    q = 1
    while n % q == 0:
        yield n // q, q
        q *= p


def oracle_dim_restricted(r: int, n: int, p: int, cap: int = DEFAULT_CAP) -> int:
    """Free restricted Lie algebra on ``r`` letters: sum over ``n = m p^s`` of Lyndon counts of length ``m``."""
    p = Prime(p)
    if r < 1 or n < 1:
        raise ValueError("need r >= 1 and n >= 1")
    _check_cap(n, cap)
    letters = GradingSpec.from_counts([r], max_degree=cap)
    return sum(count_lyndon(letters, (m,), cap) for m, _ in _p_power_splits(n, p))


def oracle_dim_restricted_multidegree(spec: GradingSpec, alpha, p: int, cap: int = DEFAULT_CAP) -> int:
    """Multigraded version: ``sum_s`` Lyndon count at ``alpha / p^s``."""
    p = Prime(p)
    alpha = spec.check_multidegree(alpha)
    dim = 0
    q = 1
    while all(a % q == 0 for a in alpha):
        dim += count_lyndon(spec, tuple(a // q for a in alpha), cap)
        q *= p
    return dim


def derived_generator_counts(rank: int, max_degree: int) -> list[int]:
    """Degrees of a free generating set of ``[L, L]`` for ``L`` free of rank ``rank``.

    Lazard elimination: removing a generator ``x`` from a free generating
    set ``S`` leaves the ideal freely generated by ``ad(x)^k s`` for
    ``s != x``, ``k >= 0``.  Eliminating the ``rank`` original generators in
    turn leaves a free generating set of everything in degree >= 2.
    Returns counts indexed by degree ``0..max_degree``.
    """
    gens = Counter({(1, True): rank})
    while gens[(1, True)]:
        gens[(1, True)] -= 1
        nxt = Counter()
        for (deg, original), mult in gens.items():
            if not mult:
                continue
            nxt[(deg, original)] += mult
            for k in range(1, max_degree - deg + 1):
                nxt[(deg + k, False)] += mult
        gens = nxt
    counts = [0] * (max_degree + 1)
    for (deg, _), mult in gens.items():
        if deg <= max_degree:
            counts[deg] += mult
    return counts
