"""Exact representation theory of the symplectic Lie algebra sp(2n).

Weights are stored densely in the orthogonal basis: ``(l1, ..., ln)`` with
``l1 >= l2 >= ... >= ln >= 0`` labels the irreducible representation whose
highest weight is ``l1*e1 + ... + ln*en``.  All arithmetic is on Python
integers, so dimensions never overflow.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import DomainError

__all__ = [
    "HighestWeight",
    "GammaIndex",
    "weyl_dimension",
    "trivial_isotypic_multiplicity",
    "branching_multiplicity",
    "branching_rule",
    "tensor_with_defining",
    "gamma_level",
    "dominant_weights",
]


@dataclass(frozen=True, order=True)
class HighestWeight:
    """Dominant integral weight of sp(2n), dense coordinates."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise DomainError("a highest weight needs rank >= 1")
        if any(e < 0 for e in entries):
            raise DomainError(f"negative entry in {entries}")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise DomainError(f"{entries} is not dominant")

    @classmethod
    def zero(cls, n: int) -> "HighestWeight":
        return cls((0,) * n)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self):
        return f"HighestWeight{self.entries}"


WeightLike = Union[HighestWeight, Sequence[int]]


def _as_weight(lam: WeightLike, n: int | None = None) -> HighestWeight:
    if not isinstance(lam, HighestWeight):
        lam = HighestWeight(tuple(lam))
    if n is not None and lam.rank != n:
        raise DomainError(f"rank mismatch: expected {n}, got {lam.rank}")
    return lam


@dataclass(frozen=True, order=True)
class GammaIndex:
    """Label (g1, g2, g3) of an isotypic block of the quaternion-sphere algebra.

    ``(g1, g2)`` is the highest weight ``(g1, g2, 0, ..., 0)`` and ``g3`` picks
    one of its ``g1 - g2 + 1`` copies.
    """

    g1: int
    g2: int
    g3: int

    def __post_init__(self):
        if not (0 <= self.g2 <= self.g1 and 0 <= self.g3 <= self.g1 - self.g2):
            raise DomainError(f"({self.g1}, {self.g2}, {self.g3}) is not in Gamma")

    @staticmethod
    def valid(g1: int, g2: int, g3: int) -> bool:
        return 0 <= g2 <= g1 and 0 <= g3 <= g1 - g2

    def shift(self, d1: int, d2: int, d3: int) -> "GammaIndex":
        return GammaIndex(self.g1 + d1, self.g2 + d2, self.g3 + d3)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.g1, self.g2, self.g3)

    def highest_weight(self, n: int) -> HighestWeight:
        return HighestWeight((self.g1, self.g2) + (0,) * (n - 2))


def _rho(n: int) -> list[int]:
    return list(range(n, 0, -1))


def _root_product(shifted: Sequence[int]) -> int:
    # positive roots of C_n: e_i - e_j, e_i + e_j (i < j), 2 e_i
    n = len(shifted)
    prod = 1
    for i in range(n):
        prod *= shifted[i]
        for j in range(i + 1, n):
            prod *= (shifted[i] - shifted[j]) * (shifted[i] + shifted[j])
    return prod


def weyl_dimension(n: int, lam: WeightLike) -> int:
    """Dimension of the sp(2n) irrep with highest weight ``lam``.

    Weyl's product over positive roots, ``prod <lam + rho, a> / <rho, a>``,
    with the factor 2 of the long roots cancelling between numerator and
    denominator.
    """
    if n < 1:
        raise DomainError("rank must be positive")
    lam = _as_weight(lam, n)
    rho = _rho(n)
    num = _root_product([l + r for l, r in zip(lam, rho)])
    den = _root_product(rho)
    dim, rem = divmod(num, den)
    assert rem == 0, "Weyl quotient must be integral"
    return dim


def trivial_isotypic_multiplicity(lam: WeightLike) -> int:
    """Number of copies of ``lam`` in the coordinate algebra of Sp(2n)/Sp(2n-2).

    ``l1 - l2 + 1`` when at most the first two entries are nonzero, else 0.
    """
    lam = _as_weight(lam)
    if lam.rank < 2:
        raise DomainError("rank must be at least 2")
    if any(lam.entries[2:]):
        return 0
    return lam[0] - lam[1] + 1


def _intermediate_patterns(lam: HighestWeight) -> Iterator[tuple[int, ...]]:
    """All nu with lam_1 >= nu_1 >= lam_2 >= nu_2 >= ... >= lam_n >= nu_n >= 0."""
    bounds = list(lam) + [0]
    ranges = [range(bounds[i + 1], bounds[i] + 1) for i in range(lam.rank)]
    yield from itertools.product(*ranges)


def _interlaces(nu: Sequence[int], mu: Sequence[int]) -> bool:
    return all(nu[i] >= mu[i] >= nu[i + 1] for i in range(len(mu)))


def branching_multiplicity(lam: WeightLike, mu: WeightLike) -> int:
    """Multiplicity of the Sp(2n-2) irrep ``mu`` in the restriction of ``lam``.

    Zhelobenko's rule: count the sequences ``nu`` that interlace ``lam`` from
    below and ``mu`` from above.
    """
    lam = _as_weight(lam)
    mu = _as_weight(mu)
    if lam.rank < 2:
        raise DomainError("branching needs rank n >= 2")
    if mu.rank != lam.rank - 1:
        raise DomainError(f"rank mismatch: {lam.rank} -> {mu.rank}")
    return sum(1 for nu in _intermediate_patterns(lam) if _interlaces(nu, mu.entries))


def branching_rule(lam: WeightLike) -> dict[HighestWeight, int]:
    """Full restriction of ``lam`` to Sp(2n-2) as ``{mu: multiplicity}``."""
    lam = _as_weight(lam)
    if lam.rank < 2:
        raise DomainError("branching needs rank n >= 2")
    out: dict[HighestWeight, int] = {}
    for nu in _intermediate_patterns(lam):
        ranges = [range(nu[i + 1], nu[i] + 1) for i in range(lam.rank - 1)]
        for mu in itertools.product(*ranges):
            key = HighestWeight(mu)
            out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items(), reverse=True))


def tensor_with_defining(n: int, lam: WeightLike) -> list[HighestWeight]:
    """Irreducible summands of ``lam`` tensored with the 2n-dim representation.

    The defining representation is minuscule, so the summands are exactly the
    dominant weights among ``lam +- e_i``, each once.
    """
    lam = _as_weight(lam, n)
    out = []
    for sign in (1, -1):
        for i in range(n):
            shifted = list(lam)
            shifted[i] += sign
            if _is_dominant(shifted):
                out.append(HighestWeight(tuple(shifted)))
    return out


def _is_dominant(entries: Sequence[int]) -> bool:
    return entries[-1] >= 0 and all(a >= b for a, b in zip(entries, entries[1:]))


def gamma_level(k: int) -> list[GammaIndex]:
    """All Gamma indices with first coordinate ``k``, lexicographically."""
    if k < 0:
        raise DomainError("level must be nonnegative")
    return [GammaIndex(k, g2, g3) for g2 in range(k + 1) for g3 in range(k - g2 + 1)]


def dominant_weights(n: int, max_first: int) -> Iterable[HighestWeight]:
    """Every dominant rank-n weight with first entry at most ``max_first``."""
    def rec(prefix, cap, left):
        if left == 0:
            yield HighestWeight(tuple(prefix))
            return
        for v in range(cap, -1, -1):
            yield from rec(prefix + [v], v, left - 1)

    return list(rec([], max_first, n))
