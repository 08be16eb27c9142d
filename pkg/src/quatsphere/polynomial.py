"""Commutative polynomials with exact rational coefficients.

Variables are the coordinate functions ``u^row_col`` of the quaternion
sphere.  A monomial is a tuple of ``(variable, exponent)`` pairs sorted by
variable; a polynomial maps monomials to nonzero ``Fraction`` coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Iterable, Mapping

from .errors import DomainError

__all__ = ["CoordinateVariable", "SymPolynomial", "coordinate_variables", "named_variables"]


@dataclass(frozen=True, order=True)
class CoordinateVariable:
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise DomainError(f"bad variable index u^{self.row}_{self.col}")

    def check_rank(self, n: int) -> None:
        if self.row not in (1, 2 * n) or self.col > 2 * n:
            raise DomainError(f"u^{self.row}_{self.col} is not a coordinate for rank {n}")

    def __str__(self):
        return f"u{self.row}_{self.col}"


Monomial = tuple  # tuple[tuple[CoordinateVariable, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(m: Monomial):
    return (sum(e for _, e in m), tuple((v.row, v.col, e) for v, e in m))


class SymPolynomial:
    """Immutable polynomial in commuting coordinate variables over Q."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational] | None = None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[mono] = coeff
        self._terms = {m: clean[m] for m in sorted(clean, key=_mono_key)}
        self._hash = None

    @classmethod
    def var(cls, row: int, col: int) -> "SymPolynomial":
        return cls({((CoordinateVariable(row, col), 1),): 1})

    @classmethod
    def constant(cls, c: Rational) -> "SymPolynomial":
        return cls({(): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def variables(self) -> set[CoordinateVariable]:
        return {v for m in self._terms for v, _ in m}

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other) -> "SymPolynomial":
        if isinstance(other, SymPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return SymPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return SymPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SymPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        out = SymPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def derive(self, image: Callable[[CoordinateVariable], "SymPolynomial"]) -> "SymPolynomial":
        """Apply the derivation that sends each variable ``v`` to ``image(v)``."""
        acc: dict = {}
        cache: dict = {}
        for mono, coeff in self._terms.items():
            for idx, (v, e) in enumerate(mono):
                if v not in cache:
                    cache[v] = image(v)
                if not cache[v]:
                    continue
                rest = list(mono)
                if e == 1:
                    del rest[idx]
                else:
                    rest[idx] = (v, e - 1)
                rest = tuple(rest)
                for m2, c2 in cache[v]._terms.items():
                    m = _mono_mul(rest, m2)
                    acc[m] = acc.get(m, 0) + coeff * e * c2
        return SymPolynomial(acc)

    def coefficient_ratio(self, other: "SymPolynomial") -> Fraction | None:
        """``c`` with ``self == c * other``, or None if not proportional."""
        if not other:
            return None
        if not self:
            return Fraction(0)
        if set(self._terms) != set(other._terms):
            return None
        m0 = next(iter(other._terms))
        c = self._terms[m0] / other._terms[m0]
        if all(self._terms[m] == c * other._terms[m] for m in other._terms):
            return c
        return None

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            body = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def coordinate_variables(n: int) -> list[CoordinateVariable]:
    return [CoordinateVariable(r, c) for r in (1, 2 * n) for c in range(1, 2 * n + 1)]


def named_variables(n: int) -> dict[str, SymPolynomial]:
    """The four distinguished coordinates ``x, y, z, w``."""
    return {
        "x": SymPolynomial.var(1, 2 * n - 1),
        "y": SymPolynomial.var(2 * n, 2 * n - 1),
        "z": SymPolynomial.var(1, 2 * n),
        "w": SymPolynomial.var(2 * n, 2 * n),
    }


def monomial_support(polys: Iterable[SymPolynomial]) -> list[Monomial]:
    seen = set()
    for p in polys:
        seen.update(p.monomials())
    return sorted(seen, key=_mono_key)
