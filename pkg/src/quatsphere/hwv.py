"""Highest weight vectors in the coordinate algebra of Sp(2n)/Sp(2n-2).

The Chevalley generators act on the coordinates through the defining
representation: ``f(u^k_l) = sum_m u^k_m t_ml(f)``, extended to products by
the Leibniz rule.  The basis of the defining representation is fixed so that
this action reproduces the following table on ``x, y, z, w``::

    E_1(x) = -z, E_1(y) = -w, E_i(x..w) = 0 for i > 1
    H_1 = (-1, -1, 1, 1), H_2 = (1, 1, 0, 0), H_i = 0 for i > 2

and the candidates ``b(l1, l2, j) = z^j w^(l1-l2-j) (xw - yz)^l2`` are then
checked exactly.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

from .errors import ConventionError, DomainError
from .polynomial import (
    CoordinateVariable,
    SymPolynomial,
    monomial_support,
    named_variables,
)

__all__ = [
    "GeneratorAction",
    "HWVReport",
    "cartan_matrix",
    "chevalley_violations",
    "build_generator_matrices",
    "generator",
    "apply_generator",
    "hwv_candidate",
    "verify_highest_weight",
    "linear_independence",
    "bareiss_rank",
]

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GeneratorAction:
    kind: str  # "E", "F" or "H"
    index: int  # 1..n
    n: int
    matrix: Matrix

    @property
    def label(self) -> str:
        return f"{self.kind}_{self.index}"

    def entry(self, row: int, col: int) -> int:
        """1-based matrix entry ``t_{row,col}``."""
        return self.matrix[row - 1][col - 1]


def _zeros(d):
    return [[0] * d for _ in range(d)]


def _unit(d, i, j, v=1):
    m = _zeros(d)
    m[i][j] = v
    return m


def _add(*ms):
    d = len(ms[0])
    return [[sum(m[i][j] for m in ms) for j in range(d)] for i in range(d)]


def _scale(m, c):
    return [[c * v for v in row] for row in m]


def _matmul(a, b):
    d = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d)] for i in range(d)]


def _bracket(a, b):
    return _add(_matmul(a, b), _scale(_matmul(b, a), -1))


def _simple_roots(n):
    roots = []
    for i in range(n - 1):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        roots.append(r)
    r = [0] * n
    r[n - 1] = 2
    roots.append(r)
    return roots


def cartan_matrix(n: int) -> list[list[int]]:
    """``A[i][j] = <alpha_i, alpha_j^vee>`` for type C_n."""
    roots = _simple_roots(n)

    def pair(a, b):
        return sum(x * y for x, y in zip(a, b))

    return [[2 * pair(a, b) // pair(b, b) for b in roots] for a in roots]


def _standard_generators(n):
    """Chevalley generators in the basis of weights (e1..en, -en..-e1)."""
    d = 2 * n

    def bar(i):  # 0-based index of the weight opposite to index i
        return d - 1 - i

    E, F, H = [], [], []
    for i in range(n - 1):
        e = _add(_unit(d, i, i + 1), _unit(d, bar(i + 1), bar(i), -1))
        h = _add(_unit(d, i, i), _unit(d, i + 1, i + 1, -1),
                 _unit(d, bar(i), bar(i), -1), _unit(d, bar(i + 1), bar(i + 1)))
        E.append(e)
        H.append(h)
    E.append(_unit(d, n - 1, n))
    H.append(_add(_unit(d, n - 1, n - 1), _unit(d, n, n, -1)))
    F = [[list(col) for col in zip(*e)] for e in E]
    return E, F, H


def chevalley_violations(E, F, H) -> list[str]:
    """Failed Chevalley relations among the given matrices (empty if none)."""
    n = len(E)
    A = cartan_matrix(n)
    d = len(E[0])
    zero = _zeros(d)
    bad = []
    for i in range(n):
        for j in range(n):
            if _bracket(H[i], H[j]) != zero:
                bad.append(f"[H{i+1},H{j+1}] != 0")
            if _bracket(H[i], E[j]) != _scale(E[j], A[j][i]):
                bad.append(f"[H{i+1},E{j+1}] != A{j+1}{i+1} E{j+1}")
            if _bracket(H[i], F[j]) != _scale(F[j], -A[j][i]):
                bad.append(f"[H{i+1},F{j+1}] != -A{j+1}{i+1} F{j+1}")
            want = H[i] if i == j else zero
            if _bracket(E[i], F[j]) != want:
                bad.append(f"[E{i+1},F{j+1}] wrong")
    return bad


def _column(m, col):
    return [row[col] for row in m]


def _anchor_violations(E, H, n) -> list[str]:
    """Check the action table on x, y, z, w (columns 2n-1 and 2n)."""
    d = 2 * n
    cx, cz = d - 2, d - 1  # 0-based columns of x/y and z/w
    zero = [0] * d

    def unit(i, v):
        out = [0] * d
        out[i] = v
        return out

    bad = []
    if _column(E[0], cx) != unit(cz, -1):
        bad.append("E_1(x) = -z")
    for i in range(1, n):
        if _column(E[i], cx) != zero or _column(E[i], cz) != zero:
            bad.append(f"E_{i+1} kills x, y, z, w")
    if _column(H[0], cx) != unit(cx, -1) or _column(H[0], cz) != unit(cz, 1):
        bad.append("H_1 weights (-1, -1, 1, 1)")
    if _column(H[1], cx) != unit(cx, 1) or _column(H[1], cz) != zero:
        bad.append("H_2 weights (1, 1, 0, 0)")
    for i in range(2, n):
        if _column(H[i], cx) != zero or _column(H[i], cz) != zero:
            bad.append(f"H_{i+1} kills x, y, z, w")
    return bad


def _conjugate(mats, perm, signs):
    # new basis vector l is signs[l] * (old basis vector perm[l])
    d = len(perm)
    return [
        [[signs[i] * signs[j] * m[perm[i]][perm[j]] for j in range(d)] for i in range(d)]
        for m in mats
    ]


@lru_cache(maxsize=None)
def build_generator_matrices(n: int) -> tuple[GeneratorAction, ...]:
    """E_i, F_i, H_i (i = 1..n) in the anchored basis of the 2n-dim representation.

    Tries the standard weight ordering and its reversal, each with every
    diagonal sign change, and returns the first choice satisfying the
    Chevalley relations and the whole action table.
    """
    if n < 2:
        raise DomainError("rank must be at least 2")
    d = 2 * n
    E, F, H = _standard_generators(n)
    if chevalley_violations(E, F, H):
        raise ConventionError("standard generators violate the Chevalley relations")
    for perm in (list(range(d)), list(range(d - 1, -1, -1))):
        for signs in itertools.product((1, -1), repeat=d):
            E2 = _conjugate(E, perm, signs)
            H2 = _conjugate(H, perm, signs)
            if _anchor_violations(E2, H2, n):
                continue
            F2 = _conjugate(F, perm, signs)
            if chevalley_violations(E2, F2, H2):
                continue
            out = []
            for kind, mats in (("E", E2), ("F", F2), ("H", H2)):
                for i, m in enumerate(mats):
                    out.append(GeneratorAction(kind, i + 1, n, tuple(map(tuple, m))))
            return tuple(out)
    raise ConventionError(f"no basis ordering reproduces the action table for n={n}")


def generator(n: int, label: str) -> GeneratorAction:
    """Look up ``"E_1"``, ``"H_2"``, ... for rank ``n``."""
    for g in build_generator_matrices(n):
        if g.label == label:
            return g
    raise DomainError(f"no generator {label!r} for rank {n}")


def apply_generator(g: GeneratorAction, p: SymPolynomial) -> SymPolynomial:
    """Leibniz extension of ``u^k_l -> sum_m u^k_m t_ml(g)``."""
    for v in p.variables():
        v.check_rank(g.n)
    d = 2 * g.n

    def image(v: CoordinateVariable) -> SymPolynomial:
        terms = {}
        for m in range(1, d + 1):
            c = g.entry(m, v.col)
            if c:
                terms[((CoordinateVariable(v.row, m), 1),)] = c
        return SymPolynomial(terms)

    return p.derive(image)


def hwv_candidate(l1: int, l2: int, j: int, n: int = 2) -> SymPolynomial:
    """``z^j w^(l1-l2-j) (xw - yz)^l2``, expanded."""
    if not (l1 >= l2 >= 0 and 0 <= j <= l1 - l2):
        raise DomainError(f"need l1 >= l2 >= 0 and 0 <= j <= l1 - l2, got {(l1, l2, j)}")
    v = named_variables(n)
    det = v["x"] * v["w"] - v["y"] * v["z"]
    return v["z"] ** j * v["w"] ** (l1 - l2 - j) * det**l2


@dataclass
class HWVReport:
    n: int
    lambda1: int
    lambda2: int
    j: int | None = None
    e_annihilates: list[bool] = field(default_factory=list)
    h_eigenvalues: list[Fraction | None] = field(default_factory=list)
    expected_h: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.e_annihilates) and self.h_eigenvalues == self.expected_h

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda": [self.lambda1, self.lambda2],
            "j": self.j,
            "e_annihilates": self.e_annihilates,
            "h_eigenvalues": [None if h is None else str(h) for h in self.h_eigenvalues],
            "expected_h": self.expected_h,
            "passed": self.passed,
        }


def verify_highest_weight(p: SymPolynomial, l1: int, l2: int, n: int,
                          j: int | None = None) -> HWVReport:
    """Exact check of ``E_i p = 0`` and ``H_i p = (l1-l2, l2, 0, ...)_i p``."""
    if not p:
        raise DomainError("the zero polynomial is not a weight vector")
    gens = build_generator_matrices(n)
    report = HWVReport(n, l1, l2, j, expected_h=[l1 - l2, l2] + [0] * (n - 2))
    for g in gens:
        if g.kind == "E":
            report.e_annihilates.append(apply_generator(g, p).is_zero())
        elif g.kind == "H":
            report.h_eigenvalues.append(apply_generator(g, p).coefficient_ratio(p))
    return report


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pv = M[rank][c]
        for r in range(rank + 1, nrows):
            mrc = M[r][c]
            for cc in range(c + 1, ncols):
                num = M[r][cc] * pv - mrc * M[rank][cc]
                assert num % prev == 0
                M[r][cc] = num // prev
            M[r][c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def linear_independence(ps: Sequence[SymPolynomial]) -> tuple[bool, int]:
    """``(independent, rank)`` of the coefficient matrix over Q."""
    if not ps:
        raise DomainError("empty family")
    support = monomial_support(ps)
    rows = []
    for p in ps:
        terms = p.terms
        coeffs = [Fraction(terms.get(m, 0)) for m in support]
        scale = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
        rows.append([int(c * scale) for c in coeffs])
    if not support:
        return False, 0
    rank = bareiss_rank(rows)
    return rank == len(ps), rank
