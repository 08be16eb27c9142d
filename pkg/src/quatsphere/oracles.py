"""Independent reference computations used to cross-check the main code paths.

Nothing here is used by the code it checks.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

__all__ = [
    "pattern_dimension",
    "fraction_rank",
    "closed_form_sup",
    "octant_grid_sup",
]


@lru_cache(maxsize=None)
def pattern_dimension(lam: tuple[int, ...]) -> int:
    """Dimension of the sp(2n) irrep ``lam`` by counting branching patterns.

    Restricts Sp(2k) -> Sp(2k-2) repeatedly down to the trivial group; every
    complete chain of interlacing sequences is one basis vector.
    """
    lam = tuple(lam)
    if not lam:
        return 1
    n = len(lam)
    bounds = list(lam) + [0]
    total = 0

    def nus(i, acc):
        if i == n:
            yield tuple(acc)
            return
        for v in range(bounds[i + 1], bounds[i] + 1):
            yield from nus(i + 1, acc + [v])

    def mus(nu, i, acc):
        if i == n - 1:
            yield tuple(acc)
            return
        for v in range(nu[i + 1], nu[i] + 1):
            yield from mus(nu, i + 1, acc + [v])

    for nu in nus(0, []):
        for mu in mus(nu, 0, []):
            total += pattern_dimension(mu)
    return total


def fraction_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by plain Gaussian elimination on Fractions."""
    M = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


def closed_form_sup(z_exp: int, w_exp: int, mix_exp: int) -> float:
    """Supremum of ``z^a w^b m^c`` over the octant, by Lagrange multipliers.

    With ``|(z, w)| = s`` and ``|(x, y)| = r`` the best mixed factor is ``rs``;
    then ``s^2 = (a+b+c)/(a+b+2c)`` and ``z^2/s^2 = a/(a+b)``.
    """
    a, b, c = z_exp, w_exp, mix_exp
    if a + b + c == 0:
        return 1.0
    ss = Fraction(a + b + c, a + b + 2 * c)
    rr = 1 - ss
    cc = Fraction(a, a + b) if a + b else Fraction(1, 2)
    val = math.sqrt(ss) ** (a + b + c) * math.sqrt(rr) ** c
    return val * math.sqrt(cc) ** a * math.sqrt(1 - cc) ** b


def octant_grid_sup(func, N: int = 60) -> float:
    """Brute-force maximum of ``func(x, y, z, w)`` over an angle grid of the octant."""
    best = -math.inf
    h = (math.pi / 2) / (N - 1)
    for i in range(N):
        al = i * h
        for j in range(N):
            be = j * h
            for k in range(N):
                ps = k * h
                p = (
                    math.cos(al),
                    math.sin(al) * math.cos(be),
                    math.sin(al) * math.sin(be) * math.cos(ps),
                    math.sin(al) * math.sin(be) * math.sin(ps),
                )
                best = max(best, func(*p))
    return best
