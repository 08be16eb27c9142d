"""Explicit paths in Gamma and the linear growth bound on Dirac eigenvalues.

Four moves connect isotypic labels; each is allowed from the region on which
the matching commutator bound holds:

    M_1+2  (+1, +1, 0)   from g1 == g2, g3 == 0
    M_2+3  (+2,  0, +1)  from g1 - g2 - 2 g3 == 0
    M_1    (+1,  0, 0)   from g1 - g2 - 2 g3 >= 0
    M_1+3  (+1,  0, +1)  from g1 - g2 - 2 g3 <= 0

If every move changes the eigenvalue by at most ``c``, a path of length
``L <= g1`` from (0, 0, 0) gives ``|d(gamma)| <= |d(0)| + c L``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Union

from .errors import DomainError
from .spectrum import DiracAssignment
from .weights import GammaIndex

__all__ = [
    "MoveType",
    "PathReport",
    "StepBounds",
    "build_path",
    "eigenvalue_bound",
    "verify_step_bounds",
    "gammas_up_to",
    "random_bounded_step_assignment",
]


class MoveType(Enum):
    M_1_2 = ("M_1+2", (1, 1, 0), 1)
    M_2_3 = ("M_2+3", (2, 0, 1), 2)
    M_1 = ("M_1", (1, 0, 0), 3)
    M_1_3 = ("M_1+3", (1, 0, 1), 4)

    def __init__(self, label, step, part):
        self.label = label
        self.step = step
        self.part = part

    def allowed_from(self, g: GammaIndex) -> bool:
        excess = g.g1 - g.g2 - 2 * g.g3
        if self is MoveType.M_1_2:
            return g.g1 == g.g2 and g.g3 == 0
        if self is MoveType.M_2_3:
            return excess == 0
        if self is MoveType.M_1:
            return excess >= 0
        return excess <= 0

    def apply(self, g: GammaIndex) -> GammaIndex:
        return g.shift(*self.step)


@dataclass
class PathReport:
    target: GammaIndex
    waypoints: list[GammaIndex] = field(default_factory=list)
    moves: list[MoveType] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.moves)

    def stage_lengths(self) -> dict[str, int]:
        counts = {m.label: 0 for m in MoveType}
        for m in self.moves:
            counts[m.label] += 1
        return counts

    def is_valid(self) -> bool:
        if not self.waypoints or self.waypoints[0] != GammaIndex(0, 0, 0):
            return False
        if self.waypoints[-1] != self.target or len(self.waypoints) != self.length + 1:
            return False
        for src, dst, mv in zip(self.waypoints, self.waypoints[1:], self.moves):
            if not mv.allowed_from(src) or mv.apply(src) != dst:
                return False
        return self.length <= self.target.g1

    def to_dict(self) -> dict:
        return {
            "target": list(self.target.as_tuple()),
            "waypoints": [list(g.as_tuple()) for g in self.waypoints],
            "moves": [m.label for m in self.moves],
            "length": self.length,
            "valid": self.is_valid(),
        }


def _as_gamma(g) -> GammaIndex:
    return g if isinstance(g, GammaIndex) else GammaIndex(*g)


def build_path(gamma: Union[GammaIndex, tuple]) -> PathReport:
    """Path from (0, 0, 0) to ``gamma`` in at most ``g1`` moves.

    Climb the diagonal to ``(g2, g2, 0)``, then use ``M_2+3`` and finish with
    ``M_1`` (when ``g1 - g2 - 2 g3 >= 0``) or with ``M_1+3`` (otherwise).
    """
    gamma = _as_gamma(gamma)
    g1, g2, g3 = gamma.as_tuple()
    if g1 - g2 - 2 * g3 >= 0:
        plan = [(MoveType.M_1_2, g2), (MoveType.M_2_3, g3), (MoveType.M_1, g1 - g2 - 2 * g3)]
    else:
        plan = [
            (MoveType.M_1_2, g2),
            (MoveType.M_2_3, g1 - g2 - g3),
            (MoveType.M_1_3, g2 + 2 * g3 - g1),
        ]
    cur = GammaIndex(0, 0, 0)
    report = PathReport(gamma, [cur])
    for move, count in plan:
        for _ in range(count):
            if not move.allowed_from(cur):
                raise AssertionError(f"{move.label} not allowed from {cur.as_tuple()}")
            cur = move.apply(cur)
            report.waypoints.append(cur)
            report.moves.append(move)
    assert cur == gamma
    return report


def eigenvalue_bound(d0: float, c: float, gamma: Union[GammaIndex, tuple]) -> float:
    """``|d0| + c * len(path)``, an upper bound for ``|d(gamma)|``."""
    if c <= 0:
        raise DomainError("step bound must be positive")
    return abs(d0) + c * build_path(gamma).length


def gammas_up_to(g1_max: int):
    for g1 in range(g1_max + 1):
        for g2 in range(g1 + 1):
            for g3 in range(g1 - g2 + 1):
                yield GammaIndex(g1, g2, g3)


@dataclass
class StepBounds:
    suprema: dict[int, float]
    g1_max: int

    @property
    def c(self) -> float:
        return max(self.suprema.values())

    def to_dict(self) -> dict:
        return {"suprema": {str(k): v for k, v in self.suprema.items()},
                "g1_max": self.g1_max, "c": self.c}


def verify_step_bounds(d: Callable[[GammaIndex], float], g1_max: int) -> StepBounds:
    """Largest ``|d(gamma + step) - d(gamma)|`` per region, sources with g1 <= g1_max."""
    sup = {m.part: 0.0 for m in MoveType}
    for g in gammas_up_to(g1_max):
        dg = d(g)
        for m in MoveType:
            if m.allowed_from(g):
                sup[m.part] = max(sup[m.part], abs(d(m.apply(g)) - dg))
    return StepBounds(sup, g1_max)


def random_bounded_step_assignment(seed: int, g1_max: int = 32) -> DiracAssignment:
    """A seeded eigenvalue assignment whose moves change it by a bounded amount.

    Linear in gamma with random slopes, plus bounded noise and an arbitrary
    offset, possibly with a sign flip.
    """
    rng = random.Random(seed)
    slopes = [rng.uniform(-3, 3) for _ in range(3)]
    offset = rng.uniform(-10, 10)
    amp = rng.uniform(0, 2)
    noise = {g: rng.uniform(-amp, amp) for g in gammas_up_to(g1_max)}

    def d(g: GammaIndex) -> float:
        return offset + slopes[0] * g.g1 + slopes[1] * g.g2 + slopes[2] * g.g3 + noise[g]

    return DiracAssignment(d, name=f"random-{seed}")
