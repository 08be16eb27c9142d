"""Suprema of monomial-type functions on the sphere octant.

The octant is ``Theta = {(x, y, z, w) in [0, 1]^4 : x^2 + y^2 + z^2 + w^2 = 1}``.
Every function handled here has the form

    z^a * w^b * m^c,   m = xw + yz  (or its swapped spelling xz + yw).

For fixed ``(z, w)`` and fixed ``x^2 + y^2``, Cauchy-Schwarz makes ``m``
largest when ``(x, y)`` is parallel to ``(w, z)`` (resp. ``(z, w)``).  The
maximiser therefore lies on the two-parameter family

    z = cos(t) cos(phi),  w = cos(t) sin(phi),  |(x, y)| = sin(t),

on which ``m = sin(t) cos(t)``.  The search sweeps that family with zooming
grids and cross-checks the answer against a coarse sweep of the full octant.
"""
from __future__ import annotations

import math
import random
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import kernels
from .errors import DomainError, SymmetryAssumptionViolated
from .weights import GammaIndex

__all__ = [
    "ThetaPoint",
    "Surrogate",
    "gamma_surrogate",
    "fmn_surrogate",
    "GridConfig",
    "SupResult",
    "eval_g",
    "sup_norm",
    "theta_maximizer",
    "theta_maximizer_squares",
    "RATIO_STEPS",
    "RATIO_CAPS",
    "region_holds",
    "ratio_bound",
    "CptReport",
    "cpt_ratio_check",
    "h_vanishes_on_argmax_set",
    "random_surrogate_pairs",
]

HALF_PI = math.pi / 2
MIX_XW = "xw+yz"
MIX_XZ = "xz+yw"


@dataclass(frozen=True)
class ThetaPoint:
    x: float
    y: float
    z: float
    w: float

    def __post_init__(self):
        coords = (self.x, self.y, self.z, self.w)
        if any(not (0.0 <= v <= 1.0) for v in coords):
            raise DomainError(f"{coords} leaves [0, 1]^4")
        if abs(sum(v * v for v in coords) - 1.0) > 1e-12:
            raise DomainError(f"{coords} is off the unit sphere")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.z, self.w)


@dataclass(frozen=True)
class Surrogate:
    """``z^z_exp * w^w_exp * mix^mix_exp`` with ``mix`` one of the two spellings."""

    z_exp: int
    w_exp: int
    mix_exp: int
    mix: str = MIX_XW

    def __post_init__(self):
        if min(self.z_exp, self.w_exp, self.mix_exp) < 0:
            raise DomainError("exponents must be nonnegative")
        if self.mix not in (MIX_XW, MIX_XZ):
            raise DomainError(f"unknown mixed factor {self.mix!r}")

    def __call__(self, p: ThetaPoint) -> float:
        x, y, z, w = p.as_tuple()
        m = x * w + y * z if self.mix == MIX_XW else x * z + y * w
        return z**self.z_exp * w**self.w_exp * m**self.mix_exp

    def __mul__(self, other: "Surrogate") -> "Surrogate":
        if self.mix != other.mix and self.mix_exp and other.mix_exp:
            raise DomainError("cannot multiply different mixed factors")
        mix = self.mix if self.mix_exp else other.mix
        return Surrogate(
            self.z_exp + other.z_exp,
            self.w_exp + other.w_exp,
            self.mix_exp + other.mix_exp,
            mix,
        )

    def __pow__(self, k: int) -> "Surrogate":
        return Surrogate(self.z_exp * k, self.w_exp * k, self.mix_exp * k, self.mix)

    def swapped(self) -> "Surrogate":
        """Same function after exchanging the x and y coordinates."""
        return Surrogate(self.z_exp, self.w_exp, self.mix_exp,
                         MIX_XZ if self.mix == MIX_XW else MIX_XW)

    @property
    def degree(self) -> int:
        return self.z_exp + self.w_exp + 2 * self.mix_exp

    def label(self) -> str:
        return f"z^{self.z_exp} w^{self.w_exp} ({self.mix})^{self.mix_exp}"


def gamma_surrogate(gamma: Union[GammaIndex, tuple]) -> Surrogate:
    """``g^gamma = z^g3 w^(g1-g2-g3) (xw+yz)^g2``."""
    if not isinstance(gamma, GammaIndex):
        gamma = GammaIndex(*gamma)
    return Surrogate(gamma.g3, gamma.g1 - gamma.g2 - gamma.g3, gamma.g2, MIX_XW)


def fmn_surrogate(m: int, n: int) -> Surrogate:
    """``f_(m,n) = (zw)^n (xz+yw)^m``."""
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise DomainError(f"f_(m,n) needs (m, n) != (0, 0), got {(m, n)}")
    return Surrogate(n, n, m, MIX_XZ)


def eval_g(gamma: Union[GammaIndex, tuple], p: ThetaPoint) -> float:
    if not isinstance(p, ThetaPoint):
        p = ThetaPoint(*p)
    return gamma_surrogate(gamma)(p)


def _family_point(t: float, ph: float, mix: str) -> ThetaPoint:
    s, r = math.cos(t), math.sin(t)
    z, w = s * math.cos(ph), s * math.sin(ph)
    if mix == MIX_XW:
        x, y = r * math.sin(ph), r * math.cos(ph)
    else:
        x, y = r * math.cos(ph), r * math.sin(ph)
    # clip the ~1e-17 negatives that cos(pi/2) can produce
    return ThetaPoint(*(min(max(v, 0.0), 1.0) for v in (x, y, z, w)))


def _sphere_point(i: int, j: int, k: int, N: int) -> ThetaPoint:
    h = HALF_PI / (N - 1)
    al, be, ps = i * h, j * h, k * h
    coords = (
        math.cos(al),
        math.sin(al) * math.cos(be),
        math.sin(al) * math.sin(be) * math.cos(ps),
        math.sin(al) * math.sin(be) * math.sin(ps),
    )
    return ThetaPoint(*(min(max(v, 0.0), 1.0) for v in coords))


@dataclass(frozen=True)
class GridConfig:
    resolution: int = 200
    refine: int = 3
    sphere_resolution: int = 40
    window: int = 2
    crosscheck_tol: float = 1e-9
    crosscheck: bool = True


@dataclass(frozen=True)
class SupResult:
    value: float
    argmax: ThetaPoint
    params: tuple[float, float]
    sphere_value: float | None = None
    sphere_argmax: ThetaPoint | None = None


@lru_cache(maxsize=4096)
def sup_norm(target: Surrogate, config: GridConfig = GridConfig()) -> SupResult:
    """Numerical supremum of ``target`` over Theta with its maximiser.

    Raises ``SymmetryAssumptionViolated`` if the full-octant sweep finds a
    larger value than the reduced search.
    """
    a, b, c = target.z_exp, target.w_exp, target.mix_exp
    N = config.resolution
    t0, t1, p0, p1 = 0.0, HALF_PI, 0.0, HALF_PI
    best, bi, bj = kernels.reduced_grid_max(a, b, c, t0, t1, p0, p1, N)
    t_best = t0 + bi * (t1 - t0) / (N - 1)
    p_best = p0 + bj * (p1 - p0) / (N - 1)
    for _ in range(config.refine):
        ht = config.window * (t1 - t0) / (N - 1)
        hp = config.window * (p1 - p0) / (N - 1)
        t0, t1 = max(0.0, t_best - ht), min(HALF_PI, t_best + ht)
        p0, p1 = max(0.0, p_best - hp), min(HALF_PI, p_best + hp)
        val, bi, bj = kernels.reduced_grid_max(a, b, c, t0, t1, p0, p1, N)
        if val > best:
            best = val
            t_best = t0 + bi * (t1 - t0) / (N - 1)
            p_best = p0 + bj * (p1 - p0) / (N - 1)
    argmax = _family_point(t_best, p_best, target.mix)
    value = target(argmax)
    if not config.crosscheck:
        return SupResult(value, argmax, (t_best, p_best))

    M = config.sphere_resolution
    sval, i, j, k = kernels.sphere_grid_max(a, b, c, int(target.mix == MIX_XZ), M)
    if sval > value * (1.0 + config.crosscheck_tol):
        raise SymmetryAssumptionViolated(
            f"{target.label()}: octant sweep {sval!r} beats reduced search {value!r}"
        )
    return SupResult(value, argmax, (t_best, p_best), sval, _sphere_point(i, j, k, M))


def theta_maximizer_squares(m: int, n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Exact squared coordinates of the maximiser of ``f_(m,n)``."""
    if m < 0 or n < 0 or (m, n) == (0, 0):
        raise DomainError(f"theta_(m,n) needs (m, n) != (0, 0), got {(m, n)}")
    xx = Fraction(m, 4 * (n + m))
    zz = Fraction(2 * n + m, 4 * (n + m))
    return (xx, xx, zz, zz)


def theta_maximizer(m: int, n: int) -> ThetaPoint:
    xx, _, zz, _ = theta_maximizer_squares(m, n)
    x = math.sqrt(m) / (2 * math.sqrt(n + m))
    z = math.sqrt(2 * n + m) / (2 * math.sqrt(n + m))
    assert 2 * xx + 2 * zz == 1
    return ThetaPoint(x, x, z, z)


# gamma steps and their caps for the four regions of the bounded-ratio inequalities
RATIO_STEPS = {1: (1, 1, 0), 2: (2, 0, 1), 3: (1, 0, 0), 4: (1, 0, 1)}
RATIO_CAPS = {1: 2.0, 2: 4.0, 3: 2.0, 4: 2.0}


def region_holds(part: int, gamma: GammaIndex) -> bool:
    g1, g2, g3 = gamma.as_tuple()
    excess = g1 - g2 - 2 * g3
    if part == 1:
        return g1 == g2 and g3 == 0
    if part == 2:
        return excess == 0
    if part == 3:
        return excess >= 0
    if part == 4:
        return excess <= 0
    raise DomainError(f"no part {part}")


def ratio_bound(part: int, gamma: Union[GammaIndex, tuple],
                config: GridConfig = GridConfig()) -> float:
    """``sup g^gamma / sup g^(gamma + step)`` for the given region."""
    if not isinstance(gamma, GammaIndex):
        gamma = GammaIndex(*gamma)
    if not region_holds(part, gamma):
        raise DomainError(f"{gamma.as_tuple()} is outside region {part}")
    stepped = gamma.shift(*RATIO_STEPS[part])
    num = sup_norm(gamma_surrogate(gamma), config).value
    den = sup_norm(gamma_surrogate(stepped), config).value
    return num / den


@dataclass
class CptReport:
    f: str
    h: str
    m_max: int
    precondition_met: bool
    x0: ThetaPoint | None = None
    h_x0: float | None = None
    bound: float | None = None
    ratios: list[float] = field(default_factory=list)
    h_at_maximizers: list[float] = field(default_factory=list)
    ratio_ok: bool = True
    monotone_ok: bool = True
    tol: float = 1e-8

    @property
    def passed(self) -> bool:
        return self.ratio_ok and self.monotone_ok

    def to_dict(self) -> dict:
        return {
            "f": self.f,
            "h": self.h,
            "m_max": self.m_max,
            "precondition_met": self.precondition_met,
            "x0": None if self.x0 is None else list(self.x0.as_tuple()),
            "h_x0": self.h_x0,
            "bound": self.bound,
            "ratios": self.ratios,
            "h_at_maximizers": self.h_at_maximizers,
            "ratio_ok": self.ratio_ok,
            "monotone_ok": self.monotone_ok,
            "tolerance": self.tol,
        }


def _maximizer_candidates(f: Surrogate, fmax: SupResult, config: GridConfig,
                          rel: float = 1e-9) -> list[ThetaPoint]:
    # maximisers of f need not be unique: f = (xw+yz)^c is maximal on a whole
    # curve, f = 1 everywhere.  Flat directions of the reduced family are the
    # parameter axes, so scan both axis lines through the refined argmax plus
    # the coarse grid, keeping points that attain the sup.
    N = config.resolution
    h = HALF_PI / (N - 1)
    t_best, p_best = fmax.params
    params = [(t_best, p_best)]
    params += [(t_best, j * h) for j in range(N)]
    params += [(i * h, p_best) for i in range(N)]
    params += [(i * h, j * h) for i in range(0, N, 4) for j in range(0, N, 4)]
    out = []
    for t, ph in params:
        p = _family_point(t, ph, f.mix)
        if f(p) >= fmax.value * (1.0 - rel):
            out.append(p)
    return out


def cpt_ratio_check(f: Surrogate, h: Surrogate, m_max: int,
                    config: GridConfig = GridConfig(), tol: float = 1e-8) -> CptReport:
    """Check ``|h^m f| / |h^(m+1) f| <= 1 / |h(x0)|`` for ``m = 0..m_max``.

    ``x0`` is a maximiser of ``|f|``; among several, the one with the largest
    ``|h|`` is used.  Also checks that ``|h|`` at the maximisers of ``h^m f``
    is nondecreasing in ``m``.
    """
    report = CptReport(f.label(), h.label(), m_max, precondition_met=False, tol=tol)
    fmax = sup_norm(f, config)
    if fmax.value <= 0:
        return report
    x0 = max(_maximizer_candidates(f, fmax, config), key=lambda p: abs(h(p)))
    h0 = abs(h(x0))
    if h0 <= 1e-12:
        return report
    report.precondition_met = True
    report.x0, report.h_x0, report.bound = x0, h0, 1.0 / h0

    sups = [fmax]
    for m in range(1, m_max + 2):
        sups.append(sup_norm(h**m * f, config))
    report.ratios = [sups[m].value / sups[m + 1].value for m in range(m_max + 1)]
    report.h_at_maximizers = [abs(h(r.argmax)) for r in sups]
    report.ratio_ok = all(r * h0 <= 1.0 + tol for r in report.ratios)
    hs = report.h_at_maximizers
    report.monotone_ok = all(b >= a - tol for a, b in zip(hs, hs[1:]))
    return report


def h_vanishes_on_argmax_set(f: Surrogate, h: Surrogate) -> bool:
    """Whether ``h`` is zero at every maximiser of ``f`` (same mixed factor).

    The maximisers of ``z^a w^b m^c`` have ``z = 0`` iff ``a = 0 < b``,
    ``w = 0`` iff ``b = 0 < a``, and ``m = 0`` iff ``c = 0 < a + b``.
    """
    a, b, c = f.z_exp, f.w_exp, f.mix_exp
    return (
        (h.z_exp > 0 and a == 0 and b > 0)
        or (h.w_exp > 0 and b == 0 and a > 0)
        or (h.mix_exp > 0 and c == 0 and a + b > 0)
    )


def random_surrogate_pairs(seed: int, count: int = 100, max_exp: int = 5):
    """Seeded pairs ``(f, h)`` of products ``z^a w^b (xw+yz)^c``, exponents <= max_exp.

    Pairs where ``h`` vanishes on every maximiser of ``f`` are redrawn, since
    the inequality is vacuous for them.
    """
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        f = Surrogate(*(rng.randint(0, max_exp) for _ in range(3)))
        h = Surrogate(*(rng.randint(0, max_exp) for _ in range(3)))
        if not h_vanishes_on_argmax_set(f, h):
            pairs.append((f, h))
    return pairs
