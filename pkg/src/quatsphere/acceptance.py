"""The ten exit criteria, each runnable on its own and reported uniformly."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import hwv, paths, spectrum, supnorm, weights
from .oracles import pattern_dimension
from .supnorm import GridConfig

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "pmap"]


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    tolerance: str
    oracle: str
    observed: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "tolerance": self.tolerance,
            "oracle": self.oracle,
            "observed": self.observed,
        }
        if timings:
            out["seconds"] = round(self.seconds, 4)
        return out

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number:2d}: {self.name}"


def pmap(fn, items, workers: int = 1):
    """Ordered map, optionally across processes; results never depend on ``workers``."""
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def c1_spectral_dimension(ranks=(2, 3, 4), time_limit=10.0, **_):
    t0 = time.perf_counter()
    observed = {}
    ok = True
    for n in ranks:
        deg = spectrum.multiplicity_polynomial_degree(n, 4 * n + 8)
        rep = spectrum.spectral_dimension(n)
        observed[str(n)] = {"degree": deg, "spectral_dimension": rep.spectral_dimension}
        ok &= deg == 4 * n - 2 and rep.spectral_dimension == 4 * n - 1
    elapsed = time.perf_counter() - t0
    ok &= elapsed < time_limit
    return CriterionResult(1, "spectral dimension 4n-1 for n = 2, 3, 4", ok,
                           f"exact; runtime < {time_limit:g} s",
                           "exact integer forward differences of M(0..4n+8)", observed)


C2_WEIGHTS = [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]


def c2_weyl_dimensions(**_):
    observed = {}
    ok = True
    for lam in C2_WEIGHTS:
        got = weights.weyl_dimension(2, lam)
        want = pattern_dimension(lam)
        observed[str(lam)] = {"weyl": got, "oracle": want}
        ok &= got == want
    return CriterionResult(2, "Weyl dimensions for n = 2", ok, "exact",
                           "count of complete branching patterns down to Sp(0)", observed)


def c3_branching(**_):
    ok = True
    checked = 0
    for n in (2, 3):
        for lam in weights.dominant_weights(n, 3):
            total = 0
            for mu in weights.dominant_weights(n - 1, lam[0]):
                total += weights.branching_multiplicity(lam, mu) * weights.weyl_dimension(n - 1, mu)
            ok &= total == weights.weyl_dimension(n, lam)
            checked += 1
        for lam in weights.dominant_weights(n, 5):
            m0 = weights.branching_multiplicity(lam, weights.HighestWeight.zero(n - 1))
            ok &= m0 == weights.trivial_isotypic_multiplicity(lam)
            checked += 1
    return CriterionResult(3, "branching dimension sums and trivial multiplicities", ok,
                           "exact", "Weyl dimensions of both ranks; l1 - l2 + 1 rule",
                           {"cases": checked})


def c4_bounded_leap(**_):
    ok = True
    checked = 0
    max_spread = 0
    for n in (2, 3):
        for lam in weights.dominant_weights(n, 4):
            parts = weights.tensor_with_defining(n, lam)
            ok &= sum(weights.weyl_dimension(n, mu) for mu in parts) == 2 * n * weights.weyl_dimension(n, lam)
            spread = max(abs(mu[0] - lam[0]) for mu in parts)
            max_spread = max(max_spread, spread)
            ok &= spread <= 1
            checked += 1
    return CriterionResult(4, "tensor with defining representation", ok,
                           "exact dimension count; |mu1 - l1| <= 1",
                           "2n * dim(lambda) = sum of summand dimensions",
                           {"cases": checked, "max_spread": max_spread})


def c5_maximizer(grid: GridConfig = GridConfig(), tol=1e-6, time_limit=30.0, **_):
    t0 = time.perf_counter()
    worst = 0.0
    for m in range(11):
        for n in range(11):
            if (m, n) == (0, 0):
                continue
            f = supnorm.fmn_surrogate(m, n)
            got = supnorm.sup_norm(f, grid).value
            worst = max(worst, abs(got - f(supnorm.theta_maximizer(m, n))))
    elapsed = time.perf_counter() - t0
    ok = worst <= tol and elapsed < time_limit
    return CriterionResult(5, "closed-form maximiser of f_(m,n)", ok,
                           f"abs {tol:g}; runtime < {time_limit:g} s",
                           "f_(m,n) evaluated at theta_(m,n)", {"max_abs_error": worst})


def _ratio_item(args):
    part, g, grid = args
    return supnorm.ratio_bound(part, g, grid)


def c6_ratio_bounds(grid: GridConfig = GridConfig(), g1_max=12, tol=1e-6, workers=1, **_):
    items = [
        (part, g.as_tuple(), grid)
        for g in paths.gammas_up_to(g1_max)
        for part in (1, 2, 3, 4)
        if supnorm.region_holds(part, g)
    ]
    ratios = pmap(_ratio_item, items, workers)
    worst = {p: 0.0 for p in (1, 2, 3, 4)}
    ok = True
    for (part, _, _), r in zip(items, ratios):
        worst[part] = max(worst[part], r)
        if part == 1:
            ok &= abs(r - 2.0) <= tol
        ok &= r <= supnorm.RATIO_CAPS[part] + tol
    return CriterionResult(6, "ratio bounds on the four regions", ok,
                           f"part 1 = 2 +- {tol:g}; caps 2, 4, 2, 2 + {tol:g}",
                           "sup norms from the reduced grid search",
                           {"max_ratio": {str(k): v for k, v in worst.items()},
                            "cases": len(items)})


def _cpt_item(args):
    f, h, grid, tol = args
    return supnorm.cpt_ratio_check(f, h, 5, grid, tol)


def c7_cpt(seed=0, grid: GridConfig = GridConfig(), tol=1e-8, workers=1, **_):
    pairs = supnorm.random_surrogate_pairs(seed, 100, 5)
    reports = pmap(_cpt_item, [(f, h, grid, tol) for f, h in pairs], workers)
    ok = all(r.precondition_met and r.passed for r in reports)
    failing = [r.to_dict() for r in reports if not (r.precondition_met and r.passed)]
    return CriterionResult(7, "ratio inequality for h^m f, m = 0..5", ok, f"{tol:g}",
                           "sup norms of h^m f; |h| at each maximiser",
                           {"pairs": len(reports), "seed": seed, "failing": failing[:5]})


def c8_hwv(lambda_cap=4, **_):
    ok = True
    checked = 0
    for n in (2, 3):
        for l1 in range(lambda_cap + 1):
            for l2 in range(l1 + 1):
                fam = [hwv.hwv_candidate(l1, l2, j, n) for j in range(l1 - l2 + 1)]
                ok &= all(hwv.verify_highest_weight(p, l1, l2, n).passed for p in fam)
                ok &= hwv.linear_independence(fam) == (True, l1 - l2 + 1)
                checked += len(fam)
    return CriterionResult(8, "highest weight vectors b(l1, l2, j)", ok, "exact",
                           "anchored generator action; fraction-free rank",
                           {"vectors": checked, "lambda_cap": lambda_cap})


def _growth_item(args):
    seed, gamma_cap = args
    d = paths.random_bounded_step_assignment(seed, gamma_cap + 2)
    c = paths.verify_step_bounds(d, gamma_cap).c
    d0 = abs(d(weights.GammaIndex(0, 0, 0)))
    return min(d0 + c * g.g1 - abs(d(g)) for g in paths.gammas_up_to(gamma_cap))


def c9_paths(seed=0, gamma_cap=30, assignments=50, workers=1, **_):
    ok = all(paths.build_path(g).is_valid() for g in paths.gammas_up_to(gamma_cap))
    items = [(seed * 1000 + k, gamma_cap) for k in range(assignments)]
    slacks = pmap(_growth_item, items, workers)
    worst_slack = min(slacks)
    ok = ok and worst_slack >= -1e-9
    return CriterionResult(9, "paths of length <= g1 and linear growth", ok,
                           "exact path checks; growth bound to 1e-9",
                           "step suprema of each assignment",
                           {"gamma_cap": gamma_cap, "assignments": assignments,
                            "min_slack": worst_slack})


def c10_zeta(rank=2, K=1000, threshold=1.5, **_):
    n = rank
    p = 4 * n - 2
    s_conv = 4 * n
    tail = spectrum.zeta_tail(n, s_conv, K)
    bound, const = spectrum.tail_bound(n, s_conv, K, p)
    lo = spectrum.zeta_partial_sum(n, p, K)
    hi = spectrum.zeta_partial_sum(n, p, 2 * K)
    ok = tail <= bound and hi > threshold * lo
    return CriterionResult(10, f"zeta tail bound and divergence evidence (n = {n})", ok,
                           f"tail <= bound; sum(2K) > {threshold:g} sum(K)",
                           "integral comparison with exact M(k)",
                           {"tail": tail, "bound": bound, "bound_constant": const,
                            "sum_K": lo, "sum_2K": hi, "ratio": hi / lo, "K": K})


CRITERIA = {
    1: c1_spectral_dimension,
    2: c2_weyl_dimensions,
    3: c3_branching,
    4: c4_bounded_leap,
    5: c5_maximizer,
    6: c6_ratio_bounds,
    7: c7_cpt,
    8: c8_hwv,
    9: c9_paths,
    10: c10_zeta,
}


def run_criterion(number: int, **kwargs) -> CriterionResult:
    t0 = time.perf_counter()
    res = CRITERIA[number](**kwargs)
    res.seconds = time.perf_counter() - t0
    return res


def run_all(**kwargs) -> list[CriterionResult]:
    return [run_criterion(i, **kwargs) for i in sorted(CRITERIA)]
