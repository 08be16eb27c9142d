"""``quatsphere`` command line: run a verification suite and write a report.

Reports are JSON with sorted keys, so the same flags and seed always give
byte-identical output.  Integers wider than 53 bits and exact fractions are
written as decimal strings.  Exit status is 0 when every check passes, 1 when
any check fails and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__, acceptance, hwv, paths, spectrum, supnorm
from .errors import DomainError, InsufficientSamplesError
from .kernels import BACKEND
from .supnorm import GridConfig

COMMANDS = ("dim", "spectrum", "zeta", "supnorm", "hwv", "path", "verify-all")
SAFE_INT = 2**53

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def to_jsonable(obj):
    """Recursively convert report values into JSON-safe, exact values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else str(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(report: dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2, allow_nan=False) + "\n"


def _suite(name, passed, tolerance, oracle, observed):
    return {"name": name, "passed": bool(passed), "tolerance": tolerance,
            "oracle": oracle, "observed": observed}


def _criterion_suite(res: acceptance.CriterionResult, timings: bool) -> dict:
    d = res.to_dict(timings)
    d["name"] = f"criterion {res.number}: {res.name}"
    return d


def _grid(cfg) -> GridConfig:
    return GridConfig(resolution=cfg.grid, refine=cfg.refine)


def _kwargs(cfg) -> dict:
    return {"grid": _grid(cfg), "seed": cfg.seed, "workers": cfg.parallel,
            "lambda_cap": cfg.lambda_cap, "gamma_cap": cfg.gamma_cap, "rank": cfg.rank,
            "K": _doubling_cutoff(cfg.zeta_k)}


def _doubling_cutoff(cutoffs) -> int:
    """Largest K with 2K also listed; falls back to the largest cutoff."""
    paired = [K for K in cutoffs if 2 * K in cutoffs]
    return max(paired) if paired else max(cutoffs)


def _run_criteria(numbers, cfg) -> list[dict]:
    kw = _kwargs(cfg)
    out = []
    for i in numbers:
        res = acceptance.run_criterion(i, **kw)
        print(res.line(), file=sys.stderr)
        out.append(_criterion_suite(res, cfg.timings))
    return out


def cmd_dim(cfg):
    rep = spectrum.spectral_dimension(cfg.rank, cfg.k_max, cfg.zeta_k)
    return [_suite("spectral dimension", rep.passed,
                   "exact degree; block growth and tail bound",
                   "exact forward differences of M(0..kMax)", rep.to_dict())]


def cmd_spectrum(cfg):
    table = spectrum.multiplicity_table(cfg.rank, cfg.k_max)
    rows = [{"k": k, "multiplicity": m} for k, m in enumerate(table)]
    check_to = min(cfg.k_max, 12)
    brute = [spectrum.level_multiplicity_bruteforce(cfg.rank, k) for k in range(check_to + 1)]
    ok = table[0] == 1 and all(m >= 1 for m in table) and list(table[: check_to + 1]) == brute
    observed = {"rank": cfg.rank, "kmax": cfg.k_max, "rows": rows}
    if cfg.k_max >= 4 * cfg.rank + 2:
        observed["polynomial_degree"] = spectrum.multiplicity_polynomial_degree(cfg.rank, cfg.k_max)
    return [_suite("level multiplicities", ok, "exact",
                   f"sum of Weyl dimensions over each level, k <= {check_to}", observed)]


def cmd_zeta(cfg):
    n = cfg.rank
    rows = []
    for s in (4 * n - 2, 4 * n - 1, 4 * n):
        for K in cfg.zeta_k:
            rows.append({"exponent": s, "K": K, "partial_sum": spectrum.zeta_partial_sum(n, s, K)})
    monotone = all(
        a["partial_sum"] <= b["partial_sum"]
        for a, b in zip(rows, rows[1:]) if a["exponent"] == b["exponent"]
    )
    table = _suite("zeta partial sums", monotone, "nondecreasing in K",
                   "compensated summation of exact M(k)", {"rank": n, "rows": rows})
    return [table] + _run_criteria([10], cfg)


def cmd_supnorm(cfg):
    grid = _grid(cfg)
    examples = []
    for label, target in (("w", supnorm.gamma_surrogate((1, 0, 0))),
                          ("xw+yz", supnorm.gamma_surrogate((1, 1, 0))),
                          ("f_(1,1)", supnorm.fmn_surrogate(1, 1))):
        r = supnorm.sup_norm(target, grid)
        examples.append({"target": label, "value": r.value,
                         "argmax": list(r.argmax.as_tuple()), "octant_value": r.sphere_value})
    head = _suite("supremum examples", True, f"octant sweep <= reduced search (1 + {grid.crosscheck_tol:g})",
                  "full-octant angle grid", {"examples": examples,
                                             "grid": grid.resolution, "refine": grid.refine})
    return [head] + _run_criteria([5, 6, 7], cfg)


def cmd_hwv(cfg):
    n = cfg.rank
    families = []
    ok = True
    for l1 in range(cfg.lambda_cap + 1):
        for l2 in range(l1 + 1):
            fam = [hwv.hwv_candidate(l1, l2, j, n) for j in range(l1 - l2 + 1)]
            reports = [hwv.verify_highest_weight(p, l1, l2, n, j) for j, p in enumerate(fam)]
            indep, rank = hwv.linear_independence(fam)
            good = all(r.passed for r in reports) and indep and rank == l1 - l2 + 1
            ok &= good
            families.append({"lambda": [l1, l2], "rank": rank, "expected_rank": l1 - l2 + 1,
                             "passed": good, "vectors": [r.to_dict() for r in reports]})
    own = _suite(f"highest weight vectors (n = {n})", ok, "exact",
                 "anchored generator action; fraction-free rank", {"families": families})
    return [own] + _run_criteria([8], cfg)


def cmd_path(cfg):
    items = []
    ok = True
    for g in paths.gammas_up_to(cfg.gamma_cap):
        rep = paths.build_path(g)
        valid = rep.is_valid()
        ok &= valid
        items.append({"target": list(g.as_tuple()), "length": rep.length,
                      "stages": rep.stage_lengths(), "valid": valid})
    eq = paths.verify_step_bounds(spectrum.DiracAssignment.equivariant(), cfg.gamma_cap)
    own = _suite("paths", ok, "exact; length <= g1", "move regions and endpoints",
                 {"gamma_cap": cfg.gamma_cap, "paths": items, "equivariant_steps": eq.to_dict()})
    return [own] + _run_criteria([9], cfg)


def cmd_verify_all(cfg):
    return _run_criteria(sorted(acceptance.CRITERIA), cfg)


HANDLERS = {
    "dim": cmd_dim, "spectrum": cmd_spectrum, "zeta": cmd_zeta, "supnorm": cmd_supnorm,
    "hwv": cmd_hwv, "path": cmd_path, "verify-all": cmd_verify_all,
}


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="quatsphere", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--rank", type=int, default=2, help="n >= 2 (default 2)")
    p.add_argument("--k-max", type=int, default=None, help="largest level (default 4n+8)")
    p.add_argument("--zeta-k", type=_positive, nargs="+", default=[500, 1000, 2000],
                   help="zeta cutoffs (default 500 1000 2000)")
    p.add_argument("--grid", type=int, default=200, help="grid points per axis (default 200)")
    p.add_argument("--refine", type=int, default=3, help="zoom rounds (default 3)")
    p.add_argument("--lambda-cap", type=_positive, default=4)
    p.add_argument("--gamma-cap", type=_positive, default=30)
    p.add_argument("--seed", type=int, default=None, help="default 0, or $QUATSPHERE_SEED")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="report path (default stdout, or $QUATSPHERE_OUT)")
    p.add_argument("--parallel", type=_positive, default=1, help="worker processes")
    p.add_argument("--timings", action="store_true", help="add wall-clock seconds to the report")
    return p


def resolve_config(args) -> argparse.Namespace:
    if args.rank < 2:
        raise UsageError(f"--rank must be at least 2, got {args.rank}")
    if args.k_max is None:
        args.k_max = 4 * args.rank + 8
    if args.k_max < 0:
        raise UsageError("--k-max must be nonnegative")
    if args.grid < 3:
        raise UsageError("--grid must be at least 3")
    if args.refine < 0:
        raise UsageError("--refine must be nonnegative")
    if args.format == "csv" and args.command != "spectrum":
        raise UsageError("csv output is only available for the spectrum command")
    if args.seed is None:
        env = os.environ.get("QUATSPHERE_SEED")
        try:
            args.seed = int(env) if env not in (None, "") else 0
        except ValueError:
            raise UsageError(f"QUATSPHERE_SEED must be an integer, got {env!r}")
    if args.out is None:
        args.out = os.environ.get("QUATSPHERE_OUT") or None
    args.zeta_k = sorted(set(args.zeta_k))
    return args


def config_echo(cfg) -> dict:
    return {"rank": cfg.rank, "k_max": cfg.k_max, "zeta_k": cfg.zeta_k, "grid": cfg.grid,
            "refine": cfg.refine, "lambda_cap": cfg.lambda_cap, "gamma_cap": cfg.gamma_cap,
            "seed": cfg.seed, "format": cfg.format, "parallel": cfg.parallel}


def build_report(cfg) -> dict:
    suites = HANDLERS[cfg.command](cfg)
    report = {
        "artifact": "quatsphere",
        "version": __version__,
        "command": cfg.command,
        "config": config_echo(cfg),
        "suites": suites,
        "failures": [s["name"] for s in suites if not s["passed"]],
        "passed": all(s["passed"] for s in suites),
    }
    if cfg.timings:
        report["backend"] = BACKEND
    return report


def spectrum_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "multiplicity"])
    for row in report["suites"][0]["observed"]["rows"]:
        w.writerow([row["k"], row["multiplicity"]])
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = resolve_config(args)
        report = build_report(cfg)
    except (UsageError, DomainError, InsufficientSamplesError) as exc:
        print(f"quatsphere: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = spectrum_csv(report) if cfg.format == "csv" else dumps(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for name in report["failures"]:
        print(f"FAILED: {name}", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
