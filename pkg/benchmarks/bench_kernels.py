"""Compare the compiled and NumPy grid kernels.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

from quatsphere import kernels

CASES = [
    ("reduced 200x200, (2,3,1)", "reduced_grid_max", (2, 3, 1, 0.0, 1.5707963, 0.0, 1.5707963, 200)),
    ("reduced 400x400, (5,5,10)", "reduced_grid_max", (5, 5, 10, 0.0, 1.5707963, 0.0, 1.5707963, 400)),
    ("octant 40^3, (2,3,1)", "sphere_grid_max", (2, 3, 1, 0, 40)),
    ("octant 60^3, (4,1,3)", "sphere_grid_max", (4, 1, 3, 1, 60)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["python"]
    try:
        kernels.backend_module("cython")
        backends.insert(0, "cython")
    except ImportError:
        print("compiled kernels not built; timing the NumPy backend only")
    print(f"{'case':30s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, fn, argv in CASES:
        times = []
        for b in backends:
            f = getattr(kernels.backend_module(b), fn)
            best = min(timeit.repeat(lambda: f(*argv), number=1, repeat=args.repeat))
            times.append(best)
        row = f"{label:30s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
