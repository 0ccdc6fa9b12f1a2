"""Compare the compiled and numpy batch kernels.

    python3 benchmarks/bench_kernels.py [--size 20000] [--power 64] [--repeat 5]
"""

import argparse
import timeit

import numpy as np

from lorentz_optics import _kernels_py, kernels


def bench(fn, repeat):
    times = timeit.repeat(fn, number=1, repeat=repeat)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=20000)
    ap.add_argument("--power", type=int, default=64)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    xs = rng.uniform(0.0, 2.0, args.size)
    p1 = rng.uniform(-np.pi, np.pi, args.size)
    p2 = rng.uniform(-np.pi, np.pi, args.size)
    mats = rng.normal(size=(args.size, 2, 2)) + 1j * rng.normal(size=(args.size, 2, 2))
    mats /= np.sqrt(np.linalg.det(mats))[:, None, None]

    cases = {
        "core_power": lambda m: m.core_power(xs, args.power),
        "layer_power": lambda m: m.layer_power(0.4, p1, p2, args.power),
        "matpow": lambda m: m.matpow(mats, args.power),
    }
    compiled = kernels.compiled
    print(f"backend={kernels.BACKEND} size={args.size} power={args.power}")
    print(f"{'kernel':<12} {'numpy [ms]':>12} {'compiled [ms]':>14} {'speedup':>8} {'max diff':>10}")
    for name, run in cases.items():
        t_py = bench(lambda: run(_kernels_py), args.repeat)
        if compiled is None:
            print(f"{name:<12} {1e3 * t_py:12.2f} {'n/a':>14}")
            continue
        t_c = bench(lambda: run(compiled), args.repeat)
        a, b = run(_kernels_py), run(compiled)
        diff = np.max(np.abs(a - b) / np.maximum(1.0, np.abs(a)))
        print(f"{name:<12} {1e3 * t_py:12.2f} {1e3 * t_c:14.2f} {t_py / t_c:8.1f} {diff:10.2e}")


if __name__ == "__main__":
    main()
