"""Compare the compiled core with the numpy fallback.

    python3 benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from dirichlet_approx._backend import load_backend


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(rng):
    for deg, m in ((20, 16384), (200, 4096), (1000, 512)):
        c = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        z = np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))
        yield f"local_norms deg={deg} points={m}", "local_norms", (c, z)
        yield f"horner      deg={deg} points={m}", "horner", (c, z)
    c = rng.standard_normal(100001) + 1j * rng.standard_normal(100001)
    yield "h2_norm_sq  len=100001", "h2_norm_sq", (c,)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    py = load_backend("python")
    try:
        cy = load_backend("cython")
    except ImportError:
        cy = None
        print("compiled core not built; timing the fallback only")
    rng = np.random.default_rng(0)
    print(f"{'kernel':36s} {'python [ms]':>12s} {'cython [ms]':>12s} {'speedup':>8s} {'max rel diff':>13s}")
    for label, name, data in cases(rng):
        tp = best_time(lambda: getattr(py, name)(*data), args.repeat)
        if cy is None:
            print(f"{label:36s} {tp * 1e3:12.3f}")
            continue
        tc = best_time(lambda: getattr(cy, name)(*data), args.repeat)
        a = np.asarray(getattr(py, name)(*data))
        b = np.asarray(getattr(cy, name)(*data))
        diff = float(np.max(np.abs(a - b) / np.maximum(np.abs(b), 1e-300)))
        print(f"{label:36s} {tp * 1e3:12.3f} {tc * 1e3:12.3f} {tp / tc:8.1f} {diff:13.2g}")


if __name__ == "__main__":
    main()
