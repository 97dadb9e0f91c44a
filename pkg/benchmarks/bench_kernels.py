"""Compare the numpy and numba kernel implementations head to head.

Each registered kernel is timed on identically drawn inputs (best-of-N
single calls after a compilation warm-up) and checked for agreement, then
an end-to-end zeta evaluation is timed under each backend in a fresh
subprocess, since HURZETA_BACKEND is read once at import.

The default --size 64 matches a quadrature panel, where the jitted loops
win on call overhead (roughly 1.1-4.7x here); per-element throughput
favors the vectorized numpy path once sizes reach a few thousand, so
sweep --size before drawing conclusions on other workloads.

Usage: python benchmarks/bench_kernels.py [--size 64] [--repeats 50]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from hurzeta import kernels
from hurzeta.backend import active_backend


def draw_args(name, rng, size):
    u = rng.uniform(0.02, 0.98, size=size)
    if name == "cot_pi":
        return (u,)
    if name == "poly_exp_gap":
        coeffs = rng.normal(size=6) + 1j * rng.normal(size=6)
        b = complex(1.3, 0.4)
        return (u, coeffs, -2j * np.pi * b, complex(0.7, -0.1))
    if name == "sin_ratio_gap":
        a1, a2 = complex(1.5, 0.2), complex(0.9, -0.3)
        return (u, a1, 1.0 / np.sin(a1), a2, 1.0 / np.sin(a2))
    if name == "sinh_ratio_gap":
        a1, a2 = 1.5, 0.9
        return (u, a1, 1.0 / np.sinh(a1), a2, 1.0 / np.sinh(a2))
    if name == "sin_ratio_ucos_gap":
        a = complex(1.5, 0.2)
        return (u, a, 1.0 / np.sin(a), 7.0)
    if name == "pow_sin_cot":
        return (u, 3.0, 100)
    if name == "one_minus_cos_cot":
        return (u, 100)
    if name == "decay_one_minus_cos_cot":
        return (u, 2.0, 100)
    if name == "inv_power_sum":
        return (complex(1.3, 0.4), 4, 0, size)
    if name == "rot_inv_power_sum":
        return (1.3, 4, 0, size)
    raise SystemExit(f"unhandled kernel {name}")


def best_of(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(size, repeats):
    numpy_impl = kernels.IMPLEMENTATIONS["numpy"]
    numba_impl = kernels.IMPLEMENTATIONS["numba"]
    rng = np.random.default_rng(42)
    rows = []
    for name in sorted(numpy_impl):
        args = draw_args(name, rng, size)
        f_np = numpy_impl[name]
        ref = f_np(*args)
        t_np = best_of(f_np, args, repeats)
        if numba_impl is None:
            rows.append((name, t_np, None, None, None))
            continue
        f_nb = numba_impl[name]
        got = f_nb(*args)  # also triggers compilation before timing
        diff = float(np.max(np.abs(np.atleast_1d(got - ref))))
        t_nb = best_of(f_nb, args, repeats)
        rows.append((name, t_np, t_nb, t_np / t_nb, diff))
    return rows


END_TO_END = r"""
import time
from hurzeta.hurwitz import zeta_auto
zeta_auto(5, 1.3 + 0.4j)  # warm-up: jit compile + caches
t0 = time.perf_counter()
for _ in range(20):
    zeta_auto(5, 1.3 + 0.4j)
print((time.perf_counter() - t0) / 20)
"""


def bench_end_to_end():
    out = {}
    for backend in ("numpy", "numba"):
        env = dict(os.environ, HURZETA_BACKEND=backend)
        try:
            p = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                               capture_output=True, text=True, timeout=300,
                               check=True)
            out[backend] = float(p.stdout.strip())
        except (subprocess.CalledProcessError, ValueError):
            out[backend] = None
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=64,
                    help="abscissa count / series length per call")
    ap.add_argument("--repeats", type=int, default=50,
                    help="timing repeats; the best single call is reported")
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    print(f"active backend: {active_backend()}   "
          f"size={args.size}  repeats={args.repeats}\n")
    header = f"{'kernel':<26} {'numpy (us)':>11} {'numba (us)':>11} " \
             f"{'speedup':>8} {'max |diff|':>11}"
    print(header)
    print("-" * len(header))
    for name, t_np, t_nb, speedup, diff in bench_kernels(args.size, args.repeats):
        if t_nb is None:
            print(f"{name:<26} {t_np * 1e6:>11.1f} {'n/a':>11} {'':>8} {'':>11}")
        else:
            print(f"{name:<26} {t_np * 1e6:>11.1f} {t_nb * 1e6:>11.1f} "
                  f"{speedup:>7.1f}x {diff:>11.2e}")

    if not args.skip_end_to_end:
        print("\nend-to-end zeta_auto(5, 1.3+0.4i), mean of 20 calls:")
        for backend, dt in bench_end_to_end().items():
            label = f"{dt * 1e3:.2f} ms" if dt is not None else "unavailable"
            print(f"  HURZETA_BACKEND={backend:<6} {label}")


if __name__ == "__main__":
    main()
