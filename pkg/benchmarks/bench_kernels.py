#!/usr/bin/env python3
"""Benchmark the compiled series kernels against the pure-Python fallback.

Times the two hot kernels directly from both backend modules, then an
end-to-end derivative sweep through whichever backend the package selected.

    python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time
from array import array

import besselnu
from besselnu import _kernels_py
from besselnu.order_derivative import SeriesConfig, dnu_bessel_j

try:
    from besselnu import _kernels_cy
except ImportError:
    _kernels_cy = None

# Representative workload: k = 3 weights at nu = 3.3, z = 5 (x = 6.25).
_Q_ARGS = (6.25, 1.3, 3, array("d", (0.9, -0.4, 0.2, 1.1)), 0.0, 1e-13, 300)
_H_ARGS = (6.25, 3, array("d", (0.9, -0.4, 0.2, 1.1)), 0.0, 1e-13, 300)


def _time_kernel(fn, args, calls):
    t0 = time.perf_counter()
    for _ in range(calls):
        fn(*args)
    return (time.perf_counter() - t0) / calls


def _time_sweep(repeats):
    cfg = SeriesConfig()
    nus = [i * 0.37 - 3.2 for i in range(18)]
    zs = (0.5, 1.0, 2.0, 5.0)
    t0 = time.perf_counter()
    for _ in range(repeats):
        for nu in nus:
            for z in zs:
                for k in (1, 2, 3):
                    dnu_bessel_j(nu, z, k, cfg)
    elapsed = time.perf_counter() - t0
    return elapsed / (repeats * len(nus) * len(zs) * 3)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--calls", type=int, default=20000, help="kernel calls per timing")
    args = parser.parse_args()

    print(f"active backend: {besselnu.KERNEL_BACKEND}")
    rows = []
    for name, fn_py, fn_cy in (
        ("q_weighted_series", _kernels_py.q_weighted_series,
         _kernels_cy.q_weighted_series if _kernels_cy else None),
        ("harmonic_weighted_series", _kernels_py.harmonic_weighted_series,
         _kernels_cy.harmonic_weighted_series if _kernels_cy else None),
    ):
        kargs = _Q_ARGS if name.startswith("q_") else _H_ARGS
        t_py = min(_time_kernel(fn_py, kargs, args.calls) for _ in range(args.repeats))
        if fn_cy is not None:
            t_cy = min(_time_kernel(fn_cy, kargs, args.calls) for _ in range(args.repeats))
            rows.append((name, t_py * 1e6, t_cy * 1e6, t_py / t_cy))
        else:
            rows.append((name, t_py * 1e6, None, None))

    print(f"{'kernel':<26} {'python us':>10} {'cython us':>10} {'speedup':>8}")
    for name, t_py, t_cy, speed in rows:
        if t_cy is None:
            print(f"{name:<26} {t_py:>10.2f} {'n/a':>10} {'n/a':>8}")
        else:
            print(f"{name:<26} {t_py:>10.2f} {t_cy:>10.2f} {speed:>7.1f}x")

    per_eval = _time_sweep(args.repeats)
    print(f"end-to-end dnu_bessel_j ({besselnu.KERNEL_BACKEND} backend): "
          f"{per_eval * 1e6:.1f} us/eval")


if __name__ == "__main__":
    main()
