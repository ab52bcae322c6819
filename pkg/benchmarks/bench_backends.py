#!/usr/bin/env python3
"""Time the compiled kernel extension against the pure-Python fallback.

Runs each backend over the hot paths (per-distance power kernels, batch
sweeps, and bisection range solves) and prints a timing table.  Usage:

    python benchmarks/bench_backends.py [N]

N is the sweep size / scalar call count (default 200000).
"""

import math
import sys
import time

from iout_wakeup import _kernels_py

try:
    from iout_wakeup import _kernels
except ImportError:
    _kernels = None

ALPHA_8K = _kernels_py.thorp_absorption_db_per_km(8.0)
OFFSET = -90.0 - 10.0 * math.log10(1000.0 * 1500.0)
EXT_DB = (10.0 / math.log(10.0)) * 0.151
CAPTURE_DB = 10.0 * math.log10(0.0011 / (math.pi * math.tan(math.radians(0.25)) ** 2))
MI_CONST = 20.0 - 1.873464765383119 + 10.0 * math.log10(30 * 30 * 0.5**6)


def scalar_loop(mod, n):
    ac, op, mr = mod.acoustic_rx_dbm, mod.optical_rx_dbm, mod.mi_rx_dbm
    t0 = time.perf_counter()
    acc = 0.0
    for i in range(n):
        d = 1.0 + (i % 400)
        acc += ac(190.0, 20.0, ALPHA_8K, OFFSET, d)
        acc += op(23.979400086720375, EXT_DB, CAPTURE_DB, d)
        acc += mr(MI_CONST, d)
    return time.perf_counter() - t0, acc


def batch_sweep(mod, n):
    t0 = time.perf_counter()
    mod.acoustic_sweep(190.0, 20.0, ALPHA_8K, OFFSET, 1.0, 0.002, n)
    mod.optical_sweep(23.979400086720375, EXT_DB, CAPTURE_DB, 0.1, 0.001, n)
    mod.mi_sweep(MI_CONST, 0.5, 0.001, n)
    return time.perf_counter() - t0


def range_solves(mod, count):
    def solve(fn, sens, lo, hi):
        while hi - lo > 1e-4:
            mid = 0.5 * (lo + hi)
            if fn(mid) >= sens:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    ac = mod.acoustic_rx_dbm
    t0 = time.perf_counter()
    for i in range(count):
        sens = -10.0 - (i % 20)
        solve(lambda d: ac(190.0, 20.0, ALPHA_8K, OFFSET, d), sens, 1.0, 10000.0)
    return time.perf_counter() - t0


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 200_000
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("compiled", _kernels))
    else:
        print("compiled extension not built; timing the fallback only\n")

    results = {}
    for name, mod in backends:
        st, acc = scalar_loop(mod, n)
        bt = batch_sweep(mod, n)
        rt = range_solves(mod, 2000)
        results[name] = (st, bt, rt)
        print(f"[{name}] checksum {acc:.6f}")

    print(f"\n{'case':<22}" + "".join(f"{name + ' (s)':>14}" for name, _ in backends)
          + ("{:>10}".format("speedup") if len(backends) == 2 else ""))
    for idx, case in enumerate((f"scalar x3 (n={n})", f"batch sweep x3 (n={n})",
                                "range solves (2000)")):
        row = f"{case:<22}"
        for name, _ in backends:
            row += f"{results[name][idx]:>14.4f}"
        if len(backends) == 2:
            row += f"{results['python'][idx] / results['compiled'][idx]:>10.2f}"
        print(row)


if __name__ == "__main__":
    main()
