"""Compiled kernels versus the pure-Python twin.

    python benchmarks/bench_kernels.py [--repeat N]

Times the special functions and the QR factorization directly, then a
full ``replicate`` run under each backend in a subprocess (the backend is
chosen at import through ARDLBOUNDS_PURE_PYTHON).
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from ardlbounds import _kernels_py

try:
    from ardlbounds import _kernels as _kernels_cy
except ImportError:
    _kernels_cy = None


def cases(rng):
    X = rng.normal(size=(37, 18))
    y = rng.normal(size=37)
    args_b = [(float(a), float(b), float(x)) for a, b, x in
              zip(rng.uniform(0.5, 20, 200), rng.uniform(0.5, 20, 200), rng.uniform(0, 1, 200))]
    args_g = [(float(a), float(x)) for a, x in zip(rng.uniform(0.5, 10, 200), rng.uniform(0, 30, 200))]
    return {
        "betainc x200": lambda m: [m.betainc(*a) for a in args_b],
        "gammainc x200": lambda m: [m.gammainc(*a) for a in args_g],
        "householder_qr 37x18": lambda m: m.householder_qr(X, y),
    }


def replicate_seconds(pure: bool, repeat: int) -> float:
    env = dict(os.environ, ARDLBOUNDS_PURE_PYTHON="1" if pure else "0")
    code = ("import time; from ardlbounds.config import load_config; "
            "from ardlbounds.report import replicate; cfg = load_config(); replicate(cfg); "
            f"t = time.perf_counter(); [replicate(cfg) for _ in range({repeat})]; "
            f"print((time.perf_counter() - t) / {repeat})")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    return float(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    if _kernels_cy is None:
        sys.exit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    print(f"{'kernel':<24}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, fn in cases(np.random.default_rng(0)).items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=args.repeat, repeat=3))
        t_cy = min(timeit.repeat(lambda: fn(_kernels_cy), number=args.repeat, repeat=3))
        t_py, t_cy = 1e3 * t_py / args.repeat, 1e3 * t_cy / args.repeat
        print(f"{name:<24}{t_py:>12.3f}{t_cy:>12.3f}{t_py / t_cy:>9.1f}x")

    reps = max(1, args.repeat // 10)
    py, cy = replicate_seconds(True, reps), replicate_seconds(False, reps)
    print(f"{'replicate (end to end)':<24}{1e3 * py:>12.1f}{1e3 * cy:>12.1f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
