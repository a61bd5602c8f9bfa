"""Compare the compiled and pure-numpy elimination kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Part 1 times ``echelon_modp`` on random square matrices. Part 2 runs the
200-object decomposition corpus end to end under each backend (the backend is
chosen at import, so each run is a separate process).
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from cotstruct import _pure

try:
    from cotstruct import _core
except ImportError:
    _core = None

END_TO_END = """
import time
from pathlib import Path
from cotstruct import _kernels
from cotstruct.complexes import Complex
from cotstruct.cotstructure import decompose
from cotstruct.formats import load_complex
objs = [load_complex(f) for f in sorted(Path('corpus/trivial').glob('*.toml'))]
a2 = [load_complex(f) for f in sorted(Path('corpus/a2').glob('*.toml'))]
t = time.perf_counter()
S = Complex.stalk(objs[0].algebra, ['1'], 0)
for X in objs:
    decompose(X, [S], check=False)
P = Complex.stalk(a2[0].algebra, ['1', '2'], 0)
for X in a2:
    decompose(X, [P], check=False)
print(_kernels.BACKEND, time.perf_counter() - t)
"""


def time_kernel(fn, a, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        b = a.copy()
        t = time.perf_counter()
        fn(b, p, True)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--p", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'size':>6} {'pure (ms)':>11} {'compiled (ms)':>14} {'speedup':>8}")
    for n in (8, 16, 32, 64, 128, 256):
        a = rng.integers(0, args.p, size=(n, n)).astype(np.int64)
        tp = time_kernel(_pure.echelon_modp, a, args.p, args.repeat)
        if _core is None:
            print(f"{n:>6} {tp * 1e3:>11.3f} {'n/a':>14}")
            continue
        tc = time_kernel(_core.echelon_modp, a, args.p, args.repeat)
        print(f"{n:>6} {tp * 1e3:>11.3f} {tc * 1e3:>14.3f} {tp / tc:>8.1f}x")

    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    print("\nend-to-end: decompose 200 trivial-quiver + 50 A2 corpus objects")
    for pure in ("1", "0"):
        env = {**os.environ, "COTSTRUCT_PURE": pure}
        out = subprocess.run([sys.executable, "-c", END_TO_END], cwd=root, env=env,
                             capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"  {backend:>8}: {float(secs):.2f}s")


if __name__ == "__main__":
    main()
