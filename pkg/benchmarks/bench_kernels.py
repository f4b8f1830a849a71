"""Benchmark: compiled quadrature kernels against the pure-Python fallback.

Times each panel kernel on a representative workload and reports the
speedup, then times one full oracle integral per family with each
backend.  Run as a script:

    python benchmarks/bench_kernels.py [repeats]
"""

import math
import os
import sys
import time
from fractions import Fraction

import numpy as np

from sincasym.kernels import pykernels

try:
    from sincasym.kernels import _ckernels
except ImportError:
    _ckernels = None

PI = math.pi


def _nodes(order=32):
    xs, ws = np.polynomial.legendre.leggauss(order)
    return tuple(map(float, xs)), tuple(map(float, ws))


def bench_panels(repeats=2000):
    xs, ws = _nodes()
    cases = [
        ("panel_sinc_pow", (100.0, 0.0, PI, xs, ws, False)),
        ("panel_kn", (100.0, 1.0, 0.0, PI, xs, ws)),
        ("panel_khat", (100.0, 1.0, 1.0, PI, xs, ws)),
        ("panel_ball", (4.0 / 3.0, 0.0, 100.0, 8.0 / 3.0, 0.0, 4.0, xs, ws)),
        ("panel_ball_pow", (4.0 / 3.0, 0.0, 100.0, 2, 3, 0.0, 1.6, xs, ws)),
    ]
    print(f"{'kernel':<16} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, args in cases:
        pf = getattr(pykernels, name)
        t0 = time.perf_counter()
        for _ in range(repeats):
            ref = pf(*args)
        tp = time.perf_counter() - t0
        if _ckernels is None:
            print(f"{name:<16} {tp:>9.3f}s {'n/a':>10}")
            continue
        cf = getattr(_ckernels, name)
        t0 = time.perf_counter()
        for _ in range(repeats):
            val = cf(*args)
        tc = time.perf_counter() - t0
        flag = "" if val == ref else "  (MISMATCH)"
        print(f"{name:<16} {tp:>9.3f}s {tc:>9.3f}s {tp / tc:>7.1f}x{flag}")


def bench_oracle():
    # the backend is chosen at import time, so run each side in a child
    import subprocess

    code = (
        "import time, sincasym\n"
        "from fractions import Fraction\n"
        "from sincasym import oracle\n"
        "t0 = time.perf_counter()\n"
        "oracle.integrate_In(100, 1e-13)\n"
        "oracle.integrate_Kn(1000, 1.0, 1e-10)\n"
        "oracle.integrate_Khat(1000, 1.0, 1e-10)\n"
        "oracle.integrate_ball(Fraction(4, 3), Fraction(8, 3), 100, 1e-13)\n"
        "print(f'{sincasym.BACKEND}: {time.perf_counter() - t0:.3f}s')\n"
    )
    sys.stdout.flush()
    for env_val in ("", "1"):
        env = dict(os.environ, SINCASYM_PURE_PYTHON=env_val)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


if __name__ == "__main__":
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    bench_panels(repeats)
    print()
    print("one oracle integral per family:")
    bench_oracle()
