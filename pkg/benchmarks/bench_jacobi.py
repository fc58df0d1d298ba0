"""Compiled vs. numpy Jacobi kernel: wall time and agreement.

    python3 benchmarks/bench_jacobi.py [--sizes 8 16 32 64 100] [--repeat 3]

Sizes are complex dimensions (a quaternion n x n matrix has a 2n x 2n
adjoint).  Also times a full dual quaternion ``eig_hermitian`` per backend.
"""

import argparse
import importlib
import os
import time

import numpy as np

from dqspectra import _jacobi_py

try:
    from dqspectra import _jacobi
except ImportError:
    _jacobi = None


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def eig_time(backend, n, repeat):
    """Time ``eig_hermitian`` on an n x n dual quaternion matrix under one backend."""
    if backend == "python":
        os.environ["DQSPECTRA_PURE_PYTHON"] = "1"
    else:
        os.environ.pop("DQSPECTRA_PURE_PYTHON", None)
    qk = importlib.reload(importlib.import_module("dqspectra.quat_kernel"))
    spectral = importlib.reload(importlib.import_module("dqspectra.spectral"))
    from dqspectra.generate import random_hermitian
    A = random_hermitian(np.random.default_rng(n), n)
    t, _ = best_time(lambda: spectral.eig_hermitian(A), repeat)
    os.environ.pop("DQSPECTRA_PURE_PYTHON", None)
    return qk.BACKEND, t


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64, 100])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--eig-sizes", type=int, nargs="+", default=[8, 25, 50])
    args = ap.parse_args()

    if _jacobi is None:
        print("compiled kernel not built; only the numpy fallback is timed")
    rng = np.random.default_rng(0)
    print(f"{'n':>5} {'compiled [s]':>13} {'numpy [s]':>11} {'speedup':>8} {'max |dw|/|H|':>13}")
    for n in args.sizes:
        Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        H = Z + Z.conj().T
        tp, (wp, *_rest) = best_time(lambda: _jacobi_py.jacobi_eigh(H, 1e-14, 64), args.repeat)
        if _jacobi is None:
            print(f"{n:5d} {'-':>13} {tp:11.4f}")
            continue
        tc, (wc, *_rest) = best_time(lambda: _jacobi.jacobi_eigh(H, 1e-14, 64), args.repeat)
        dw = np.abs(np.sort(wc) - np.sort(wp)).max() / np.linalg.norm(H)
        print(f"{n:5d} {tc:13.4f} {tp:11.4f} {tp / tc:8.1f} {dw:13.2e}")

    print()
    print(f"{'eig n':>5} {'backend':>9} {'time [s]':>9}")
    backends = ["python"] if _jacobi is None else ["cython", "python"]
    for n in args.eig_sizes:
        for b in backends:
            name, t = eig_time(b, n, args.repeat)
            print(f"{n:5d} {name:>9} {t:9.4f}")


if __name__ == "__main__":
    main()
