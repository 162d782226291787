"""Benchmark the numba kernels against the numpy/scipy fallback path.

Run with ``python3 benchmarks/bench_kernels.py``; pass ``--sizes`` to change
the grid sizes.  The fallback is what ``ORLAB_NO_NUMBA=1`` selects at import
time; here both implementations are called directly so one process can time
the pair on identical inputs and confirm they agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from orlab import _kernels as K


def _time(fn, *args, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_trailing(n_points: int, window: int) -> None:
    rng = np.random.default_rng(0)
    w = rng.standard_normal(n_points)
    t_np = _time(K._trailing_max_np, w, window)
    if K.USE_NUMBA:
        K._trailing_max_nb(w, window)  # compile outside the timer
        t_nb = _time(K._trailing_max_nb, w, window)
        assert np.array_equal(K._trailing_max_nb(w, window),
                              K._trailing_max_np(w, window))
    else:
        t_nb = float("nan")
    print(f"trailing max  N={n_points:>8d} n={window:<5d} "
          f"numpy {t_np*1e3:8.3f} ms   numba {t_nb*1e3:8.3f} ms   "
          f"speedup {t_np / t_nb:5.2f}x" if K.USE_NUMBA else
          f"trailing max  N={n_points:>8d} n={window:<5d} "
          f"numpy {t_np*1e3:8.3f} ms   (numba unavailable)")


def bench_centered(n_points: int, half: int) -> None:
    rng = np.random.default_rng(1)
    v = rng.standard_normal(n_points)
    t_np = _time(K._centered_max_np, v, half)
    if K.USE_NUMBA:
        K._centered_max_nb(v, half)
        t_nb = _time(K._centered_max_nb, v, half)
        assert np.array_equal(K._centered_max_nb(v, half),
                              K._centered_max_np(v, half))
        print(f"centered max  N={n_points:>8d} m={half:<5d} "
              f"numpy {t_np*1e3:8.3f} ms   numba {t_nb*1e3:8.3f} ms   "
              f"speedup {t_np / t_nb:5.2f}x")
    else:
        print(f"centered max  N={n_points:>8d} m={half:<5d} "
              f"numpy {t_np*1e3:8.3f} ms   (numba unavailable)")


def bench_hl(n_points: int) -> None:
    rng = np.random.default_rng(2)
    a = np.abs(rng.standard_normal(n_points))
    sizes = K.default_window_sizes(n_points)

    def run(use_numba: bool):
        prefix = np.concatenate([[0.0], np.cumsum(a)])
        out = np.full(n_points, -np.inf)
        wp = np.empty(n_points)
        impl = K._trailing_max_nb if use_numba else K._trailing_max_np
        for n in sizes:
            n = int(n)
            means = (prefix[n:] - prefix[:-n]) / n
            wp[: n_points - n + 1] = means
            wp[n_points - n + 1:] = -np.inf
            np.maximum(out, impl(wp, n), out)
        return out

    t_np = _time(run, False, repeats=3)
    if K.USE_NUMBA:
        run(True)
        t_nb = _time(run, True, repeats=3)
        assert np.allclose(run(True), run(False))
        print(f"hl maximal    N={n_points:>8d} ({len(sizes)} windows) "
              f"numpy {t_np*1e3:8.1f} ms   numba {t_nb*1e3:8.1f} ms   "
              f"speedup {t_np / t_nb:5.2f}x")
    else:
        print(f"hl maximal    N={n_points:>8d} ({len(sizes)} windows) "
              f"numpy {t_np*1e3:8.1f} ms   (numba unavailable)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="32768,262144",
                    help="comma-separated grid sizes")
    args = ap.parse_args()
    print(f"numba path available: {K.USE_NUMBA}")
    for n_points in (int(s) for s in args.sizes.split(",")):
        bench_trailing(n_points, 64)
        bench_trailing(n_points, 1024)
        bench_centered(n_points, 32)
        bench_hl(n_points)


if __name__ == "__main__":
    main()
