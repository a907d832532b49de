"""Compare the numba kernels against the pure-numpy fallbacks.

    python benchmarks/bench_kernels.py [--n 12] [--repeat 3]

Runs every kernel over all non-isomorphic trees of the given order and
prints best-of-``repeat`` wall time per backend.  For n <= 9 the Pruefer
code kernel is timed once per backend as well.  The numba column is
skipped when ``ECC_SPECTRA_NUMBA=0``.
"""

import argparse
import time

import numpy as np

from eccspectra import kernels
from eccspectra._accel import USE_NUMBA
from eccspectra.enumerate import free_trees
from eccspectra.graph import distance_profile
from eccspectra.spectra import eccentricity_matrix_from_profile


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    trees = list(free_trees(args.n))
    csr = [g.csr for g in trees]
    mats = [np.asarray(eccentricity_matrix_from_profile(distance_profile(g)).m, dtype=np.float64) for g in trees]
    shifts = [0.5 * m.sum(axis=1).max() for m in mats]
    shifted = [2.5 * np.eye(args.n) - m for m in mats]

    cases = {
        "bfs_all_pairs": (
            lambda f: [f(ip, ix, args.n) for ip, ix in csr],
            kernels._bfs_loops,
            kernels._bfs_numpy,
        ),
        "jacobi": (
            lambda f: [f(m, 1e-12, 100) for m in mats],
            kernels._jacobi_loops,
            kernels._jacobi_numpy,
        ),
        "power_iteration": (
            lambda f: [f(m, s, 1e-12, 200_000) for m, s in zip(mats, shifts)],
            kernels._power_loops,
            kernels._power_numpy,
        ),
        "det_partial_pivot": (
            lambda f: [f(m) for m in shifted],
            kernels._det_loops,
            kernels._det_numpy,
        ),
    }

    print(f"{len(trees)} trees on {args.n} vertices, best of {args.repeat}")
    print(f"{'kernel':<20}{'numba [s]':>12}{'numpy [s]':>12}{'speedup':>10}")
    for name, (run, loops, vec) in cases.items():
        t_np = best_of(lambda: run(vec), args.repeat)
        if USE_NUMBA:
            run(loops)  # compile outside the timed region
            t_nb = best_of(lambda: run(loops), args.repeat)
            print(f"{name:<20}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>10.1f}")
        else:
            print(f"{name:<20}{'-':>12}{t_np:>12.4f}{'-':>10}")

    if args.n <= 9:
        # Pruefer oracle: integer codes of all n^(n-2) labelled trees
        t_np = best_of(lambda: kernels._prufer_codes_numpy(args.n), 1)
        if USE_NUMBA:
            kernels._prufer_codes_loops(3)
            t_nb = best_of(lambda: kernels._prufer_codes_loops(args.n), 1)
            print(f"{'prufer_codes':<20}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>10.1f}")
        else:
            print(f"{'prufer_codes':<20}{'-':>12}{t_np:>12.4f}{'-':>10}")


if __name__ == "__main__":
    main()
