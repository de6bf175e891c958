"""Benchmark the numba kernels against the pure-numpy fallback path.

Run from the repo root:

    python benchmarks/bench_kernels.py

The jitted functions are compiled on first call; compilation happens during
the warmup pass and is excluded from the timings. Run with
TRIFRUST_NO_NUMBA=1 to confirm the numbers the fallback path would see in
production (this script still times both implementations directly).
"""

import time

import numpy as np

from trifrust._accel import _numba_available
from trifrust.kernels import _cond_entropy_batch_impl, _cond_entropy_batch_numpy, _jacobi_eigh_impl


def _timeit(fn, args, reps, warmup=2):
    for _ in range(warmup):
        fn(*args)
    t0 = time.perf_counter()
    for _ in range(reps):
        fn(*args)
    return (time.perf_counter() - t0) / reps


def main():
    rng = np.random.default_rng(7)
    g = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    herm8 = np.ascontiguousarray((g + g.conj().T) / 2)

    gg = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    rho8 = gg @ gg.conj().T
    rho8 = np.ascontiguousarray(rho8 / np.trace(rho8).real)
    g4 = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho4 = g4 @ g4.conj().T
    rho4 = np.ascontiguousarray(rho4 / np.trace(rho4).real)

    thetas = np.repeat(np.linspace(0, np.pi, 61), 120)
    phis = np.tile(np.linspace(0, 2 * np.pi, 120, endpoint=False), 61)

    rows = []
    have_numba = _numba_available()
    if have_numba:
        from numba import njit

        jac_nb = njit(cache=True)(_jacobi_eigh_impl)

        # the grid kernel calls the module-global eigensolver; rebind it jitted
        import trifrust.kernels as K

        if not callable(getattr(K.jacobi_eigvals, "py_func", None)):
            K.jacobi_eigvals = njit(cache=True)(K._jacobi_eigvals_impl)
        grid_nb = njit(cache=True)(_cond_entropy_batch_impl)
    else:
        print("numba unavailable; timing the numpy fallback only\n")

    cases = [
        ("jacobi_eigh 8x8", (herm8,), _jacobi_eigh_impl, jac_nb if have_numba else None, 500),
        (
            "measurement grid (61x120), 2-qubit state",
            (rho4, 2, thetas, phis),
            _cond_entropy_batch_numpy,
            grid_nb if have_numba else None,
            5,
        ),
        (
            "measurement grid (61x120), 3-qubit state",
            (rho8, 4, thetas, phis),
            _cond_entropy_batch_numpy,
            grid_nb if have_numba else None,
            5,
        ),
        (
            "refinement batch (4 angles), 3-qubit state",
            (rho8, 4, thetas[:4], phis[:4]),
            _cond_entropy_batch_numpy,
            grid_nb if have_numba else None,
            2000,
        ),
    ]

    print(f"{'kernel':45s} {'numpy path':>12s} {'numba path':>12s} {'speedup':>9s}")
    for name, args, fn_np, fn_nb, reps in cases:
        t_np = _timeit(fn_np, args, reps)
        if fn_nb is not None:
            t_nb = _timeit(fn_nb, args, reps)
            rows.append((name, t_np, t_nb))
            print(f"{name:45s} {t_np * 1e3:9.3f} ms {t_nb * 1e3:9.3f} ms {t_np / t_nb:8.1f}x")
        else:
            print(f"{name:45s} {t_np * 1e3:9.3f} ms {'-':>12s} {'-':>9s}")

    if have_numba:
        a = _jacobi_eigh_impl(herm8)[0]
        b = jac_nb(herm8)[0]
        grid_np = _cond_entropy_batch_numpy(rho8, 4, thetas[:50], phis[:50])
        grid_nb_vals = grid_nb(rho8, 4, thetas[:50], phis[:50])
        print(
            f"\nagreement: eigenvalues {np.abs(a - b).max():.2e}, "
            f"grid values {np.abs(grid_np - grid_nb_vals).max():.2e}"
        )


if __name__ == "__main__":
    main()
