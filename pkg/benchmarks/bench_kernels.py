"""Time the numba and numpy kernel backends on the batch workloads.

Run with ``python3 benchmarks/bench_kernels.py [--size N] [--repeat R]``.
Each backend is warmed up once (numba compiles on first call) and the best
of R repeats is reported, together with the largest disagreement between
the two backends.
"""

import argparse
import time

import numpy as np

from scatterq.kernels import get_backend


def workloads(size, seed):
    rng = np.random.default_rng(seed)
    alpha = 0.5 + rng.exponential(2.0, size)
    beta = 0.5 + rng.exponential(2.0, size)
    lim = np.sqrt(alpha * beta)
    gx = rng.uniform(-1, 1, size) * lim
    gp = rng.uniform(-1, 1, size) * lim

    # thermal outputs: n t_l^2 + 1/2, n t_m^2 + 1/2, gamma = n t_l t_m
    n_bar = rng.uniform(0, 1e3, size)
    tl, tm = rng.uniform(0.01, 1, (2, size))
    thermal = (n_bar * tl * tl + 0.5, n_bar * tm * tm + 0.5, n_bar * tl * tm, n_bar * tl * tm)

    # fig2-style map: fixed diagonal, (gamma_x, gamma_p) sweep
    side = int(np.sqrt(size))
    axis = np.linspace(-2.0, 2.0, side)
    mx, mp = np.meshgrid(axis, axis, indexing="ij")
    return {
        "discord (thermal)": ("discord", thermal),
        "classify (random forms)": ("classify", (alpha, beta, gx, gp)),
        "classify (region map)": ("classify", (2.0, 2.0, mx, mp)),
        "intensity correlation": ("intensity_correlation", (alpha, beta, gx, gp)),
    }


def best_of(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=1_000_000)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    fast = get_backend("numba")
    slow = get_backend("numpy")
    print(f"{'workload':<26}{'numpy (s)':>12}{'numba (s)':>12}{'speedup':>10}{'max diff':>12}")
    for name, (fn_name, inputs) in workloads(args.size, args.seed).items():
        for backend in (fast, slow):
            getattr(backend, fn_name)(*(x[:10] if isinstance(x, np.ndarray) else x for x in inputs))
        t_np, out_np = best_of(getattr(slow, fn_name), inputs, args.repeat)
        t_nb, out_nb = best_of(getattr(fast, fn_name), inputs, args.repeat)
        diff = np.nanmax(np.abs(out_np.astype(float) - out_nb.astype(float)))
        print(f"{name:<26}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>10.1f}{diff:>12.1e}")


if __name__ == "__main__":
    main()
