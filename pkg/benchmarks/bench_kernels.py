"""Compare the compiled and numpy sweep backends on identical inputs.

Usage:  python3 benchmarks/bench_kernels.py [--reps 3]

Each benchmark builds one search problem, runs it through both kernel
modules, checks the answers agree, and reports wall-clock times.
"""

import argparse
import time

import numpy as np

from sesq._kernels import _modp_py

try:
    from sesq._kernels import _modp_cy
except ImportError:
    _modp_cy = None


def _time(fn, reps):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def bench_pair_iso(p, h, n, reps, rng):
    bphi = rng.integers(0, p, size=(h, n, n)).astype(np.int64)
    bpsi = rng.integers(0, p, size=(h, n, n)).astype(np.int64)
    total = p ** h
    return [("pair_iso", f"p={p} h={h} n={n} ({total} candidates)",
             lambda m: m.sweep_pair_iso(bphi.copy(), bpsi.copy(), p, total))]


def bench_isometry(p, h, n, d, reps, rng):
    basis = rng.integers(0, p, size=(h, n, n)).astype(np.int64)
    gs = rng.integers(0, p, size=(n, n, d)).astype(np.int64)
    gt = rng.integers(0, p, size=(n, n, d)).astype(np.int64)
    total = p ** h
    return [("isometry", f"p={p} h={h} n={n} d={d} ({total} candidates)",
             lambda m: m.sweep_isometry(basis.copy(), gs.copy(), gt.copy(),
                                        p, total))]


def bench_congruence(p, m_dim, reps, rng):
    struct = rng.integers(0, p, size=(m_dim, m_dim, m_dim)).astype(np.int64)
    invol = rng.integers(0, p, size=(m_dim, m_dim)).astype(np.int64)
    f = rng.integers(0, p, size=m_dim).astype(np.int64)
    fp = rng.integers(0, p, size=m_dim).astype(np.int64)
    total = p ** m_dim
    return [("congruence", f"p={p} m={m_dim} ({total} candidates)",
             lambda m: m.sweep_congruence(struct.copy(), invol.copy(),
                                          f.copy(), fp.copy(), p, total))]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    cases = []
    cases += bench_pair_iso(3, 10, 4, args.reps, rng)     # 59049
    cases += bench_pair_iso(5, 8, 3, args.reps, rng)      # 390625
    cases += bench_isometry(3, 11, 4, 2, args.reps, rng)  # 177147
    cases += bench_isometry(5, 8, 4, 1, args.reps, rng)   # 390625
    cases += bench_congruence(3, 12, args.reps, rng)      # 531441
    cases += bench_congruence(5, 8, args.reps, rng)       # 390625

    print(f"{'sweep':<12} {'problem':<38} {'numpy':>10} {'cython':>10} {'speedup':>8}")
    for name, desc, run in cases:
        out_py, t_py = _time(lambda: run(_modp_py), args.reps)
        if _modp_cy is None:
            print(f"{name:<12} {desc:<38} {t_py * 1e3:9.1f}ms   (no compiled backend)")
            continue
        out_cy, t_cy = _time(lambda: run(_modp_cy), args.reps)
        assert out_py == out_cy, f"backend disagreement on {name}: {desc}"
        ratio = t_py / t_cy if t_cy else float("inf")
        print(f"{name:<12} {desc:<38} {t_py * 1e3:9.1f}ms {t_cy * 1e3:9.1f}ms {ratio:7.2f}x")


if __name__ == "__main__":
    main()
