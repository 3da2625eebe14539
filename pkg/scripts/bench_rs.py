"""Wall-clock of the key-equation RS decoder on orbit-sized instances.

Runs N in {15, 31, 63} (points gamma^0..gamma^{N-1} of F_{2^m}) at the list
decoder's dimension and radius and fits the log-log slope.  Both the
pre-reduced path and full elimination are timed.
"""
import argparse
import time

import numpy as np

from grassmann_codes.field import build_field
from grassmann_codes.list_decoder import list_parameters
from grassmann_codes.rs import RsInstance, poly_eval_batch, rs_decode, rs_decode_direct


def bench(m: int, reps: int, rng) -> tuple[int, float, float]:
    F = build_field(2, m)
    p = list_parameters(2, m)
    N, k, t = p["N"], p["k_rs"], p["t"]
    inst = RsInstance(F, F.exp(np.arange(N)), k, t)
    words = []
    for _ in range(reps):
        f = rng.integers(0, F.size, k).tolist()
        y = poly_eval_batch(F, f, inst.points)
        pos = rng.choice(N, t, replace=False)
        y[pos] = F.add(y[pos], rng.integers(1, F.size, t))
        words.append((f, y))
    timings = []
    for fn in (rs_decode, rs_decode_direct):
        start = time.perf_counter()
        for f, y in words:
            assert fn(inst, y) == f
        timings.append((time.perf_counter() - start) / reps)
    return N, timings[0], timings[1]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    rows = [bench(m, args.reps, rng) for m in (4, 5, 6)]
    print(f"{'N':>4} {'reduced ms':>11} {'direct ms':>10}")
    for N, a, b in rows:
        print(f"{N:>4} {1000 * a:>11.2f} {1000 * b:>10.2f}")
    Ns = np.log([r[0] for r in rows])
    for label, col in (("reduced", 1), ("direct", 2)):
        slope = np.polyfit(Ns, np.log([r[col] for r in rows]), 1)[0]
        print(f"log-log slope ({label}): {slope:.2f}")


if __name__ == "__main__":
    main()
