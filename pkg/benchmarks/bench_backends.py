"""Compare the compiled jacobian kernel against the pure-Python fallback.

Times the three hot operations (affine point count, reduced-divisor
enumeration, Cantor additions) on the same inputs through both backends and
prints a small table with the speedup.

    python3 benchmarks/bench_backends.py --prime 11 --rounds 3
"""

import argparse
import random
import time

from sidonlab import _kernel_py, polyfp

try:
    from sidonlab import _kernel as _compiled
except ImportError:
    _compiled = None


def pick_curve(rng, p, genus):
    while True:
        f = tuple(rng.randrange(p) for _ in range(2 * genus + 1)) + (1,)
        if polyfp.is_squarefree(f, p):
            return f


def best_of(rounds, fn, *args):
    best = None
    for _ in range(rounds):
        t0 = time.perf_counter()
        out = fn(*args)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best, out


def run_adds(kernel, p, f, pairs):
    for d1, d2 in pairs:
        kernel.cantor_add(p, f, d1, d2)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime", type=int, default=11)
    ap.add_argument("--genus", type=int, default=2)
    ap.add_argument("--count-prime", type=int, default=100003,
                    help="field size for the point-count benchmark")
    ap.add_argument("--adds", type=int, default=2000)
    ap.add_argument("--rounds", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _compiled is None:
        print("compiled kernel is not built; nothing to compare")
        return 1

    rng = random.Random(args.seed)
    p, genus = args.prime, args.genus
    f = pick_curve(rng, p, genus)
    fbig = pick_curve(rng, args.count_prime, genus)
    divisors = _kernel_py.enumerate_reduced_divisors(p, f, genus)
    pairs = [(rng.choice(divisors), rng.choice(divisors))
             for _ in range(args.adds)]

    rows = []

    t_py, n_py = best_of(args.rounds, _kernel_py.count_points_affine,
                         args.count_prime, fbig)
    t_cy, n_cy = best_of(args.rounds, _compiled.count_points_affine,
                         args.count_prime, fbig)
    assert n_py == n_cy
    rows.append((f"count_points_affine p={args.count_prime}", t_py, t_cy))

    t_py, e_py = best_of(args.rounds, _kernel_py.enumerate_reduced_divisors,
                         p, f, genus)
    t_cy, e_cy = best_of(args.rounds, _compiled.enumerate_reduced_divisors,
                         p, f, genus)
    assert e_py == e_cy
    rows.append((f"enumerate p={p} genus={genus} (|J|={len(e_py)})",
                 t_py, t_cy))

    t_py, _ = best_of(args.rounds, run_adds, _kernel_py, p, f, pairs)
    t_cy, _ = best_of(args.rounds, run_adds, _compiled, p, f, pairs)
    rows.append((f"cantor_add x{args.adds}", t_py, t_cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'operation':<{width}}  {'python':>10}  {'cython':>10}  speedup")
    for name, t_py, t_cy in rows:
        print(f"{name:<{width}}  {t_py * 1e3:>8.2f}ms  {t_cy * 1e3:>8.2f}ms  "
              f"x{t_py / t_cy:.1f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
