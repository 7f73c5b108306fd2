"""Time every filter on the numba and numpy backends.

    python benchmarks/bench_kernels.py [--size 512] [--repeat 5] [--csv out.csv]

The first numba call per kernel pays JIT (or cache load) cost; it is run
once as a warm-up and excluded from the timings.
"""

import argparse
import csv
import sys
import time

from impulsekit import _accel
from impulsekit.filters import FilterKind, FilterSpec, apply_filter
from impulsekit.fixtures import synthetic_board
from impulsekit.noise import NoiseSpec, inject

CASES = [
    ("min3", FilterSpec(FilterKind.MIN, window=3)),
    ("max3", FilterSpec(FilterKind.MAX, window=3)),
    ("mean3", FilterSpec(FilterKind.MEAN, window=3)),
    ("chm3_q-1", FilterSpec(FilterKind.CONTRA_HARMONIC, window=3, q=-1.0)),
    ("median3", FilterSpec(FilterKind.STATIC_MEDIAN, window=3)),
    ("median5", FilterSpec(FilterKind.STATIC_MEDIAN, window=5)),
    ("amf_s5", FilterSpec(FilterKind.ADAPTIVE_MEDIAN, s_max=5)),
    ("amf_s7", FilterSpec(FilterKind.ADAPTIVE_MEDIAN, s_max=7)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=512)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--csv", help="also write results to this CSV file")
    args = parser.parse_args(argv)

    img = inject(synthetic_board(args.size, args.size), NoiseSpec.salt_and_pepper(0.1, seed=1))
    rows = []
    for label, spec in CASES:
        timings = {}
        outputs = {}
        for backend in _accel.BACKENDS:
            with _accel.use_backend(backend):
                outputs[backend] = apply_filter(img, spec)  # warm-up / JIT
                timings[backend] = best_of(lambda: apply_filter(img, spec), args.repeat)
        same = len(set(o.pixels.tobytes() for o in outputs.values())) == 1
        rows.append((label, timings.get("numba"), timings["numpy"], same))

    print(f"{args.size}x{args.size}, best of {args.repeat}")
    print(f"{'filter':<10} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}  identical")
    for label, tn, tp, same in rows:
        nb = f"{tn * 1e3:10.2f}" if tn is not None else f"{'-':>10}"
        sp = f"{tp / tn:7.1f}x" if tn else f"{'-':>8}"
        print(f"{label:<10} {nb} {tp * 1e3:10.2f} {sp}  {same}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["filter", "numba_s", "numpy_s", "identical"])
            for label, tn, tp, same in rows:
                w.writerow([label, "" if tn is None else f"{tn:.6f}", f"{tp:.6f}", same])
    return 0 if all(r[3] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
