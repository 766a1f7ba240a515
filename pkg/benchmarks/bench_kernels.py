"""Compare the numba and numpy raster kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both kernels run on identical inputs; the script also checks that their
outputs agree before reporting timings.
"""
import argparse
import timeit

import numpy as np

from ezwin import _kernels

CASES = {
    "ellipse 32x32": ("ellipse", (96, 96), (32, 32, 32, 32)),
    "ellipse 760x570": ("ellipse", (800, 600), (20, 15, 760, 570)),
    "triangle small": ("triangle", (96, 96), (10.5, 80.0, 60.25, 75.0, 30.0, 12.125)),
    "triangle screen": ("triangle", (800, 600), (-40.0, 590.0, 840.0, 560.0, 400.5, 3.25)),
}
RED = np.array([255, 0, 0], dtype=np.uint8)


def runner(impl, kind, size, args):
    w, h = size
    fb = np.full((h, w, 3), 255, dtype=np.uint8)
    fn = getattr(_kernels, f"fill_{kind}_{impl}")
    return fb, lambda: fn(fb, *args, RED)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    opts = ap.parse_args(argv)

    impls = ["np"] + (["jit"] if _kernels.HAVE_NUMBA else [])
    print(f"{'case':<18}" + "".join(f"{i:>14}" for i in impls) + ("     speedup" if len(impls) == 2 else ""))
    for name, (kind, size, args) in CASES.items():
        times, outputs = [], []
        for impl in impls:
            fb, call = runner(impl, kind, size, args)
            call()  # warm-up, includes JIT compilation
            t = min(timeit.repeat(call, number=1, repeat=opts.repeat))
            times.append(t)
            outputs.append(fb)
        if len(outputs) == 2 and not np.array_equal(*outputs):
            raise SystemExit(f"{name}: kernels disagree")
        row = f"{name:<18}" + "".join(f"{t * 1e6:>11.1f} us" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)
    if not _kernels.HAVE_NUMBA:
        print("numba not installed; only the numpy kernels were timed")


if __name__ == "__main__":
    main()
