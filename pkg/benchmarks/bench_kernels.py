"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py [--m 9] [--repeat 3]

Each kernel runs once untimed (JIT warm-up) and then ``--repeat`` times;
the best wall time is reported.  Results of both backends are compared
and the script exits nonzero on any mismatch.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from tocodes._kernels import available_backends, get_backend
from tocodes.codecheck import dual_generator_matrix
from tocodes.gf3m import DEFAULT_PRIMITIVE, build_field


def best_of(fn, repeat):
    fn()
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=9)
    ap.add_argument("--we-m", type=int, default=5, help="m for the dual weight enumerator kernel")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    f = build_field(args.m)
    e = 2 * (1 + 3)  # conditions all hold for odd m, so the C2/C3 scan runs to the end
    powtab = f.power_table(e)
    neg = f.neg_table
    fw = build_field(args.we_m)
    gen = dual_generator_matrix(fw, 8)
    poly = np.array(DEFAULT_PRIMITIVE[args.m], dtype=np.int64)

    cases = {
        "exp_sequence": lambda k: k.exp_sequence(args.m, poly, f.n),
        "condition_witnesses": lambda k: k.condition_witnesses(powtab, neg),
        "uniformity_unit_shift": lambda k: k.uniformity_unit_shift(powtab, args.m),
        "uniformity_all_shifts(m=5)": lambda k: k.uniformity_all_shifts(fw.power_table(8), fw.m, -1),
        f"weight_distribution(m={args.we_m})": lambda k: k.weight_distribution(gen),
    }
    backends = available_backends()
    print(f"m={args.m} (q={f.q}); backends: {', '.join(backends)}")
    print(f"{'kernel':32}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    ok = True
    for name, call in cases.items():
        row, outs = [], []
        for b in backends:
            t, out = best_of(lambda: call(get_backend(b)), args.repeat)
            row.append(t)
            outs.append(out)
        if len(outs) > 1 and not all(np.array_equal(np.asarray(outs[0]), np.asarray(o)) for o in outs[1:]):
            ok = False
            name += " MISMATCH"
        line = f"{name:32}" + "".join(f"{t * 1e3:10.2f}ms" for t in row)
        if len(row) > 1:
            line += f"{row[0] / row[1]:11.1f}x"  # numpy time / numba time
        print(line)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
