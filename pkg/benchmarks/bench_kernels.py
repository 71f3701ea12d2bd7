"""Timing comparison of the compiled and pure NumPy kernel backends.

Runs the three kernel primitives and the two plug-in estimators on matched
inputs and prints a table of per-call times plus the speedup ratio.  The
two backends are exercised in-process by calling the implementation modules
directly, so a single run covers both.

    python benchmarks/bench_kernels.py [--n 200] [--repeat 50]
"""

import argparse
import statistics
import sys
import time

import numpy as np


def _load_impls():
    impls = {}
    from extropy import _pykernels

    impls["python"] = _pykernels
    try:
        from extropy import _ckernels

        impls["compiled"] = _ckernels
    except ImportError:
        pass
    return impls


def _time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def bench_primitives(impls, data, h, repeat):
    ts = np.linspace(0.0, float(data[-1]), 400)
    jobs = {
        "pdf_points(400)": lambda m: m.pdf_points(data, h, ts),
        "mass[0.3,inf)": lambda m: m.mass(data, h, 0.3, np.inf),
        "square_integral": lambda m: m.square_integral(data, h, 0.3, float(data[-1]), 1e-10),
    }
    rows = []
    for label, job in jobs.items():
        timings = {name: _time(lambda m=mod: job(m), repeat) for name, mod in impls.items()}
        rows.append((label, timings))
    return rows


def bench_estimators(data, h, repeat):
    """Times estimate_rex/estimate_pex under each backend via fresh imports."""
    from extropy import kde

    rows = []
    for label, fn in (
        ("estimate_rex", lambda: kde.estimate_rex(data, h, 0.4)),
        ("estimate_pex", lambda: kde.estimate_pex(data, h, 0.8)),
    ):
        rows.append((label, {"active": _time(fn, repeat)}))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200, help="sample size")
    ap.add_argument("--repeat", type=int, default=50, help="timing repetitions (median)")
    ap.add_argument("--h", type=float, default=0.3, help="bandwidth")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(1)
    data = np.sort(rng.exponential(size=args.n))
    impls = _load_impls()
    if "compiled" not in impls:
        print("note: compiled extension not available; timing the fallback only")

    from extropy._backend import active_backend

    print(f"n={args.n} h={args.h} repeat={args.repeat} active_backend={active_backend()}")
    print()
    header = f"{'primitive':<18}" + "".join(f"{name:>14}" for name in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, timings in bench_primitives(impls, data, args.h, args.repeat):
        line = f"{label:<18}" + "".join(f"{timings[name] * 1e6:>12.1f}us" for name in impls)
        if len(timings) == 2:
            line += f"{timings['python'] / timings['compiled']:>9.1f}x"
        print(line)
    print()
    for label, timings in bench_estimators(data, args.h, args.repeat):
        print(f"{label:<18}{timings['active'] * 1e6:>12.1f}us  (backend: {active_backend()})")
    if "compiled" in impls:
        print()
        print("run with EXTROPY_PURE_PYTHON=1 to time the estimators on the fallback")
    return 0


if __name__ == "__main__":
    sys.exit(main())
