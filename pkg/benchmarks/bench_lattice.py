"""Time the compiled induction kernel against the numpy fallback.

The workload is the daily-step price/Greek report: five American puts and
their five dual calls at 365 steps.  Both backends are imported directly,
so the timing ignores the import-time selection in ``lattice``.

Run with ``python3 benchmarks/bench_lattice.py [--steps N] [--repeat N]``.
"""

import argparse
import math
import statistics
import time

from dualpricer import MarketState, to_dual
from dualpricer.analytic import ExerciseStyle, OptionRight, OptionSpec
from dualpricer.lattice import build_lattice
from dualpricer import _crr_numpy

try:
    from dualpricer import _crr_core
except ImportError:
    _crr_core = None

SPOTS = (36.0, 38.0, 40.0, 42.0, 44.0)


def workload(steps):
    """(spot, strike, up, prob_up, discount, steps, is_call, american) calls."""
    spec = OptionSpec(OptionRight.PUT, ExerciseStyle.AMERICAN, 40.0, 1.0)
    calls = []
    for spot in SPOTS:
        mkt = MarketState(spot, 0.06, 0.0, 0.40)
        for sp, mk in ((spec, mkt), to_dual(spec, mkt).dual):
            params = build_lattice(mk, sp.maturity, steps)
            calls.append(
                (
                    mk.spot,
                    sp.strike,
                    params.up,
                    params.prob_up,
                    math.exp(-mk.rate * params.dt),
                    steps,
                    sp.right is OptionRight.CALL,
                    True,
                )
            )
    return calls


def time_backend(kernel, calls, repeat):
    timings = []
    for _ in range(repeat):
        start = time.perf_counter()
        for args in calls:
            kernel.induct(*args)
        timings.append(time.perf_counter() - start)
    return min(timings), statistics.median(timings)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, default=365)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    calls = workload(args.steps)
    print(f"workload: {len(calls)} trees x {args.steps} steps, best of {args.repeat}")

    numpy_best, numpy_median = time_backend(_crr_numpy, calls, args.repeat)
    print(f"numpy    best {numpy_best * 1e3:8.2f} ms   median {numpy_median * 1e3:8.2f} ms")

    if _crr_core is None:
        print("cython   extension not built; pip install -e . rebuilds it")
        return

    core_best, core_median = time_backend(_crr_core, calls, args.repeat)
    print(f"cython   best {core_best * 1e3:8.2f} ms   median {core_median * 1e3:8.2f} ms")
    print(f"speedup  x{numpy_best / core_best:.1f} (best over best)")

    for args_tuple in calls[:2]:
        a = _crr_core.induct(*args_tuple)
        b = _crr_numpy.induct(*args_tuple)
        if abs(a[0] - b[0]) > 1e-12:
            raise SystemExit(f"backend mismatch: {a[0]!r} vs {b[0]!r}")
    print("backends agree on spot checks")


if __name__ == "__main__":
    main()
