"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--seed 1]

Prints one line per kernel with the best time of each backend and the
speed-up.  Both backends are checked to give the same answers first.
"""

import argparse
import random
import sys
import timeit

from khparam import _pure
from khparam.diagram import braid_closure
from khparam.state import _layout, all_states

try:
    from khparam import _kernels
except ImportError:
    _kernels = None


def resolve_workload(seed):
    rng = random.Random(seed)
    word = [rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(11)]
    d = braid_closure(word, 4)
    lay = _layout(d)
    states = list(all_states(d))
    m = len(lay.labels)

    def run(impl):
        for s in states:
            impl.resolve_circles(lay.quads, s, m)

    return f"resolve_circles ({len(states)} states, {d.n} crossings)", run


def elimination_workload(seed):
    rng = random.Random(seed)
    nrows, ncols = 400, 400
    base = [{r: rng.choice([-1, 1, 1, 2]) for r in rng.sample(range(nrows), 4)} for _ in range(ncols)]

    def run(impl):
        impl.eliminate_unit_pivots([dict(c) for c in base], nrows)

    return f"eliminate_unit_pivots ({nrows}x{ncols}, 4 per column)", run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels are not built; only the fallback is available", file=sys.stderr)
        return 1
    for make in (resolve_workload, elimination_workload):
        name, run = make(args.seed)
        t_py = min(timeit.repeat(lambda: run(_pure), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: run(_kernels), number=1, repeat=args.repeat))
        print(f"{name}: python {t_py * 1e3:.1f} ms, cython {t_cy * 1e3:.1f} ms, x{t_py / t_cy:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
