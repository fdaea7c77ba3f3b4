"""Compare the compiled and pure-Python search kernels.

Runs the same maximum-independent-set, dominating-set and semi-induced
pattern searches through both backends, checks that they agree, and
prints median wall times.

    python3 benchmarks/bench_kernels.py --repeat 5
"""

from __future__ import annotations

import argparse
import statistics
import time
from pathlib import Path

from semiladder import _pykernels
from semiladder.graph import gnp
from semiladder.reductions import grid_tiling_to_is
from semiladder.tiling import parse_grid_tiling

try:
    from semiladder import _ckernels
except ImportError:
    _ckernels = None

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "diagonal3.gt"


def cases():
    out = []
    for n, p in [(40, 0.2), (60, 0.1), (70, 0.5)]:
        g = gnp(n, p, seed=n)
        out.append((f"mis gnp({n},{p})", "mis", g))
    red = grid_tiling_to_is(parse_grid_tiling(FIXTURE.read_text())).graph
    out.append(("mis tiling-reduction(96)", "mis", red))
    for n, p in [(30, 0.3), (40, 0.2)]:
        out.append((f"ds gnp({n},{p})", "ds", gnp(n, p, seed=n)))
    for h, n in [(4, 24), (5, 28)]:
        out.append((f"halfgraph h={h} gnp({n},0.5)", ("pat", 2, h), gnp(n, 0.5, seed=h)))
    # exhaustive negatives: the reduction output has half-graph index 5
    # and co-matching index 4
    out.append(("halfgraph h=6 reduction(96)", ("pat", 2, 6), red))
    out.append(("comatching h=5 reduction(96)", ("pat", 1, 5), red))
    return out


def run_case(mod, kind, g):
    adj = list(g.adj)
    full = g.full_mask
    if kind == "mis":
        return mod.mis_search(adj, full, -1, g.n + 1, 10**9)[:2]
    if kind == "ds":
        closed = [a | 1 << i for i, a in enumerate(adj)]
        return mod.ds_search(closed, full, full, g.n, 10**9)[:2]
    _, code, h = kind
    return mod.semi_induced_search(adj, g.n, code, h)[:2]


def timed(mod, kind, g, repeat):
    times = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = run_case(mod, kind, g)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels unavailable; build with `pip install --no-build-isolation -e .`")
    print(f"{'case':<34}{'python s':>11}{'cython s':>11}{'speedup':>9}  agree")
    for name, kind, g in cases():
        tp, rp = timed(_pykernels, kind, g, args.repeat)
        if _ckernels is None:
            print(f"{name:<34}{tp:>11.4f}{'-':>11}{'-':>9}  -")
            continue
        tc, rc = timed(_ckernels, kind, g, args.repeat)
        agree = "yes" if rp == rc else "NO"
        print(f"{name:<34}{tp:>11.4f}{tc:>11.4f}{tp / max(tc, 1e-9):>8.1f}x  {agree}")


if __name__ == "__main__":
    main()
