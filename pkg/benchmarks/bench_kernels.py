"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Each kernel runs on the same inputs under both backends; the table shows
the best-of-``repeat`` wall time and the speedup.  Inputs: every tree of
order 14 (edv counts), random trees of order 400 (distance sums) and
random Prüfer sequences of order 2000 (decoding).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import timeit

from edvlab.enumerate import all_trees
from edvlab.tree import Tree
from edvlab._kernels import _pure, compiled


def _random_tree(n: int, rng: random.Random) -> Tree:
    return Tree.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def _workloads(rng: random.Random):
    small = [t.preorder_parents for t in all_trees(14)]
    big = [_random_tree(400, rng).csr for _ in range(10)]
    seqs = [[rng.randrange(2000) for _ in range(1998)] for _ in range(20)]
    return {
        "edv_counts (3159 trees, n=14)": lambda k: [k.edv_counts(p) for p in small],
        "subtree_sizes (3159 trees, n=14)": lambda k: [k.subtree_sizes(p) for p in small],
        "distance_sums (10 trees, n=400)": lambda k: [k.distance_sums(*c) for c in big],
        "prufer_decode (20 seqs, n=2000)": lambda k: [k.prufer_decode(s, 2000) for s in seqs],
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    fast = compiled()
    if fast is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for name, work in _workloads(random.Random(args.seed)).items():
        if work(_pure) != work(fast):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_pure = min(timeit.repeat(lambda: work(_pure), number=1, repeat=args.repeat))
        t_fast = min(timeit.repeat(lambda: work(fast), number=1, repeat=args.repeat))
        rows.append({"kernel": name, "python_s": t_pure, "cython_s": t_fast, "speedup": t_pure / t_fast})

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["kernel"]) for r in rows)
        print(f"{'kernel'.ljust(width)}  {'python':>9}  {'cython':>9}  speedup")
        for r in rows:
            print(f"{r['kernel'].ljust(width)}  {r['python_s']:9.4f}  {r['cython_s']:9.4f}  {r['speedup']:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
