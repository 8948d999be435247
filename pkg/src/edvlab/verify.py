"""Named invariant suites run by ``edvlab verify``.

Each check reports pass/fail and, on failure, the first counterexample
tree in the text format so the failure can be replayed.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .canon import canonical_code, is_isomorphic
from .classify import classify
from .edv import EdgeDivisionVector, OrderRelation, compare, edv
from .enumerate import all_trees, count_trees, prufer_classes
from .errors import InvalidArgumentError
from .families import (
    StarlikeSpec,
    check_two_spider_dedv,
    corona_edv,
    corona_k1,
    is_weak_balanced,
    make_starlike,
    make_two_spider,
    predict_dedv,
    rooted_product_edv,
    rooted_product_path,
    starlike_edv,
)
from .indices import (
    COLUMNS,
    all_indices,
    degree_distance_oracle,
    gutman_oracle,
    steiner_wiener_forms,
    wiener_distance_oracle,
)
from .transforms import (
    all_balanced_pairs,
    branch_exchange,
    branch_move,
    exchange_certificate,
    exchange_closure,
    legal_moves,
    predict_branch_move,
)
from .tree import Tree

# number of free trees of order n, n = 1..20
TREE_COUNTS = (
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741,
    19320, 48629, 123867, 317955, 823065,
)

# vector, W, h, Gut for every listed pair/class of orders 7-9
TABLE3 = (
    (7, (4, 1, 1), 46, 56, 106),
    (8, (4, 1, 1, 1), 71, 93, 179),
    (8, (4, 2, 1, 0), 67, 85, 163),
    (8, (5, 1, 1, 0), 62, 75, 143),
    (9, (4, 1, 1, 2), 104, 144, 280),
    (9, (4, 1, 2, 1), 102, 140, 272),
    (9, (4, 2, 1, 1), 98, 132, 256),
    (9, (4, 2, 2, 0), 96, 128, 248),
    (9, (5, 1, 1, 1), 92, 120, 232),
    (9, (5, 1, 2, 0), 90, 116, 224),
    (9, (5, 2, 0, 1), 88, 112, 216),
    (9, (5, 2, 1, 0), 86, 108, 208),
    (9, (6, 0, 1, 1), 86, 108, 208),
    (9, (6, 1, 0, 1), 82, 100, 192),
    (9, (6, 1, 1, 0), 80, 96, 184),
)

SUITES = ("counts", "edv", "order", "exchange", "families", "indices", "closure")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    counterexample: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


class _Check:
    """Counts cases and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.detail = ""
        self.counterexample: str | None = None

    def __call__(self, ok: bool, t: Tree | None = None, detail: str = "") -> None:
        self.checked += 1
        if not ok and self.counterexample is None and not self.detail:
            self.detail = detail or "failed"
            self.counterexample = t.to_text() if t is not None else None

    def result(self) -> CheckResult:
        passed = not self.detail
        return CheckResult(self.name, passed, self.checked, self.detail, self.counterexample)


def _orders(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


def _random_relabel(t: Tree, rng: random.Random) -> Tree:
    perm = list(range(t.n))
    rng.shuffle(perm)
    return t.relabel(perm)


# ---------------------------------------------------------------------------
# suites


def suite_counts(max_n: int, seed: int) -> Iterator[CheckResult]:
    c = _Check("tree-counts")
    for n in _orders(1, min(max_n, len(TREE_COUNTS))):
        got = count_trees(n)
        c(got == TREE_COUNTS[n - 1], None, f"n={n}: {got} != {TREE_COUNTS[n - 1]}")
    yield c.result()
    c = _Check("no-duplicate-codes")
    for n in _orders(1, min(max_n, 12)):
        trees = list(all_trees(n))
        codes = Counter(canonical_code(t) for t in trees)
        dup = next((t for t in trees if codes[canonical_code(t)] > 1), None)
        c(dup is None, dup, f"duplicate at n={n}")
    yield c.result()
    c = _Check("prufer-oracle")
    for n in _orders(1, min(max_n, 9)):
        mine = {canonical_code(t) for t in all_trees(n)}
        c(mine == prufer_classes(n, internal_first=n > 7), None, f"n={n}: generator and Prufer sweep differ")
    yield c.result()


def suite_edv(max_n: int, seed: int) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    total = _Check("sum-is-n-minus-1")
    leaves = _Check("r1-counts-leaves")
    invariant = _Check("relabel-invariance")
    for n in _orders(2, min(max_n, 12)):
        for t in all_trees(n):
            r = edv(t)
            total(sum(r.r) == n - 1, t, f"sum {sum(r.r)}")
            if n >= 3:
                leaves(r[1] == len(t.leaves()), t, f"r1={r[1]}")
            if n <= 9:
                for _ in range(20):
                    invariant(edv(_random_relabel(t, rng)) == r, t, "vector changed under relabelling")
    yield from (total.result(), leaves.result(), invariant.result())


def suite_order(max_n: int, seed: int) -> Iterator[CheckResult]:
    vectors = sorted({edv(t) for n in _orders(2, min(max_n, 10)) for t in all_trees(n)})
    by_n: dict[int, list[EdgeDivisionVector]] = {}
    for v in vectors:
        by_n.setdefault(v.n, []).append(v)
    flip = _Check("antisymmetry")
    refl = _Check("reflexive")
    trans = _Check("transitive-less")
    for vs in by_n.values():
        rel = {(a, b): compare(a, b) for a in vs for b in vs}
        for a in vs:
            refl(rel[a, a] is OrderRelation.EQUIVALENT, None, f"{a} not equivalent to itself")
            for b in vs:
                flip(rel[b, a] is rel[a, b].flipped(), None, f"{a} vs {b}")
                if rel[a, b] is OrderRelation.LESS:
                    for c in vs:
                        if rel[b, c] is OrderRelation.LESS:
                            trans(rel[a, c] is OrderRelation.LESS, None, f"{a} < {b} < {c}")
    yield from (refl.result(), flip.result(), trans.result())


def suite_exchange(max_n: int, seed: int) -> Iterator[CheckResult]:
    keep = _Check("exchange-preserves-edv")
    cert = _Check("certificate-soundness")
    for n in _orders(2, min(max_n, 9)):
        for t in all_trees(n):
            r = edv(t)
            for p in all_balanced_pairs(t):
                t2 = branch_exchange(t, p)
                keep(edv(t2) == r, t, f"pair {p}")
                if exchange_certificate(t, p).proves_non_isomorphic:
                    cert(not is_isomorphic(t, t2), t, f"pair {p} certified but isomorphic")
    yield from (keep.result(), cert.result())
    move = _Check("branch-move-prediction")
    for n in _orders(2, min(max_n, 8)):
        for t in all_trees(n):
            for m in legal_moves(t):
                got = compare(edv(t), edv(branch_move(t, m)))
                want = predict_branch_move(t, m)
                move(got is want, t, f"move {m}: predicted {want.value}, got {got.value}")
    yield move.result()


def _dedv_table(hi: int) -> dict[int, Counter]:
    return {n: Counter(edv(t) for t in all_trees(n)) for n in _orders(2, hi)}


def suite_families(max_n: int, seed: int) -> Iterator[CheckResult]:
    hi = min(max_n, 12)
    table = _dedv_table(hi)

    def truth(t: Tree) -> bool:
        return table[t.n][edv(t)] == 1

    pred = _Check("predict-dedv-agrees")
    for n in _orders(2, min(hi, 10)):
        for t in all_trees(n):
            p = predict_dedv(t)
            pred(p.verdict is None or p.verdict == truth(t), t, f"rule {p.rule} says {p.verdict}")
    yield pred.result()

    star = _Check("weak-balanced-iff-dedv")
    closed = _Check("starlike-closed-form")
    for n in _orders(5, hi):
        for k in range(1, n):
            for legs in _partitions(n - 1, k):
                spec = StarlikeSpec(legs)
                t = make_starlike(spec)
                closed(starlike_edv(spec) == edv(t), t, f"legs {legs}")
                if k >= 4:
                    star(is_weak_balanced(spec) == truth(t), t, f"legs {legs}")
    yield from (star.result(), closed.result())

    spider = _Check("two-spider-predicate")
    for s1, s2, k, t1, t2 in _two_spider_params(min(hi, 11)):
        t = make_two_spider(s1, s2, k, t1, t2)
        spider(check_two_spider_dedv(s1, s2, k, t1, t2) == truth(t), t, f"params {(s1, s2, k, t1, t2)}")
    yield spider.result()

    prod = _Check("product-closed-forms")
    keep = _Check("products-preserve-dedv")
    for m in _orders(2, 7):
        for seed_tree in all_trees(m):
            seed_dedv = truth(seed_tree) if m <= hi else False
            for s in range(1, 8):
                if m * s <= 14:
                    t = rooted_product_path(seed_tree, s)
                    prod(edv(t) == rooted_product_edv(edv(seed_tree), s), t, f"rooted product s={s}")
                    if m * s <= hi and seed_dedv:
                        keep(truth(t), t, f"rooted product s={s}")
                if m * (s + 1) <= 14:
                    t = corona_k1(seed_tree, s)
                    prod(edv(t) == corona_edv(edv(seed_tree), s), t, f"corona s={s}")
                    if m * (s + 1) <= hi and seed_dedv:
                        keep(truth(t), t, f"corona s={s}")
    yield from (prod.result(), keep.result())


def _partitions(total: int, parts: int, least: int = 1) -> Iterator[tuple[int, ...]]:
    """Sorted tuples of ``parts`` integers ``>= least`` summing to ``total``."""
    if parts == 1:
        if total >= least:
            yield (total,)
        return
    for first in range(least, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _two_spider_params(max_n: int) -> Iterator[tuple[int, int, int, int, int]]:
    for n in _orders(6, max_n):
        for k in range(1, n):
            rest = n - k - 1
            for s1 in range(1, rest):
                for s2 in range(s1, rest):
                    for t1 in range(1, rest):
                        t2 = rest - s1 - s2 - t1
                        if t2 >= t1 and s1 + s2 <= t1 + t2:
                            yield s1, s2, k, t1, t2


def suite_indices(max_n: int, seed: int) -> Iterator[CheckResult]:
    table = _Check("table3-values")
    for n, r, w, h, gut in TABLE3:
        vals = all_indices(EdgeDivisionVector.of(n, r))
        got = (vals["W"].render(), vals["h"].render(), vals["Gut"].render())
        table(got == (str(w), str(h), str(gut)), None, f"{r}: {got} != {(w, h, gut)}")
    yield table.result()
    wiener = _Check("wiener-oracle")
    degree = _Check("degree-distance-oracle")
    gutman = _Check("gutman-oracle")
    steiner = _Check("steiner-dual-forms")
    lam1 = _Check("lambda-1-reductions")
    for n in _orders(2, min(max_n, 12)):
        for t in all_trees(n):
            vals = all_indices(t)
            wiener(vals["W"] == wiener_distance_oracle(t), t, "W")
            if n <= 10:
                degree(vals["DD"] == degree_distance_oracle(t), t, "DD")
                gutman(vals["Gut"] == gutman_oracle(t), t, "Gut")
                r = edv(t)
                for k in range(2, n + 1):
                    a, b = steiner_wiener_forms(r, k)
                    steiner(a == b, t, f"k={k}: {a} != {b}")
                lam1(vals["mW"] == vals["W"] and vals["vW"] == 0, t, "mW != W or vW != 0 at lambda 1")
    yield from (wiener.result(), degree.result(), gutman.result(), steiner.result(), lam1.result())
    const = _Check("class-constant-indices")
    for n in _orders(2, min(max_n, 10)):
        for cls in classify(n):
            first = all_indices(cls.trees[0], lam=2, k=3)
            for t in cls.trees[1:]:
                vals = all_indices(t, lam=2, k=3)
                const(all(vals[c] == first[c] for c in COLUMNS), t, f"class {cls.vector}")
    yield const.result()


def suite_closure(max_n: int, seed: int) -> Iterator[CheckResult]:
    sub = _Check("closure-within-class")
    eq = _Check("closure-equals-class")
    for n in _orders(2, min(max_n, 10)):
        for cls in classify(n):
            members = set(cls.members)
            for t in cls.trees:
                closure = exchange_closure(t)
                sub(closure <= members, t, f"closure leaves class {cls.vector}")
                if n <= 9:
                    eq(closure == members, t, f"closure {len(closure)} of class {cls.size}")
    yield from (sub.result(), eq.result())


SUITE_FUNCS: dict[str, Callable[[int, int], Iterator[CheckResult]]] = {
    "counts": suite_counts,
    "edv": suite_edv,
    "order": suite_order,
    "exchange": suite_exchange,
    "families": suite_families,
    "indices": suite_indices,
    "closure": suite_closure,
}


def run_suite(name: str, max_n: int = 9, seed: int = 0) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, max_n, seed)]
    if name not in SUITE_FUNCS:
        raise InvalidArgumentError(f"unknown suite {name!r}")
    if max_n < 2:
        raise InvalidArgumentError("max-n must be at least 2")
    return [CheckResult(f"{name}/{r.name}", r.passed, r.checked, r.detail, r.counterexample) for r in SUITE_FUNCS[name](max_n, seed)]


def run_suites_parallel(names: list[str], max_n: int, seed: int, jobs: int) -> list[CheckResult]:
    """Run suites on ``jobs`` workers; results come back in suite order."""
    if jobs <= 1 or len(names) == 1:
        return [r for s in names for r in run_suite(s, max_n, seed)]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(jobs) as pool:
        parts = pool.map(run_suite, names, [max_n] * len(names), [seed] * len(names))
        return [r for part in parts for r in part]
