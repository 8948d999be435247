"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line naming its criterion
and then asserts.  Run as a script for the summary alone:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import json
import sys
import time
from pathlib import Path

import pytest

from edvlab.canon import canonical_code, is_isomorphic
from edvlab.classify import census, classify, is_dedv, problem1_report
from edvlab.edv import EdgeDivisionVector, compare, edv
from edvlab.enumerate import all_trees, count_trees, prufer_classes
from edvlab.families import (
    DoubleStarlikeSpec,
    StarlikeSpec,
    check_two_spider_dedv,
    corona_edv,
    corona_k1,
    is_weak_balanced,
    make_double_starlike,
    make_starlike,
    make_two_spider,
    rooted_product_edv,
    rooted_product_path,
)
from edvlab.indices import all_indices, steiner_wiener_forms
from edvlab.indices import degree_distance_oracle, gutman_oracle, wiener_distance_oracle
from edvlab.transforms import (
    all_balanced_pairs,
    branch_exchange,
    branch_move,
    exchange_certificate,
    exchange_closure,
    legal_moves,
    predict_branch_move,
)

REPORTS = Path(__file__).resolve().parent.parent / "reports"

# reference census rows: n, trees, DEDV, equivalent, DEDV fraction, equivalent fraction
CENSUS_ROWS = [
    ("2", "1", "1", "0", "1", "0"),
    ("3", "1", "1", "0", "1", "0"),
    ("4", "2", "2", "0", "1", "0"),
    ("5", "3", "3", "0", "1", "0"),
    ("6", "6", "6", "0", "1", "0"),
    ("7", "11", "9", "2", "0.8181", "0.1818"),
    ("8", "23", "17", "6", "0.7391", "0.2609"),
    ("9", "47", "22", "25", "0.4681", "0.5319"),
    ("10", "106", "47", "59", "0.4434", "0.5566"),
]

# reference index rows: n, vector, W, h, Gut
INDEX_ROWS = [
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
]

NINE_VECTORS = {
    (4, 1, 1, 2), (4, 1, 2, 1), (4, 2, 1, 1), (4, 2, 2, 0), (5, 1, 1, 1), (5, 1, 2, 0),
    (5, 2, 0, 1), (5, 2, 1, 0), (6, 1, 1, 0), (6, 1, 0, 1), (6, 0, 1, 1),
}


def _report(label: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
    print(line)
    sys.stdout.flush()


def _leg_tuples(total: int):
    def rec(remaining, least):
        if remaining == 0:
            yield ()
            return
        for first in range(least, remaining + 1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return list(rec(total, 1))


# ---------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    start = time.perf_counter()
    got = [count_trees(n) for n in range(2, 11)]
    elapsed = time.perf_counter() - start
    want = [1, 1, 2, 3, 6, 11, 23, 47, 106]
    ok = got == want and elapsed < 1.0
    return ok, f"counts n=2..10 {got}, {elapsed:.2f}s (< 1 s)"


def criterion_2() -> tuple[bool, str]:
    start = time.perf_counter()
    rows = [census(n).row() for n in range(2, 11)]
    elapsed = time.perf_counter() - start
    count_bad, frac_bad = [], []
    for got, want in zip(rows, CENSUS_ROWS):
        if got[:4] != want[:4]:
            count_bad.append(f"n={want[0]} {got[:4]} != {want[:4]}")
        for col, g, w in zip(("DEDV", "equivalent"), got[4:], want[4:]):
            if g != w:
                frac_bad.append(f"n={want[0]} {col} fraction {g} != {w}")
    ok = not count_bad and not frac_bad and elapsed < 5.0
    detail = f"counts {'match' if not count_bad else '; '.join(count_bad)}"
    detail += f"; fractions {'match' if not frac_bad else '; '.join(frac_bad)}; {elapsed:.2f}s (< 5 s)"
    return ok, detail


def criterion_3() -> tuple[bool, str]:
    problems = []

    def nontrivial(n):
        return {c.vector.r: c.size for c in classify(n) if not c.is_singleton}

    if nontrivial(7) != {(4, 1, 1): 2}:
        problems.append(f"n=7 {nontrivial(7)}")
    if nontrivial(8) != {(4, 1, 1, 1): 2, (4, 2, 1, 0): 2, (5, 1, 1, 0): 2}:
        problems.append(f"n=8 {nontrivial(8)}")
    nine = nontrivial(9)
    if set(nine) != NINE_VECTORS or nine.get((5, 1, 1, 1)) != 4:
        problems.append(f"n=9 {nine}")
    ten = nontrivial(10)
    if len(ten) != 25 or sum(ten.values()) != 59:
        problems.append(f"n=10 {len(ten)} classes covering {sum(ten.values())} trees (expected 25 covering 59)")
    return not problems, "n=7,8,9 match" if not problems else "; ".join(problems)


def criterion_4() -> tuple[bool, str]:
    bad = []
    for n, r, w, h, gut in INDEX_ROWS:
        vals = all_indices(EdgeDivisionVector.of(n, r))
        got = (vals["W"].exact, vals["h"].exact, vals["Gut"].exact)
        if got != (w, h, gut):
            bad.append(f"{r}: {got} != {(w, h, gut)}")
    return not bad, f"{len(INDEX_ROWS)} rows exact" if not bad else "; ".join(bad)


def criterion_5() -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    trees_checked = 0
    for n in range(2, 13):
        for t in all_trees(n):
            trees_checked += 1
            vals = all_indices(t)
            if vals["W"].exact != wiener_distance_oracle(t):
                bad.append(f"W n={n}")
            if n <= 10:
                if vals["DD"].exact != degree_distance_oracle(t):
                    bad.append(f"DD n={n}")
                if vals["Gut"].exact != gutman_oracle(t):
                    bad.append(f"Gut n={n}")
                r = edv(t)
                for k in range(2, n + 1):
                    a, b = steiner_wiener_forms(r, k)
                    if a != b:
                        bad.append(f"SW n={n} k={k}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60.0
    return ok, f"{trees_checked} trees, {len(bad)} mismatches, {elapsed:.1f}s (< 60 s)"


def criterion_6() -> tuple[bool, str]:
    exchanges = moves = certs = 0
    bad = []
    for n in range(2, 10):
        for t in all_trees(n):
            r = edv(t)
            for p in all_balanced_pairs(t):
                exchanges += 1
                out = branch_exchange(t, p)
                if edv(out) != r:
                    bad.append(f"exchange changed edv on n={n}")
                if exchange_certificate(t, p).proves_non_isomorphic:
                    certs += 1
                    if is_isomorphic(t, out):
                        bad.append(f"certificate false positive on n={n}")
            if n <= 8:
                for m in legal_moves(t):
                    moves += 1
                    if predict_branch_move(t, m) is not compare(r, edv(branch_move(t, m))):
                        bad.append(f"move prediction wrong on n={n}")
    detail = f"{exchanges} exchanges, {moves} moves, {certs} certificates; {len(bad)} failures"
    return not bad, detail


def criterion_7() -> tuple[bool, str]:
    bad = []
    counts = dict.fromkeys(("weak-balanced", "two-spider", "double-starlike", "formulas", "preservation"), 0)
    for n in range(5, 13):
        for legs in _leg_tuples(n - 1):
            if len(legs) >= 4:
                counts["weak-balanced"] += 1
                spec = StarlikeSpec(legs)
                if is_weak_balanced(spec) != is_dedv(make_starlike(spec)):
                    bad.append(f"weak-balanced {legs}")
    for s1, s2, t1, t2 in itertools.product(range(1, 9), repeat=4):
        if s1 > s2 or t1 > t2 or s1 + s2 > t1 + t2:
            continue
        for k in range(1, 9):
            if s1 + s2 + t1 + t2 + k + 1 > 11:
                continue
            counts["two-spider"] += 1
            if check_two_spider_dedv(s1, s2, k, t1, t2) != is_dedv(make_two_spider(s1, s2, k, t1, t2)):
                bad.append(f"two-spider {(s1, s2, k, t1, t2)}")
    for s, k, k1 in itertools.product(range(1, 6), range(1, 10), range(2, 6)):
        for k2 in (k1, k1 + 1):
            spec = DoubleStarlikeSpec(s, k1, k2, k)
            if spec.n <= 12:
                counts["double-starlike"] += 1
                if not is_dedv(make_double_starlike(spec)):
                    bad.append(f"double-starlike {spec}")
    for m in range(2, 8):
        for seed in all_trees(m):
            for s in range(1, 15):
                if m * s <= 14:
                    counts["formulas"] += 1
                    if rooted_product_edv(edv(seed), s) != edv(rooted_product_path(seed, s)):
                        bad.append(f"rooted-product formula m={m} s={s}")
                if m * (s + 1) <= 14:
                    counts["formulas"] += 1
                    if corona_edv(edv(seed), s) != edv(corona_k1(seed, s)):
                        bad.append(f"corona formula m={m} s={s}")
    for m in range(2, 5):
        for seed in all_trees(m):
            if not is_dedv(seed):
                continue
            for s in range(1, 13):
                if m * s <= 12:
                    counts["preservation"] += 1
                    if not is_dedv(rooted_product_path(seed, s)):
                        bad.append(f"rooted product not DEDV m={m} s={s}")
                if m * (s + 1) <= 12:
                    counts["preservation"] += 1
                    if not is_dedv(corona_k1(seed, s)):
                        bad.append(f"corona not DEDV m={m} s={s}")
    summary = ", ".join(f"{k} {v}" for k, v in counts.items())
    return not bad, f"{summary}; {len(bad)} failures" + (f" ({'; '.join(bad[:3])})" if bad else "")


def criterion_8() -> tuple[bool, str]:
    problems = []
    for n in (7, 8, 9):
        for c in classify(n):
            members = set(c.members)
            for t in c.trees:
                if exchange_closure(t) != members:
                    problems.append(f"n={n} {c.vector}")
                    break
    report = problem1_report(10)
    REPORTS.mkdir(exist_ok=True)
    (REPORTS / "problem1_n10.json").write_text(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n")
    (REPORTS / "problem1_n10.txt").write_text(report.render())
    detail = "n=7,8,9 closures equal classes" if not problems else "; ".join(problems)
    detail += f"; n=10 report archived (closure = class: {'yes' if report.holds else 'no'})"
    return not problems, detail


def criterion_9() -> tuple[bool, str]:
    bad = []
    for n in range(1, 10):
        # full n^(n-2) sweep up to 7; above that the internal-vertices-first sweep
        got = prufer_classes(n, internal_first=n > 7)
        if got != {canonical_code(t) for t in all_trees(n)}:
            bad.append(str(n))
    return not bad, "set-equal for n=1..9" if not bad else f"mismatch at n={','.join(bad)}"


CRITERIA = [
    ("1 tree counts", criterion_1),
    ("2 census table", criterion_2),
    ("3 class structure", criterion_3),
    ("4 index table", criterion_4),
    ("5 oracle equivalences", criterion_5),
    ("6 transformation laws", criterion_6),
    ("7 family theorems", criterion_7),
    ("8 closure vs class", criterion_8),
    ("9 enumeration oracle", criterion_9),
]


@pytest.mark.parametrize("label,check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(label, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print()
        _report(f"criterion {label}", ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for label, check in CRITERIA:
        ok, detail = check()
        _report(f"criterion {label}", ok, detail)
        failures += not ok
    sys.exit(1 if failures else 0)
