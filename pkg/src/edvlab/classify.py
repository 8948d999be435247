"""Exhaustive classification of the trees of one order by edge division vector."""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from decimal import ROUND_DOWN, ROUND_HALF_UP, Decimal
from fractions import Fraction
from functools import lru_cache

from .canon import CanonicalCode, canonical_code
from .edv import EdgeDivisionVector, edv
from .enumerate import all_trees
from .errors import InvalidArgumentError
from .transforms import exchange_closure
from .tree import Tree

ROUNDING_MODES = {"half-up": ROUND_HALF_UP, "truncate": ROUND_DOWN}


@dataclass(frozen=True)
class EDVClass:
    vector: EdgeDivisionVector
    members: tuple[CanonicalCode, ...]
    trees: tuple[Tree, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_singleton(self) -> bool:
        return len(self.members) == 1

    def to_json(self) -> dict:
        return {"vector": str(self.vector), "size": self.size, "members": [c.hex() for c in self.members]}


def _key(t: Tree) -> tuple[EdgeDivisionVector, CanonicalCode, Tree]:
    return edv(t), canonical_code(t), t


def _keys(trees: list[Tree]) -> list[tuple[EdgeDivisionVector, CanonicalCode, Tree]]:
    return [_key(t) for t in trees]


def classify(n: int, jobs: int = 1) -> list[EDVClass]:
    """All EDV classes of order ``n``, ordered by vector; members by code."""
    if not isinstance(n, int) or n < 2:
        raise InvalidArgumentError(f"classification needs n >= 2, got {n!r}")
    trees = list(all_trees(n))
    if jobs > 1 and len(trees) > jobs:
        chunks = [trees[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            keyed = [k for part in pool.map(_keys, chunks) for k in part]
    else:
        keyed = _keys(trees)
    buckets: dict[EdgeDivisionVector, list[tuple[CanonicalCode, Tree]]] = defaultdict(list)
    for vec, code, t in keyed:
        buckets[vec].append((code, t))
    out = []
    for vec in sorted(buckets, key=lambda v: v.r):
        members = sorted(buckets[vec], key=lambda ct: ct[0])
        out.append(EDVClass(vec, tuple(c for c, _ in members), tuple(t for _, t in members)))
    return out


def render_fraction(x: Fraction, mode: str = "half-up") -> str:
    """Exact 0 and 1 print bare; anything else to four decimals."""
    if mode not in ROUNDING_MODES:
        raise InvalidArgumentError(f"unknown rounding mode {mode!r}")
    if x.denominator == 1:
        return str(x.numerator)
    value = Decimal(x.numerator) / Decimal(x.denominator)
    return str(value.quantize(Decimal("0.0001"), rounding=ROUNDING_MODES[mode]))


@dataclass(frozen=True)
class Census:
    n: int
    total_trees: int
    dedv_count: int
    equivalent_tree_count: int
    class_count_nontrivial: int

    @property
    def dedv_fraction(self) -> Fraction:
        return Fraction(self.dedv_count, self.total_trees)

    @property
    def equivalent_fraction(self) -> Fraction:
        return Fraction(self.equivalent_tree_count, self.total_trees)

    def row(self, mode: str = "half-up") -> tuple[str, ...]:
        return (
            str(self.n),
            str(self.total_trees),
            str(self.dedv_count),
            str(self.equivalent_tree_count),
            render_fraction(self.dedv_fraction, mode),
            render_fraction(self.equivalent_fraction, mode),
        )

    def to_json(self, mode: str = "half-up") -> dict:
        return {
            "n": self.n,
            "trees": self.total_trees,
            "dedv": self.dedv_count,
            "equivalent": self.equivalent_tree_count,
            "classes": self.class_count_nontrivial,
            "dedv_fraction": render_fraction(self.dedv_fraction, mode),
            "equivalent_fraction": render_fraction(self.equivalent_fraction, mode),
            "dedv_fraction_exact": str(self.dedv_fraction),
            "equivalent_fraction_exact": str(self.equivalent_fraction),
        }


def census_of(n: int, classes: list[EDVClass]) -> Census:
    total = sum(c.size for c in classes)
    dedv_count = sum(1 for c in classes if c.is_singleton)
    nontrivial = [c for c in classes if not c.is_singleton]
    return Census(n, total, dedv_count, total - dedv_count, len(nontrivial))


def census(n: int, jobs: int = 1) -> Census:
    return census_of(n, classify(n, jobs))


@lru_cache(maxsize=None)
def _class_sizes(n: int) -> dict[EdgeDivisionVector, int]:
    return {c.vector: c.size for c in classify(n)}


def is_dedv(t: Tree) -> bool:
    """True if no other tree of the same order shares ``t``'s vector."""
    if t.n < 2:
        return True
    return _class_sizes(t.n)[edv(t)] == 1


# ---------------------------------------------------------------------------
# closure versus class


@dataclass(frozen=True)
class ClosureEntry:
    vector: EdgeDivisionVector
    class_size: int
    closure_sizes: tuple[int, ...]

    @property
    def closed(self) -> bool:
        """Every member reaches the whole class by exchanges."""
        return all(size == self.class_size for size in self.closure_sizes)


@dataclass(frozen=True)
class Problem1Report:
    n: int
    entries: tuple[ClosureEntry, ...]
    counterexamples: tuple[Tree, ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "holds": self.holds,
            "classes": [
                {
                    "vector": str(e.vector),
                    "size": e.class_size,
                    "closure_sizes": list(e.closure_sizes),
                    "closed": e.closed,
                }
                for e in self.entries
            ],
            "counterexamples": [t.to_text() for t in self.counterexamples],
        }

    def render(self) -> str:
        lines = [f"n={self.n} classes={len(self.entries)} holds={'yes' if self.holds else 'no'}"]
        for e in self.entries:
            if e.class_size > 1 or not e.closed:
                status = "closed" if e.closed else "open"
                sizes = ",".join(map(str, e.closure_sizes))
                lines.append(f"{e.vector} size={e.class_size} closures={sizes} {status}")
        return "\n".join(lines) + "\n"


def problem1_report(n: int) -> Problem1Report:
    """Compare the exchange closure of every tree with its EDV class."""
    entries = []
    counterexamples = []
    for cls in classify(n):
        sizes = []
        members = set(cls.members)
        for t in cls.trees:
            closure = exchange_closure(t)
            sizes.append(len(closure))
            if closure != members:
                counterexamples.append(t)
        entries.append(ClosureEntry(cls.vector, cls.size, tuple(sizes)))
    return Problem1Report(n, tuple(entries), tuple(counterexamples))
