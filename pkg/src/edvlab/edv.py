"""Edge division vectors and the suffix-sum order on them."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import accumulate

from . import _kernels
from .errors import InvalidArgumentError, InvalidComparisonError, NoEdgesError
from .tree import Tree


class OrderRelation(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"

    def flipped(self) -> OrderRelation:
        if self is OrderRelation.LESS:
            return OrderRelation.GREATER
        if self is OrderRelation.GREATER:
            return OrderRelation.LESS
        return self

    @property
    def symbol(self) -> str:
        return {"Less": "<", "Greater": ">", "Equivalent": "=", "Incomparable": "||"}[self.value]


@dataclass(frozen=True, order=True)
class EdgeDivisionVector:
    """``r[i-1]`` counts the edges whose smaller side has ``i`` vertices.

    Always stored at full length ``n // 2``, trailing zeros included.
    """

    n: int
    r: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidArgumentError("edge division vectors need n >= 2")
        if len(self.r) != self.n // 2:
            raise InvalidArgumentError(f"vector for n={self.n} must have length {self.n // 2}, got {len(self.r)}")
        if any(x < 0 for x in self.r):
            raise InvalidArgumentError("entries must be non-negative")

    @classmethod
    def of(cls, n: int, r: Sequence[int]) -> EdgeDivisionVector:
        """Build from a possibly short vector, padding with zeros."""
        r = list(r)
        if len(r) > n // 2:
            if any(r[n // 2:]):
                raise InvalidArgumentError(f"entries beyond position {n // 2} must be zero")
            r = r[: n // 2]
        return cls(n, tuple(r + [0] * (n // 2 - len(r))))

    def __getitem__(self, i: int) -> int:
        """1-indexed access: ``vec[i]`` is ``r_i``."""
        if not 1 <= i <= len(self.r):
            raise IndexError(i)
        return self.r[i - 1]

    def __len__(self) -> int:
        return len(self.r)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.r)) + ")"

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> EdgeDivisionVector:
        """Parse ``(4,1,1)``; ``n`` defaults to ``sum + 1``."""
        body = text.strip().strip("()")
        r = [int(x) for x in body.split(",") if x.strip()]
        return cls.of(sum(r) + 1 if n is None else n, r)


def edv(t: Tree) -> EdgeDivisionVector:
    if t.n < 2:
        raise NoEdgesError("edge division vector needs at least one edge")
    return EdgeDivisionVector(t.n, tuple(_kernels.edv_counts(t.preorder_parents)))


def suffix_sums(a: EdgeDivisionVector) -> tuple[int, ...]:
    """``S(k) = r_k + ... + r_{n//2}`` for ``k = 1..n//2``."""
    return tuple(accumulate(reversed(a.r)))[::-1]


def compare(a: EdgeDivisionVector, b: EdgeDivisionVector) -> OrderRelation:
    """Relation of ``a`` to ``b`` under the suffix-sum order."""
    if a.n != b.n:
        raise InvalidComparisonError(f"cannot compare vectors of orders {a.n} and {b.n}")
    if a.r == b.r:
        return OrderRelation.EQUIVALENT
    le = ge = True
    for x, y in zip(suffix_sums(a), suffix_sums(b)):
        if x < y:
            ge = False
        elif x > y:
            le = False
    if le:
        return OrderRelation.LESS
    if ge:
        return OrderRelation.GREATER
    return OrderRelation.INCOMPARABLE


def compare_trees(t1: Tree, t2: Tree) -> OrderRelation:
    return compare(edv(t1), edv(t2))
