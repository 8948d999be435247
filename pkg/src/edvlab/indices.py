"""Edge-additive eccentric topological indices.

An index of this kind is ``F(T) = sum_e f(mu(e)) = sum_i r_i f(i)`` for an
edge contribution function ``f``; on trees it therefore depends on the
edge division vector only.  The distance-based oracles at the bottom of the
module compute the same quantities from all-pairs distances instead.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import _kernels
from .edv import EdgeDivisionVector, edv
from .errors import InvalidArgumentError
from .tree import Tree

Exact = int | Fraction

INDEX_NAMES = (
    "wiener",
    "modified_wiener",
    "variable_wiener",
    "steiner_wiener",
    "hyper_wiener",
    "wiener_hosoya",
    "degree_distance",
    "gutman",
    "abc2",
)

# CSV/table column order
COLUMNS = ("W", "mW", "vW", "SWk", "WW", "h", "DD", "Gut", "ABC2")
COLUMN_OF = dict(zip(INDEX_NAMES, COLUMNS))

REL_TOL = 1e-9


@dataclass(frozen=True)
class IndexSpec:
    name: str
    lam: int | Fraction | float | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.name not in INDEX_NAMES:
            raise InvalidArgumentError(f"unknown index {self.name!r}")
        if self.name in ("modified_wiener", "variable_wiener"):
            if self.lam is None:
                object.__setattr__(self, "lam", 1)
            if isinstance(self.lam, Fraction) and self.lam.denominator == 1:
                object.__setattr__(self, "lam", int(self.lam))
            if isinstance(self.lam, float):
                if not math.isfinite(self.lam):
                    raise InvalidArgumentError("lambda must be finite")
                if self.lam.is_integer():
                    object.__setattr__(self, "lam", int(self.lam))
        elif self.lam is not None:
            raise InvalidArgumentError(f"{self.name} takes no lambda")
        if self.name == "steiner_wiener":
            if self.k is None:
                object.__setattr__(self, "k", 3)
            if not isinstance(self.k, int) or self.k < 2:
                raise InvalidArgumentError("Steiner k must be an integer >= 2")
        elif self.k is not None:
            raise InvalidArgumentError(f"{self.name} takes no k")

    @property
    def is_exact(self) -> bool:
        if self.name == "abc2":
            return False
        if self.name in ("modified_wiener", "variable_wiener"):
            return isinstance(self.lam, int)
        return True

    def validate_for(self, n: int) -> None:
        if self.name == "steiner_wiener" and self.k > n:
            raise InvalidArgumentError(f"Steiner k={self.k} exceeds n={n}")

    def contribution(self, n: int) -> Callable[[int], Exact | float]:
        """The edge contribution function ``f(x)`` for trees of order ``n``."""
        self.validate_for(n)
        return _contribution(self, n)


@dataclass(frozen=True)
class IndexValue:
    """Exact value when the index is integer/rational valued, plus a float."""

    real: float
    exact: Exact | None = field(default=None)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IndexValue):
            if self.exact is not None and other.exact is not None:
                return self.exact == other.exact
            return math.isclose(self.real, other.real, rel_tol=REL_TOL, abs_tol=REL_TOL)
        if isinstance(other, (int, Fraction)) and self.exact is not None:
            return self.exact == other
        if isinstance(other, (int, float, Fraction)):
            return math.isclose(self.real, float(other), rel_tol=REL_TOL, abs_tol=REL_TOL)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.exact if self.exact is not None else round(self.real, 9))

    def render(self) -> str:
        if self.exact is None:
            return repr(self.real)
        if isinstance(self.exact, Fraction) and self.exact.denominator != 1:
            return f"{self.exact.numerator}/{self.exact.denominator}"
        return str(int(self.exact))

    def to_json(self) -> int | str | float:
        if self.exact is None:
            return self.real
        if isinstance(self.exact, Fraction) and self.exact.denominator != 1:
            return self.render()
        return int(self.exact)


def _power(base: int, lam) -> Exact | float:
    if isinstance(lam, int):
        return base**lam if lam >= 0 else Fraction(1, base ** (-lam))
    return float(base) ** float(lam)


def _contribution(spec: IndexSpec, n: int) -> Callable[[int], Exact | float]:
    name = spec.name
    if name == "wiener":
        return lambda x: x * (n - x)
    if name == "modified_wiener":
        return lambda x: _power(x * (n - x), spec.lam)
    if name == "variable_wiener":
        return lambda x: _power(n, spec.lam) - _power(x, spec.lam) - _power(n - x, spec.lam)
    if name == "steiner_wiener":
        k = spec.k
        return lambda x: comb(n, k) - comb(x, k) - comb(n - x, k)
    if name == "hyper_wiener":
        return lambda x: Fraction(x * (n - x) + (x * (n - x)) ** 2, 2)
    if name == "wiener_hosoya":
        return lambda x: x * (n - x) + (x - 1) * (n - x - 1)
    if name == "degree_distance":
        return lambda x: 4 * x * (n - x) - n
    if name == "gutman":
        return lambda x: 4 * x * (n - x) - (2 * n - 1)
    if name == "abc2":
        return lambda x: math.sqrt(n - 2) / math.sqrt(x * (n - x))
    raise InvalidArgumentError(name)  # pragma: no cover


def _normalize(total: Exact | float) -> Exact | float:
    if isinstance(total, Fraction) and total.denominator == 1:
        return int(total)
    return total


def index_from_edv(r: EdgeDivisionVector, spec: IndexSpec) -> IndexValue:
    """``sum_i r_i f(i)``."""
    f = spec.contribution(r.n)
    if spec.is_exact:
        total = sum((ri * f(i) for i, ri in enumerate(r.r, start=1)), start=0)
        total = _normalize(total)
        return IndexValue(float(total), total)
    total = math.fsum(ri * float(f(i)) for i, ri in enumerate(r.r, start=1))
    return IndexValue(total, None)


def index(t: Tree, spec: IndexSpec) -> IndexValue:
    return index_from_edv(edv(t), spec)


def default_specs(lam=1, k: int = 3) -> list[IndexSpec]:
    out = []
    for name in INDEX_NAMES:
        if name in ("modified_wiener", "variable_wiener"):
            out.append(IndexSpec(name, lam=lam))
        elif name == "steiner_wiener":
            out.append(IndexSpec(name, k=k))
        else:
            out.append(IndexSpec(name))
    return out


def all_indices(t: Tree | EdgeDivisionVector, lam=1, k: int = 3) -> dict[str, IndexValue]:
    """Every index keyed by its column name (``W``, ``mW``, ...).

    A Steiner ``k`` larger than the order has no ``k``-subsets to span and
    is reported as exactly 0.
    """
    r = t if isinstance(t, EdgeDivisionVector) else edv(t)
    out = {}
    for spec in default_specs(lam, k):
        if spec.name == "steiner_wiener" and spec.k > r.n:
            out[COLUMN_OF[spec.name]] = IndexValue(0.0, 0)
        else:
            out[COLUMN_OF[spec.name]] = index_from_edv(r, spec)
    return out


# ---------------------------------------------------------------------------
# Steiner k-Wiener: both edge forms


def steiner_wiener(r: EdgeDivisionVector, k: int) -> int:
    """Steiner k-Wiener from the contribution form; checked against the split form."""
    contribution, split = steiner_wiener_forms(r, k)
    if contribution != split:  # pragma: no cover - Vandermonde identity
        raise ArithmeticError(f"Steiner forms disagree: {contribution} != {split}")
    return contribution


def steiner_wiener_forms(r: EdgeDivisionVector, k: int) -> tuple[int, int]:
    """``(sum r_x [C(n,k)-C(x,k)-C(n-x,k)], sum r_x sum_i C(x,i) C(n-x,k-i))``."""
    n = r.n
    if not isinstance(k, int) or not 2 <= k <= n:
        raise InvalidArgumentError(f"Steiner k must satisfy 2 <= k <= n={n}, got {k}")
    contribution = split = 0
    for x, rx in enumerate(r.r, start=1):
        contribution += rx * (comb(n, k) - comb(x, k) - comb(n - x, k))
        split += rx * sum(comb(x, i) * comb(n - x, k - i) for i in range(1, k))
    return contribution, split


# ---------------------------------------------------------------------------
# distance-based oracles


def wiener_distance_oracle(t: Tree) -> int:
    return _kernels.distance_sums(*t.csr)[0]


def degree_distance_oracle(t: Tree) -> int:
    """``sum_{u<v} (deg u + deg v) d(u, v)``."""
    return _kernels.distance_sums(*t.csr)[1]


def gutman_oracle(t: Tree) -> int:
    """``sum_{u<v} deg u * deg v * d(u, v)``."""
    return _kernels.distance_sums(*t.csr)[2]


def classical_hyper_wiener(t: Tree) -> Fraction:
    """``(sum d + sum d^2) / 2``; differs from the edge form used above."""
    total = Fraction(0)
    for u in range(t.n):
        dist = t.distances_from(u)
        total += sum(Fraction(d + d * d, 2) for d in dist[u + 1:])
    return total


# ---------------------------------------------------------------------------
# equal-vector => equal-index check


@dataclass(frozen=True)
class EqualIndexReport:
    vectors_equal: bool
    equal: dict[str, bool]

    @property
    def holds(self) -> bool:
        """Equal vectors must give equal values for every index."""
        return not self.vectors_equal or all(self.equal.values())

    def __bool__(self) -> bool:
        return self.holds


def verify_theorem_equal_indices(t1: Tree, t2: Tree, lam=1, k: int = 3) -> EqualIndexReport:
    if t1.n != t2.n:
        raise InvalidArgumentError("trees must have the same order")
    a, b = all_indices(t1, lam, k), all_indices(t2, lam, k)
    return EqualIndexReport(edv(t1) == edv(t2), {c: a[c] == b[c] for c in COLUMNS})
