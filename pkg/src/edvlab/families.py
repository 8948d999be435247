"""Named tree families: constructors, recognizers, closed-form vectors.

Recognizers read structure (branching vertices, legs, leaf layers) and
never rely on labels, so any relabelling of a family member is recognized.
:func:`predict_dedv` gathers the verdict of every family theorem that
applies to a tree and insists they agree.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .canon import is_isomorphic
from .edv import EdgeDivisionVector, edv
from .errors import InternalConsistencyError, InvalidArgumentError
from .tree import Tree


def _positive(name: str, value: int, least: int = 1) -> None:
    if not isinstance(value, int) or value < least:
        raise InvalidArgumentError(f"{name} must be an integer >= {least}, got {value!r}")


# ---------------------------------------------------------------------------
# starlike trees


@dataclass(frozen=True)
class StarlikeSpec:
    """Leg lengths (in vertices) of a starlike tree, kept sorted."""

    legs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.legs:
            raise InvalidArgumentError("a starlike tree needs at least one leg")
        for length in self.legs:
            _positive("leg length", length)
        object.__setattr__(self, "legs", tuple(sorted(self.legs)))

    @property
    def k(self) -> int:
        return len(self.legs)

    @property
    def n(self) -> int:
        return 1 + sum(self.legs)


def _hang_legs(edges: list[tuple[int, int]], start: int, root: int, legs: Sequence[int]) -> int:
    """Append legs at ``root`` using labels from ``start``; returns next free label."""
    nxt = start
    for length in legs:
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt


def make_starlike(spec: StarlikeSpec) -> Tree:
    """Centre 0, legs laid out one after another."""
    edges: list[tuple[int, int]] = []
    _hang_legs(edges, 1, 0, spec.legs)
    return Tree.from_edges(spec.n, edges)


def starlike_edv(spec: StarlikeSpec) -> EdgeDivisionVector:
    """``r_i`` is the number of legs of length at least ``i``.

    Valid when every leg fits in the smaller half, i.e. ``l_k <= n // 2``;
    otherwise the vector is computed from the tree directly.
    """
    n = spec.n
    if n < 2:
        raise InvalidArgumentError("starlike tree of order 1 has no edges")
    if spec.legs[-1] > n // 2:
        return edv(make_starlike(spec))
    return EdgeDivisionVector.of(n, [sum(1 for l in spec.legs if l >= i) for i in range(1, spec.legs[-1] + 1)])


def is_weak_balanced(spec: StarlikeSpec) -> bool:
    if spec.k == 1:
        return True
    return spec.legs[0] + spec.legs[1] >= spec.legs[-1]


def is_balanced(spec: StarlikeSpec) -> bool:
    return spec.legs[-1] - spec.legs[0] <= 1


# ---------------------------------------------------------------------------
# double stars and power stars


def make_double_star(p: int, q: int) -> Tree:
    """``S_{p,q}``: centres 0 and 1 with ``p - 1`` and ``q - 1`` pendants."""
    _positive("p", p, 2)
    _positive("q", q, 2)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p - 1)]
    edges += [(1, 1 + p + i) for i in range(q - 1)]
    return Tree.from_edges(p + q, edges)


def double_star_edv(p: int, q: int) -> EdgeDivisionVector:
    _positive("p", p, 2)
    _positive("q", q, 2)
    n = p + q
    r = [0] * (n // 2)
    r[0] = n - 2
    r[min(p, q) - 1] += 1
    return EdgeDivisionVector(n, tuple(r))


def make_power_star(p: int, t: int) -> Tree:
    """``S_p^t``: ``t`` copies of ``S_p`` whose centres join vertex 0."""
    _positive("p", p, 2)
    _positive("t", t, 2)
    edges = []
    nxt = t + 1
    for c in range(1, t + 1):
        edges.append((0, c))
        for _ in range(p - 1):
            edges.append((c, nxt))
            nxt += 1
    return Tree.from_edges(p * t + 1, edges)


def power_star_edv(p: int, t: int) -> EdgeDivisionVector:
    _positive("p", p, 2)
    _positive("t", t, 2)
    n = p * t + 1
    r = [0] * (n // 2)
    r[0] += t * (p - 1)
    r[p - 1] += t
    return EdgeDivisionVector(n, tuple(r))


# ---------------------------------------------------------------------------
# trees with two branching vertices


@dataclass(frozen=True)
class DoubleStarlikeSpec:
    """``DT_{s,k1,k2}``: ``k1`` and ``k2`` legs of length ``s`` at the ends of a ``k``-edge path."""

    s: int
    k1: int
    k2: int
    k: int = 1

    def __post_init__(self) -> None:
        _positive("s", self.s)
        _positive("k1", self.k1, 2)
        _positive("k2", self.k2, 2)
        _positive("k", self.k)

    @property
    def n(self) -> int:
        return self.s * (self.k1 + self.k2) + self.k + 1


def _two_centres(k: int, legs_u: Sequence[int], legs_v: Sequence[int]) -> Tree:
    # u = 0, v = k, path 0..k
    edges = [(i, i + 1) for i in range(k)]
    nxt = _hang_legs(edges, k + 1, 0, legs_u)
    nxt = _hang_legs(edges, nxt, k, legs_v)
    return Tree.from_edges(nxt, edges)


def make_double_starlike(spec: DoubleStarlikeSpec) -> Tree:
    return _two_centres(spec.k, [spec.s] * spec.k1, [spec.s] * spec.k2)


def make_double_broom(k: int, k1: int, k2: int) -> Tree:
    return make_double_starlike(DoubleStarlikeSpec(1, k1, k2, k))


def make_two_spider(s1: int, s2: int, k: int, t1: int, t2: int) -> Tree:
    """Legs ``s1, s2`` at one end and ``t1, t2`` at the other of a ``k``-edge path."""
    for name, value in (("s1", s1), ("s2", s2), ("k", k), ("t1", t1), ("t2", t2)):
        _positive(name, value)
    return _two_centres(k, [s1, s2], [t1, t2])


def check_two_spider_dedv(s1: int, s2: int, k: int, t1: int, t2: int) -> bool:
    for name, value in (("s1", s1), ("s2", s2), ("k", k), ("t1", t1), ("t2", t2)):
        _positive(name, value)
    if s1 > s2 or t1 > t2:
        raise InvalidArgumentError("legs must be given sorted: s1 <= s2 and t1 <= t2")
    a = s1 + s2
    if a > t1 + t2:
        raise InvalidArgumentError("the lighter pair must come first: s1 + s2 <= t1 + t2")
    return (
        a == t1 + t2
        or a > t2
        or (a + k == t2 and a > t1)
        or (a + k == t2 == t1)
    )


# ---------------------------------------------------------------------------
# rooted product with a path, corona with isolated vertices


def rooted_product_path(t: Tree, s: int) -> Tree:
    """Hang a path on ``s - 1`` new vertices at every vertex of ``t``."""
    _positive("s", s)
    edges = list(t.edges)
    nxt = t.n
    for v in range(t.n):
        nxt = _hang_legs(edges, nxt, v, [s - 1] if s > 1 else [])
    return Tree.from_edges(t.n * s, edges)


def corona_k1(t: Tree, s: int) -> Tree:
    """Attach ``s`` new leaves to every vertex of ``t``."""
    _positive("s", s)
    edges = list(t.edges)
    nxt = t.n
    for v in range(t.n):
        nxt = _hang_legs(edges, nxt, v, [1] * s)
    return Tree.from_edges(t.n * (s + 1), edges)


def rooted_product_edv(r: EdgeDivisionVector, s: int) -> EdgeDivisionVector:
    _positive("s", s)
    n = r.n
    out = [0] * (n * s // 2)
    for i in range(1, s):
        out[i - 1] = n
    for k, rk in enumerate(r.r, start=1):
        out[k * s - 1] += rk
    return EdgeDivisionVector(n * s, tuple(out))


def corona_edv(r: EdgeDivisionVector, s: int) -> EdgeDivisionVector:
    _positive("s", s)
    n = r.n
    out = [0] * (n * (s + 1) // 2)
    out[0] = n * s
    for k, rk in enumerate(r.r, start=1):
        out[k * (s + 1) - 1] += rk
    return EdgeDivisionVector(n * (s + 1), tuple(out))


# ---------------------------------------------------------------------------
# structural recognition


def _walk(t: Tree, start: int, first: int) -> tuple[int, int]:
    """Follow degree-2 vertices from ``start`` through ``first``.

    Returns the vertex where the walk stops (a leaf or a branching vertex)
    and the number of vertices visited after ``start``.
    """
    prev, cur, count = start, first, 1
    while t.degree(cur) == 2:
        nxt = t.adjacency[cur][0] if t.adjacency[cur][0] != prev else t.adjacency[cur][1]
        prev, cur = cur, nxt
        count += 1
    return cur, count


def recognize_starlike(t: Tree) -> StarlikeSpec | None:
    """Legs of ``t`` if it has exactly one branching vertex."""
    branching = t.branching_vertices()
    if len(branching) != 1:
        return None
    c = branching[0]
    return StarlikeSpec(tuple(_walk(t, c, x)[1] for x in t.adjacency[c]))


@dataclass(frozen=True)
class TwoCentreShape:
    """A tree whose two branching vertices carry only pendant legs."""

    legs_u: tuple[int, ...]
    legs_v: tuple[int, ...]
    k: int


def recognize_two_centres(t: Tree) -> TwoCentreShape | None:
    branching = t.branching_vertices()
    if len(branching) != 2:
        return None
    u, v = branching
    legs: dict[int, list[int]] = {u: [], v: []}
    k = 0
    for root in (u, v):
        for x in t.adjacency[root]:
            end, count = _walk(t, root, x)
            if t.degree(end) == 1:
                legs[root].append(count)
            else:
                k = count
    return TwoCentreShape(tuple(sorted(legs[u])), tuple(sorted(legs[v])), k)


def recognize_double_starlike(t: Tree) -> DoubleStarlikeSpec | None:
    shape = recognize_two_centres(t)
    if shape is None:
        return None
    lengths = set(shape.legs_u) | set(shape.legs_v)
    if len(lengths) != 1:
        return None
    k1, k2 = sorted((len(shape.legs_u), len(shape.legs_v)))
    return DoubleStarlikeSpec(lengths.pop(), k1, k2, shape.k)


def recognize_two_spider(t: Tree) -> tuple[int, int, int, int, int] | None:
    """``(s1, s2, k, t1, t2)`` with the lighter leg pair first."""
    shape = recognize_two_centres(t)
    if shape is None or len(shape.legs_u) != 2 or len(shape.legs_v) != 2:
        return None
    a, b = shape.legs_u, shape.legs_v
    if sum(a) > sum(b):
        a, b = b, a
    return a[0], a[1], shape.k, b[0], b[1]


def _induced(t: Tree, keep: list[int]) -> Tree:
    local = {w: i for i, w in enumerate(keep)}
    return Tree.from_edges(len(keep), [(local[a], local[b]) for a, b in t.edges if a in local and b in local])


def _strip_leaves(t: Tree, rounds: int) -> list[int]:
    alive = set(range(t.n))
    degree = [t.degree(v) for v in range(t.n)]
    for _ in range(rounds):
        layer = [v for v in alive if degree[v] <= 1]
        for v in layer:
            alive.discard(v)
            for w in t.adjacency[v]:
                if w in alive:
                    degree[w] -= 1
    return sorted(alive)


def recognize_rooted_product(t: Tree) -> tuple[Tree, int] | None:
    """``(seed, s)`` with ``s >= 2`` and seed order >= 2, if ``t`` is such a product."""
    leaves = len(t.leaves())
    if leaves < 2 or t.n % leaves:
        return None
    s = t.n // leaves
    if s < 2:
        return None
    seed = _induced(t, _strip_leaves(t, s - 1))
    if seed.n != leaves or not is_isomorphic(rooted_product_path(seed, s), t):
        return None
    return seed, s


def recognize_corona(t: Tree) -> tuple[Tree, int] | None:
    """``(seed, s)`` with seed order >= 2, if ``t`` is a corona with ``s`` leaves per vertex."""
    m = t.n - len(t.leaves())
    if m < 2 or t.n % m:
        return None
    s = t.n // m - 1
    if s < 1:
        return None
    seed = _induced(t, _strip_leaves(t, 1))
    if seed.n != m or not is_isomorphic(corona_k1(seed, s), t):
        return None
    return seed, s


# ---------------------------------------------------------------------------
# DEDV prediction from family theorems


@dataclass(frozen=True)
class Prediction:
    """``verdict`` is None when no family theorem applies."""

    verdict: bool | None
    rule: str | None
    rules: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "rule": self.rule, "rules": list(self.rules)}


def _rule_small(t: Tree) -> bool | None:
    return True if t.n < 7 else None


def _rule_path(t: Tree) -> bool | None:
    return True if not t.branching_vertices() else None


def _rule_star(t: Tree) -> bool | None:
    return True if t.n >= 3 and max(t.degree(v) for v in range(t.n)) == t.n - 1 else None


def _diameter(t: Tree) -> int:
    far = max(range(t.n), key=t.distances_from(0).__getitem__)
    return max(t.distances_from(far))


def _rule_double_star(t: Tree) -> bool | None:
    return True if t.n >= 4 and _diameter(t) == 3 else None


def _rule_power_star(t: Tree) -> bool | None:
    # only with p < n // 2, which for n = pt + 1 means t >= 3
    for c in range(t.n):
        t_ = t.degree(c)
        if t_ < 3:
            continue
        nbrs = t.adjacency[c]
        p = t.degree(nbrs[0])
        if p < 2 or p * t_ + 1 != t.n:
            continue
        if all(t.degree(x) == p and all(w == c or t.degree(w) == 1 for w in t.adjacency[x]) for x in nbrs):
            return True
    return None


def _rule_starlike_three(t: Tree) -> bool | None:
    spec = recognize_starlike(t)
    return True if spec is not None and spec.k == 3 else None


def _rule_balanced_starlike(t: Tree) -> bool | None:
    spec = recognize_starlike(t)
    return True if spec is not None and is_balanced(spec) else None


def _rule_weak_balanced(t: Tree) -> bool | None:
    spec = recognize_starlike(t)
    if spec is None or spec.k < 4:
        return None
    return is_weak_balanced(spec)


def _rule_double_starlike(t: Tree) -> bool | None:
    spec = recognize_double_starlike(t)
    return True if spec is not None and abs(spec.k1 - spec.k2) <= 1 else None


def _rule_two_spider(t: Tree) -> bool | None:
    params = recognize_two_spider(t)
    return None if params is None else check_two_spider_dedv(*params)


def _rule_rooted_product(t: Tree) -> bool | None:
    found = recognize_rooted_product(t)
    if found is None:
        return None
    return True if predict_dedv(found[0]).verdict is True else None


def _rule_corona(t: Tree) -> bool | None:
    found = recognize_corona(t)
    if found is None:
        return None
    return True if predict_dedv(found[0]).verdict is True else None


RULES: tuple[tuple[str, Callable[[Tree], bool | None]], ...] = (
    ("order<7", _rule_small),
    ("path", _rule_path),
    ("star", _rule_star),
    ("double-star", _rule_double_star),
    ("power-star", _rule_power_star),
    ("starlike-3", _rule_starlike_three),
    ("balanced-starlike", _rule_balanced_starlike),
    ("weak-balanced-starlike", _rule_weak_balanced),
    ("double-starlike", _rule_double_starlike),
    ("two-spider", _rule_two_spider),
    ("rooted-product", _rule_rooted_product),
    ("corona", _rule_corona),
)


def predict_dedv(t: Tree) -> Prediction:
    """Verdict of the first applicable family rule; all applicable rules must agree."""
    if t.n < 2:
        return Prediction(True, "order<7", ("order<7",))
    verdicts = [(name, v) for name, rule in RULES if (v := rule(t)) is not None]
    if not verdicts:
        return Prediction(None, None)
    if len({v for _, v in verdicts}) > 1:
        detail = ", ".join(f"{name}={v}" for name, v in verdicts)
        raise InternalConsistencyError(f"family rules disagree on\n{t.to_text()}{detail}")
    return Prediction(verdicts[0][1], verdicts[0][0], tuple(name for name, _ in verdicts))
