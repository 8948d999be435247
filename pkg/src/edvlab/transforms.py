"""Branch-moving and branch-exchange transformations.

A branch-exchange takes two vertices ``u`` and ``v``, a set ``S_u`` of
neighbours of ``u`` off the ``u``-``v`` path and a set ``S_v`` of neighbours
of ``v`` off that path whose hanging branches have equal total order, and
swaps the two groups of branches.  It never changes the edge division
vector; :func:`exchange_certificate` decides when it provably changes the
isomorphism class.
"""

from __future__ import annotations

from collections import defaultdict, deque
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .canon import CanonicalCode, are_similar, branch_code, canonical_code
from .edv import OrderRelation, compare, edv
from .errors import (
    ClosureOverflowError,
    InvalidArgumentError,
    InvalidMoveError,
    InvalidPairError,
    PreconditionError,
)
from .tree import Edge, RootedTree, Tree

CLOSURE_CAP = 10_000


@dataclass(frozen=True)
class BranchMove:
    """Move the branch at ``x`` from ``u`` to ``u``'s neighbour ``v``."""

    u: int
    v: int
    x: int


@dataclass(frozen=True)
class BalancedPair:
    u: int
    v: int
    s_u: tuple[int, ...]
    s_v: tuple[int, ...]

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "S_u": list(self.s_u), "S_v": list(self.s_v)}


@dataclass(frozen=True)
class ExchangeCertificate:
    pair: BalancedPair
    branches_strongly_isomorphic: bool
    roots_similar_in_Tstar: bool
    # weaker sufficient condition: the sides left in T* are not strongly isomorphic
    sides_strongly_isomorphic: bool

    @property
    def proves_non_isomorphic(self) -> bool:
        return not self.branches_strongly_isomorphic and not self.roots_similar_in_Tstar

    def to_json(self) -> dict:
        return {
            "pair": self.pair.to_json(),
            "branches_strongly_isomorphic": self.branches_strongly_isomorphic,
            "roots_similar_in_Tstar": self.roots_similar_in_Tstar,
            "sides_strongly_isomorphic": self.sides_strongly_isomorphic,
            "proves_non_isomorphic": self.proves_non_isomorphic,
        }


# ---------------------------------------------------------------------------
# branch moving


def _check_move(t: Tree, m: BranchMove) -> None:
    if not t.has_edge(m.u, m.v):
        raise InvalidMoveError(f"{m.u}-{m.v} is not an edge")
    if not t.has_edge(m.u, m.x):
        raise InvalidMoveError(f"{m.u}-{m.x} is not an edge")
    if m.x == m.v:
        raise InvalidMoveError("x must differ from v")


def branch_move(t: Tree, m: BranchMove) -> Tree:
    """``T - ux + vx``."""
    _check_move(t, m)
    drop = Edge.of(m.u, m.x)
    edges = [e for e in t.edges if e != drop]
    edges.append(Edge.of(m.v, m.x))
    return Tree.from_edges(t.n, edges)


def predict_branch_move(t: Tree, m: BranchMove) -> OrderRelation:
    """Relation of ``t`` to ``branch_move(t, m)`` read off the split sizes."""
    _check_move(t, m)
    n_u = t.branch_size(m.v, m.u)
    n_v = t.n - n_u
    moved = t.branch_size(m.u, m.x)
    if n_u <= n_v:
        return OrderRelation.GREATER
    gap = n_u - n_v
    if gap > moved:
        return OrderRelation.LESS
    if gap < moved:
        return OrderRelation.GREATER
    return OrderRelation.EQUIVALENT


def legal_moves(t: Tree) -> Iterator[BranchMove]:
    for u in range(t.n):
        for v in t.adjacency[u]:
            for x in t.adjacency[u]:
                if x != v:
                    yield BranchMove(u, v, x)


# ---------------------------------------------------------------------------
# balanced pairs and exchange


def eligible_neighbors(t: Tree, u: int, v: int) -> tuple[list[int], list[int]]:
    """Neighbours of ``u`` and of ``v`` that are not on the ``u``-``v`` path."""
    p = t.path(u, v)
    return [x for x in t.adjacency[u] if x != p[1]], [y for y in t.adjacency[v] if y != p[-2]]


def _nonempty_subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    for size in range(1, len(items) + 1):
        yield from combinations(items, size)


def find_balanced_pairs(t: Tree, u: int, v: int) -> list[BalancedPair]:
    if u == v:
        raise InvalidArgumentError("balanced pairs need two distinct vertices")
    elig_u, elig_v = eligible_neighbors(t, u, v)
    by_total: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for s_v in _nonempty_subsets(elig_v):
        by_total[sum(t.branch_size(v, y) for y in s_v)].append(s_v)
    pairs = []
    for s_u in _nonempty_subsets(elig_u):
        total = sum(t.branch_size(u, x) for x in s_u)
        for s_v in by_total.get(total, ()):
            pairs.append(BalancedPair(u, v, s_u, s_v))
    return pairs


def all_balanced_pairs(t: Tree) -> Iterator[BalancedPair]:
    for u in range(t.n):
        for v in range(u + 1, t.n):
            yield from find_balanced_pairs(t, u, v)


def _check_pair(t: Tree, p: BalancedPair) -> None:
    if p.u == p.v:
        raise InvalidPairError("u and v must differ")
    if not p.s_u or not p.s_v:
        raise InvalidPairError("both branch sets must be nonempty")
    elig_u, elig_v = eligible_neighbors(t, p.u, p.v)
    if len(set(p.s_u)) != len(p.s_u) or not set(p.s_u) <= set(elig_u):
        raise InvalidPairError(f"S_u={p.s_u} is not a set of off-path neighbours of {p.u}")
    if len(set(p.s_v)) != len(p.s_v) or not set(p.s_v) <= set(elig_v):
        raise InvalidPairError(f"S_v={p.s_v} is not a set of off-path neighbours of {p.v}")
    total_u = sum(t.branch_size(p.u, x) for x in p.s_u)
    total_v = sum(t.branch_size(p.v, y) for y in p.s_v)
    if total_u != total_v:
        raise InvalidPairError(f"unbalanced: {total_u} != {total_v}")


def branch_exchange(t: Tree, p: BalancedPair) -> Tree:
    """Reattach the ``S_u`` branches at ``v`` and the ``S_v`` branches at ``u``."""
    _check_pair(t, p)
    drop = {Edge.of(p.u, x) for x in p.s_u} | {Edge.of(p.v, y) for y in p.s_v}
    edges = [e for e in t.edges if e not in drop]
    edges += [Edge.of(p.v, x) for x in p.s_u]
    edges += [Edge.of(p.u, y) for y in p.s_v]
    return Tree.from_edges(t.n, edges)


def _core(t: Tree, p: BalancedPair) -> tuple[Tree, dict[int, int]]:
    """``T*``: ``t`` with both branch groups removed, relabelled compactly."""
    removed: set[int] = set()
    for root, group in ((p.u, p.s_u), (p.v, p.s_v)):
        for x in group:
            stack = [x]
            removed.add(x)
            while stack:
                a = stack.pop()
                for b in t.adjacency[a]:
                    if b != root and b not in removed:
                        removed.add(b)
                        stack.append(b)
    keep = [w for w in range(t.n) if w not in removed]
    local = {w: i for i, w in enumerate(keep)}
    edges = [(local[a], local[b]) for a, b in t.edges if a in local and b in local]
    return Tree.from_edges(len(keep), edges), local


def exchange_certificate(t: Tree, p: BalancedPair) -> ExchangeCertificate:
    _check_pair(t, p)
    codes_u = sorted(branch_code(t, p.u, x) for x in p.s_u)
    codes_v = sorted(branch_code(t, p.v, y) for y in p.s_v)
    core, local = _core(t, p)
    cu, cv = local[p.u], local[p.v]
    side_u, side_v = eligible_neighbors(core, cu, cv)
    sides = sorted(branch_code(core, cu, x) for x in side_u) == sorted(branch_code(core, cv, y) for y in side_v)
    return ExchangeCertificate(
        pair=p,
        branches_strongly_isomorphic=codes_u == codes_v,
        roots_similar_in_Tstar=are_similar(core, cu, cv),
        sides_strongly_isomorphic=sides,
    )


# ---------------------------------------------------------------------------
# closure


def exchange_neighbors(t: Tree) -> Iterator[tuple[BalancedPair, Tree]]:
    for p in all_balanced_pairs(t):
        yield p, branch_exchange(t, p)


def exchange_closure_trees(t: Tree, cap: int = CLOSURE_CAP) -> dict[CanonicalCode, Tree]:
    """Representatives of every class reachable by repeated exchanges."""
    start = canonical_code(t)
    found = {start: t}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for _, nxt in exchange_neighbors(cur):
            code = canonical_code(nxt)
            if code not in found:
                if len(found) >= cap:
                    raise ClosureOverflowError(f"closure exceeds {cap} classes")
                found[code] = nxt
                queue.append(nxt)
    return found


def exchange_closure(t: Tree, cap: int = CLOSURE_CAP) -> frozenset[CanonicalCode]:
    return frozenset(exchange_closure_trees(t, cap))


# ---------------------------------------------------------------------------
# single-branch construction of equivalent, non-isomorphic pairs


def theorem_5_1_construct(tstar: Tree, u: int, v: int, branch: RootedTree) -> tuple[Tree, Tree]:
    """Hang ``branch`` at ``u`` and, separately, at ``v``.

    Requires ``uv`` to be an edge of ``tstar`` whose two sides have equal
    order and ``u``, ``v`` not similar in ``tstar``; the two results then
    share their edge division vector but are not isomorphic.
    """
    if not tstar.has_edge(u, v):
        raise PreconditionError(f"{u}-{v} is not an edge of T*", "edge")
    side_v = tstar.branch_size(u, v)
    if tstar.n - side_v != side_v:
        raise PreconditionError(
            f"sides of {u}-{v} have orders {tstar.n - side_v} and {side_v}", "equal-sides"
        )
    if are_similar(tstar, u, v):
        raise PreconditionError(f"{u} and {v} are similar in T*", "not-similar")
    m = tstar.n
    b = branch.tree
    # branch vertex i becomes m + i
    branch_edges = [(m + a, m + c) for a, c in b.edges]
    x = m + branch.root
    n = m + b.n
    t1 = Tree.from_edges(n, list(tstar.edges) + branch_edges + [(u, x)])
    t2 = Tree.from_edges(n, list(tstar.edges) + branch_edges + [(v, x)])
    return t1, t2


def check_exchange_preserves_edv(t: Tree, p: BalancedPair) -> bool:
    return compare(edv(t), edv(branch_exchange(t, p))) is OrderRelation.EQUIVALENT
