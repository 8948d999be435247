"""Labeled free trees and the structural queries every other module uses."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from . import _kernels
from .errors import InvalidArgumentError, InvalidEdgeError, InvalidTreeError, NoEdgesError


class Edge(NamedTuple):
    """Undirected edge stored with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        if a == b:
            raise InvalidEdgeError(f"self-loop {a}-{b}")
        return cls(a, b) if a < b else cls(b, a)


class SplitSizes(NamedTuple):
    n_u: int
    n_v: int


@dataclass(frozen=True, eq=False)
class Tree:
    """A free tree on the vertex labels ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Instances
    are immutable; derived data (a preorder rooted at 0, subtree sizes,
    CSR arrays) is computed lazily once and cached on the instance.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise InvalidTreeError("a tree needs at least one vertex")
        if len(self.adjacency) != n:
            raise InvalidTreeError(f"adjacency has {len(self.adjacency)} rows, expected {n}")
        degree_sum = 0
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InvalidTreeError(f"neighbours of {v} must be sorted and distinct")
            for w in nbrs:
                if not 0 <= w < n or w == v:
                    raise InvalidTreeError(f"bad neighbour {w} of {v}")
                if v not in self.adjacency[w]:
                    raise InvalidTreeError(f"edge {v}-{w} is not symmetric")
            degree_sum += len(nbrs)
        if degree_sum != 2 * (n - 1):
            raise InvalidTreeError(f"expected {n - 1} edges, got {degree_sum // 2}")
        if len(self._order) != n:
            raise InvalidTreeError("graph is not connected")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Tree:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidTreeError(f"edge {a}-{b} out of range for n={n}")
            if a == b:
                raise InvalidTreeError(f"self-loop at {a}")
            if b in nbrs[a]:
                raise InvalidTreeError(f"parallel edge {a}-{b}")
            nbrs[a].add(b)
            nbrs[b].add(a)
            count += 1
        if count != n - 1:
            raise InvalidTreeError(f"expected {n - 1} edges, got {count}")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_parents(cls, parent: Iterable[int]) -> Tree:
        parent = list(parent)
        return cls.from_edges(len(parent), ((p, i) for i, p in enumerate(parent) if p >= 0))

    # basic queries ------------------------------------------------------

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and b in self.adjacency[a]

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def branching_vertices(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) >= 3]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={[tuple(e) for e in self.edges]})"

    # rooted-at-0 preorder and sizes ------------------------------------

    @cached_property
    def _order(self) -> list[int]:
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        order = []
        while stack:
            v = stack.pop()
            order.append(v)
            for w in reversed(self.adjacency[v]):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        return order

    @cached_property
    def _parent(self) -> list[int]:
        """``_parent[v]`` in the tree rooted at vertex 0 (``-1`` for the root)."""
        parent = [-1] * self.n
        for v in self._order:
            for w in self.adjacency[v]:
                if w != parent[v]:
                    parent[w] = v
        return parent

    @cached_property
    def preorder_parents(self) -> list[int]:
        """Parent positions in preorder; the kernel input format."""
        pos = {v: i for i, v in enumerate(self._order)}
        parent = self._parent
        return [-1] + [pos[parent[v]] for v in self._order[1:]]

    @cached_property
    def _size(self) -> list[int]:
        """Subtree size of every vertex when rooted at 0, in one pass."""
        by_pos = _kernels.subtree_sizes(self.preorder_parents)
        size = [0] * self.n
        for i, v in enumerate(self._order):
            size[v] = by_pos[i]
        return size

    @cached_property
    def _depth(self) -> list[int]:
        depth = [0] * self.n
        parent = self._parent
        for v in self._order[1:]:
            depth[v] = depth[parent[v]] + 1
        return depth

    @cached_property
    def csr(self) -> tuple[list[int], list[int]]:
        indptr = [0]
        indices: list[int] = []
        for nbrs in self.adjacency:
            indices.extend(nbrs)
            indptr.append(len(indices))
        return indptr, indices

    def branch_size(self, u: int, x: int) -> int:
        """``|T_x(ux)|``: order of the component of ``T - ux`` holding ``x``."""
        if self._parent[x] == u:
            return self._size[x]
        if self._parent[u] == x:
            return self.n - self._size[u]
        raise InvalidEdgeError(f"{u}-{x} is not an edge")

    def path(self, u: int, v: int) -> list[int]:
        """Vertices of the unique ``u``-``v`` path, ``u`` first."""
        parent, depth = self._parent, self._depth
        left, right = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a]
            left.append(a)
        while depth[b] > depth[a]:
            b = parent[b]
            right.append(b)
        while a != b:
            a, b = parent[a], parent[b]
            left.append(a)
            right.append(b)
        right.pop()
        return left + right[::-1]

    def distances_from(self, src: int) -> list[int]:
        dist = [-1] * self.n
        dist[src] = 0
        frontier = [src]
        while frontier:
            nxt = []
            for a in frontier:
                for b in self.adjacency[a]:
                    if dist[b] < 0:
                        dist[b] = dist[a] + 1
                        nxt.append(b)
            frontier = nxt
        return dist

    def relabel(self, perm: list[int]) -> Tree:
        """Tree with vertex ``v`` renamed ``perm[v]``."""
        return Tree.from_edges(self.n, ((perm[a], perm[b]) for a, b in self.edges))

    # text format ------------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Tree:
        trees = list(parse_trees(text))
        if len(trees) != 1:
            raise InvalidTreeError(f"expected exactly one tree, found {len(trees)}")
        return trees[0]


@dataclass(frozen=True)
class RootedTree:
    """A tree with a distinguished root.

    ``tree`` uses local labels ``0..m-1``; ``labels[i]`` is the label the
    local vertex ``i`` carried in the tree it was cut from, and ``root`` is
    a local label.
    """

    tree: Tree
    root: int
    labels: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.root < self.tree.n:
            raise InvalidArgumentError(f"root {self.root} not in tree of order {self.tree.n}")
        if self.labels is not None and len(self.labels) != self.tree.n:
            raise InvalidArgumentError("labels must cover every vertex")

    @property
    def n(self) -> int:
        return self.tree.n

    @property
    def original_root(self) -> int:
        return self.labels[self.root] if self.labels else self.root

    @property
    def original_vertices(self) -> frozenset[int]:
        return frozenset(self.labels) if self.labels else frozenset(range(self.tree.n))

    def original_edges(self) -> set[tuple[int, int]]:
        lab = self.labels or tuple(range(self.tree.n))
        return {tuple(sorted((lab[a], lab[b]))) for a, b in self.tree.edges}


def parse_trees(text: str) -> Iterator[Tree]:
    """Parse one or more trees in the text format, records split by ``--``."""
    record: list[str] = []
    for raw in text.splitlines() + ["--"]:
        line = raw.strip()
        if line == "--":
            if record:
                yield _parse_record(record)
                record = []
        elif line:
            record.append(line)


def _parse_record(lines: list[str]) -> Tree:
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            a, b = line.split()
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise InvalidTreeError(f"malformed tree record: {exc}") from None
    if len(edges) != n - 1:
        raise InvalidTreeError(f"record declares n={n} but lists {len(edges)} edges")
    return Tree.from_edges(n, edges)


def format_trees(trees: Iterable[Tree]) -> str:
    return "--\n".join(t.to_text() for t in trees)


# ---------------------------------------------------------------------------
# operations on edges


def _check_edge(t: Tree, e: tuple[int, int]) -> Edge:
    a, b = e
    if t.n < 2:
        raise NoEdgesError("a single-vertex tree has no edges")
    if not t.has_edge(a, b):
        raise InvalidEdgeError(f"{a}-{b} is not an edge of the tree")
    return Edge(a, b)


def split_sizes(t: Tree, e: tuple[int, int]) -> SplitSizes:
    """Orders of the two components of ``t - e``, in the order ``e`` was given."""
    u, v = _check_edge(t, e)
    n_v = t.branch_size(u, v)
    return SplitSizes(t.n - n_v, n_v)


def mu(t: Tree, e: tuple[int, int]) -> int:
    n_u, n_v = split_sizes(t, e)
    return min(n_u, n_v)


def all_mu(t: Tree) -> dict[Edge, int]:
    """``mu`` of every edge from a single traversal."""
    if t.n < 2:
        raise NoEdgesError("a single-vertex tree has no edges")
    size, parent, n = t._size, t._parent, t.n
    out = {}
    for v in range(n):
        p = parent[v]
        if p >= 0:
            out[Edge.of(p, v)] = min(size[v], n - size[v])
    return out


def component_of(t: Tree, e: tuple[int, int], side: int) -> RootedTree:
    """The component of ``t - e`` containing ``side``, rooted at ``side``."""
    a, b = _check_edge(t, e)
    if side not in (a, b):
        raise InvalidArgumentError(f"{side} is not an endpoint of {a}-{b}")
    other = b if side == a else a
    return _component(t, side, {other})


def _component(t: Tree, root: int, blocked: set[int]) -> RootedTree:
    """Component containing ``root`` after cutting ``root`` from ``blocked``."""
    labels = [root]
    local = {root: 0}
    edges = []
    stack = [root]
    while stack:
        v = stack.pop()
        for w in t.adjacency[v]:
            if w in local or (v == root and w in blocked):
                continue
            local[w] = len(labels)
            labels.append(w)
            edges.append((local[v], local[w]))
            stack.append(w)
    return RootedTree(Tree.from_edges(len(labels), edges), 0, tuple(labels))


def maximal_pendent_paths(t: Tree) -> list[int]:
    """Sorted lengths (in vertices) of the pendant paths hanging off branch points.

    Each leaf contributes the number of vertices from it up to, but not
    including, the first vertex of degree >= 3.  A path graph has no such
    vertex and is reported as ``[n]``.
    """
    if t.n < 2:
        raise NoEdgesError("pendant paths need at least one edge")
    if not t.branching_vertices():
        return [t.n]
    lengths = []
    for leaf in t.leaves():
        prev, cur, count = -1, leaf, 0
        while t.degree(cur) < 3:
            count += 1
            nxt = next(w for w in t.adjacency[cur] if w != prev)
            prev, cur = cur, nxt
        lengths.append(count)
    return sorted(lengths)


# ---------------------------------------------------------------------------
# small named trees


def path_tree(n: int) -> Tree:
    return Tree.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_tree(n: int) -> Tree:
    """``S_n`` centred at 0."""
    return Tree.from_edges(n, ((0, i) for i in range(1, n)))


def center(t: Tree) -> list[int]:
    """The one or two central vertices (minimum eccentricity)."""
    if t.n <= 2:
        return list(range(t.n))
    degree = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if degree[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adjacency[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)
