"""Canonical codes, isomorphism and vertex similarity for trees.

Codes are AHU-style parenthesis sequences: a rooted tree is encoded as
``1 <children codes in sorted order> 0``.  Free trees are rooted at their
centre; for a bicentral tree the smaller of the two rooted codes is used.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import InvalidArgumentError
from .tree import RootedTree, Tree, center

Code = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-class identifier of a free tree."""

    code: Code

    @property
    def n(self) -> int:
        return len(self.code) // 2

    def hex(self) -> str:
        return _bits_to_hex(self.code)

    @classmethod
    def from_hex(cls, text: str) -> CanonicalCode:
        return cls(_hex_to_bits(text))

    def to_tree(self) -> Tree:
        return tree_from_code(self.code)

    def __str__(self) -> str:
        return self.hex()


@dataclass(frozen=True, order=True)
class RootedCode:
    """Identifier of a rooted tree up to root-preserving isomorphism."""

    code: Code

    def hex(self) -> str:
        return _bits_to_hex(self.code)


def _bits_to_hex(bits: Sequence[int]) -> str:
    # leading bit is always 1, so the integer fixes the bit string
    return format(int("".join(map(str, bits)), 2), "x")


def _hex_to_bits(text: str) -> Code:
    return tuple(int(c) for c in format(int(text, 16), "b"))


def _rooted(t: Tree, root: int, blocked: Iterable[int] = ()) -> Code:
    """Code of the component of ``root`` with the edges ``root``-``blocked`` cut."""
    blocked = set(blocked)
    parent = {root: -1}
    order = [root]
    stack = [root]
    while stack:
        v = stack.pop()
        for w in t.adjacency[v]:
            if w == parent[v] or (v == root and w in blocked):
                continue
            parent[w] = v
            order.append(w)
            stack.append(w)
    children: dict[int, list[Code]] = {v: [] for v in order}
    code: Code = ()
    for v in reversed(order):
        kids = children[v]
        kids.sort()
        code = (1,) + tuple(x for k in kids for x in k) + (0,)
        if parent[v] >= 0:
            children[parent[v]].append(code)
    return code


def tree_from_code(code: Sequence[int]) -> Tree:
    """Rebuild a tree (root labelled 0, preorder labels) from a code."""
    edges = []
    stack: list[int] = []
    count = 0
    for bit in code:
        if bit == 1:
            if stack:
                edges.append((stack[-1], count))
            stack.append(count)
            count += 1
        else:
            stack.pop()
    if stack or count == 0:
        raise InvalidArgumentError("unbalanced code")
    return Tree.from_edges(count, edges)


def canonical_code(t: Tree) -> CanonicalCode:
    return CanonicalCode(min(_rooted(t, c) for c in center(t)))


def is_isomorphic(t1: Tree, t2: Tree) -> bool:
    return t1.n == t2.n and canonical_code(t1) == canonical_code(t2)


def rooted_code(t: RootedTree | Tree, root: int | None = None) -> RootedCode:
    """Rooted code of a :class:`RootedTree`, or of ``t`` rooted at ``root``."""
    if isinstance(t, RootedTree):
        return RootedCode(_rooted(t.tree, t.root))
    if root is None:
        raise InvalidArgumentError("root required for an unrooted tree")
    return RootedCode(_rooted(t, root))


def branch_code(t: Tree, u: int, x: int) -> RootedCode:
    """Rooted code of the branch ``T_x(ux)`` rooted at ``x``."""
    return RootedCode(_rooted(t, x, (u,)))


def forests_strongly_isomorphic(a: Iterable[RootedTree], b: Iterable[RootedTree]) -> bool:
    return sorted(rooted_code(r) for r in a) == sorted(rooted_code(r) for r in b)


def are_similar(t: Tree, u: int, v: int) -> bool:
    """True if some automorphism of ``t`` swaps ``u`` and ``v``.

    Such an automorphism must reverse the ``u``-``v`` path, so it exists
    exactly when, for every ``i``, the part of the tree hanging at the
    ``i``-th path vertex is strongly isomorphic to the part hanging at the
    ``i``-th vertex from the other end.
    """
    if u == v:
        raise InvalidArgumentError("similarity needs two distinct vertices")
    for w in (u, v):
        if not 0 <= w < t.n:
            raise InvalidArgumentError(f"vertex {w} not in tree of order {t.n}")
    p = t.path(u, v)
    k = len(p) - 1
    hanging = []
    for i, w in enumerate(p):
        on_path = [p[j] for j in (i - 1, i + 1) if 0 <= j <= k]
        hanging.append(_rooted(t, w, on_path))
    return all(hanging[i] == hanging[k - i] for i in range(len(p) // 2 + 1))
