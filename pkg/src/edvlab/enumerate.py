"""Generation of all non-isomorphic free trees of a given order.

Trees are produced from level sequences with the successor rule of
Wright, Richmond, Odlyzko and McKay (constant amortized time per tree):
rooted trees are stepped through in Beyer-Hedetniemi order and only the
level sequences that are canonical for a free tree are kept.

Setting ``EDVLAB_CACHE_DIR`` makes :func:`all_trees` store each order's
stream as a text file keyed by order and generator version.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Iterator
from pathlib import Path

from . import _kernels
from .canon import CanonicalCode, canonical_code
from .errors import InvalidArgumentError
from .tree import Tree, format_trees, parse_trees

MAX_ORDER = 20
GENERATOR_VERSION = 1


def _check_order(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_ORDER:
        raise InvalidArgumentError(f"order must be an integer in 1..{MAX_ORDER}, got {n!r}")


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor of a rooted level sequence."""
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    result = list(layout)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    """(first subtree of the root, rest of the tree), both as level sequences."""
    m = len(layout)
    for i in range(2, len(layout)):
        if layout[i] == 1:
            m = i
            break
    left = [x - 1 for x in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int] | None:
    """Smallest level sequence >= candidate that is canonical for a free tree."""
    left, rest = _split(candidate)
    left_height, rest_height = max(left), max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    nxt = _next_rooted(candidate, p)
    if nxt is None:
        return None
    if candidate[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[-len(suffix):] = suffix
    return nxt


def level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of the free trees of order ``n``."""
    _check_order(n)
    if n <= 2:
        yield list(range(n))
        return
    # path rooted at its centre
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is None:
            break
        yield layout
        layout = _next_rooted(layout)


def _tree_from_levels(levels: list[int]) -> Tree:
    parent = [-1] * len(levels)
    last_at: dict[int, int] = {}
    for i, depth in enumerate(levels):
        if depth > 0:
            parent[i] = last_at[depth - 1]
        last_at[depth] = i
    return Tree.from_parents(parent)


def _generate(n: int) -> Iterator[Tree]:
    for levels in level_sequences(n):
        yield _tree_from_levels(levels)


def _cache_path(n: int) -> Path | None:
    root = os.environ.get("EDVLAB_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"trees-n{n}-v{GENERATOR_VERSION}.txt"


def all_trees(n: int) -> Iterator[Tree]:
    """Every free tree of order ``n`` exactly once, in a fixed order."""
    _check_order(n)
    path = _cache_path(n)
    if path is None:
        yield from _generate(n)
        return
    if path.exists():
        yield from parse_trees(path.read_text())
        return
    trees = list(_generate(n))
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(format_trees(trees))
    tmp.replace(path)
    yield from trees


def count_trees(n: int) -> int:
    return sum(1 for _ in all_trees(n))


# ---------------------------------------------------------------------------
# independent oracle: labeled trees via Prüfer sequences


def prufer_sequences(n: int, *, internal_first: bool = False) -> Iterator[tuple[int, ...]]:
    """Prüfer sequences of length ``n - 2``.

    With ``internal_first`` only sequences whose value set is exactly
    ``{0, ..., m-1}`` for some ``m`` are produced.  Every tree has such a
    labelling (internal vertices first, leaves last) and a sequence holds
    precisely the internal vertices, so this subset still reaches every
    isomorphism class while being far smaller than ``n ** (n - 2)``.
    """
    if n < 3:
        yield ()
        return
    if internal_first:
        yield from _surjective_sequences(n - 2, n)
    else:
        yield from itertools.product(range(n), repeat=n - 2)


def _surjective_sequences(length: int, n: int) -> Iterator[tuple[int, ...]]:
    # value set exactly {0..m-1}; generated directly instead of filtering
    for m in range(1, min(length, n) + 1):
        for seq in itertools.product(range(m), repeat=length):
            if len(set(seq)) == m:
                yield seq


def prufer_classes(n: int, *, internal_first: bool = False) -> set[CanonicalCode]:
    """Canonical codes of all trees reached by decoding Prüfer sequences."""
    _check_order(n)
    if n == 1:
        return {canonical_code(Tree(1, ((),)))}
    if n == 2:
        return {canonical_code(Tree.from_edges(2, [(0, 1)]))}
    seqs = prufer_sequences(n, internal_first=internal_first)
    decode = _kernels.prufer_decode
    return {canonical_code(Tree.from_edges(n, decode(seq, n))) for seq in seqs}
