"""Reference (pure Python) implementations of the hot kernels.

Every function here has a twin in ``_speedups.pyx`` with the same
signature and the same results; the package picks one at import time.
Inputs are plain integer sequences so both backends share one contract:

* ``parent``  -- preorder parent array, ``parent[0] == -1`` and
  ``parent[i] < i`` for ``i >= 1``.
* ``indptr``/``indices`` -- CSR adjacency of an undirected tree.
"""

from __future__ import annotations

import heapq
from collections.abc import Sequence


def subtree_sizes(parent: Sequence[int]) -> list[int]:
    n = len(parent)
    size = [1] * n
    for i in range(n - 1, 0, -1):
        size[parent[i]] += size[i]
    return size


def edv_counts(parent: Sequence[int]) -> list[int]:
    """Histogram of ``min(n_u, n_v)`` over the edges ``(parent[i], i)``."""
    n = len(parent)
    size = subtree_sizes(parent)
    counts = [0] * (n // 2)
    for i in range(1, n):
        s = size[i]
        counts[min(s, n - s) - 1] += 1
    return counts


def distance_sums(indptr: Sequence[int], indices: Sequence[int]) -> tuple[int, int, int]:
    """All-pairs BFS sums ``(W, DD, Gut)`` over unordered vertex pairs.

    ``W = sum d(u,v)``, ``DD = sum (deg u + deg v) d(u,v)`` and
    ``Gut = sum deg u * deg v * d(u,v)``.
    """
    n = len(indptr) - 1
    deg = [indptr[i + 1] - indptr[i] for i in range(n)]
    w = dd = gut = 0
    dist = [-1] * n
    queue = [0] * n
    for src in range(n):
        for i in range(n):
            dist[i] = -1
        dist[src] = 0
        queue[0] = src
        head, tail = 0, 1
        while head < tail:
            a = queue[head]
            head += 1
            for j in range(indptr[a], indptr[a + 1]):
                b = indices[j]
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue[tail] = b
                    tail += 1
        dsrc = deg[src]
        for v in range(src + 1, n):
            d = dist[v]
            w += d
            dd += (dsrc + deg[v]) * d
            gut += dsrc * deg[v] * d
    return w, dd, gut


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree on ``0..n-1`` with Prüfer sequence ``seq``."""
    if n == 1:
        return []
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b) if a < b else (b, a))
    return edges
