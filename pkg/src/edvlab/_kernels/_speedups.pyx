# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pure.py`` for the reference semantics."""

from libc.stdlib cimport malloc, free


cdef long* _to_c(object seq, Py_ssize_t n) except NULL:
    cdef long* buf = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def subtree_sizes(parent):
    cdef Py_ssize_t n = len(parent), i
    cdef long* par = _to_c(parent, n)
    cdef long* size = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    try:
        for i in range(n):
            size[i] = 1
        for i in range(n - 1, 0, -1):
            size[par[i]] += size[i]
        return [size[i] for i in range(n)]
    finally:
        free(par)
        free(size)


def edv_counts(parent):
    cdef Py_ssize_t n = len(parent), i
    cdef long s, m
    cdef long* par = _to_c(parent, n)
    cdef long* size = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* counts = <long*> malloc((n // 2 + 1) * sizeof(long))
    try:
        for i in range(n):
            size[i] = 1
        for i in range(n // 2 + 1):
            counts[i] = 0
        for i in range(n - 1, 0, -1):
            size[par[i]] += size[i]
        for i in range(1, n):
            s = size[i]
            m = s if s < n - s else n - s
            counts[m - 1] += 1
        return [counts[i] for i in range(n // 2)]
    finally:
        free(par)
        free(size)
        free(counts)


def distance_sums(indptr, indices):
    cdef Py_ssize_t n = len(indptr) - 1
    cdef Py_ssize_t m = len(indices)
    cdef long* ptr = _to_c(indptr, n + 1)
    cdef long* idx = _to_c(indices, m)
    cdef long* deg = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* dist = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long* queue = <long*> malloc((n if n > 0 else 1) * sizeof(long))
    cdef long long w = 0, dd = 0, gut = 0
    cdef Py_ssize_t src, i, j, v, head, tail
    cdef long a, b, d
    try:
        for i in range(n):
            deg[i] = ptr[i + 1] - ptr[i]
        for src in range(n):
            for i in range(n):
                dist[i] = -1
            dist[src] = 0
            queue[0] = src
            head = 0
            tail = 1
            while head < tail:
                a = queue[head]
                head += 1
                for j in range(ptr[a], ptr[a + 1]):
                    b = idx[j]
                    if dist[b] < 0:
                        dist[b] = dist[a] + 1
                        queue[tail] = b
                        tail += 1
            for v in range(src + 1, n):
                d = dist[v]
                w += d
                dd += (deg[src] + deg[v]) * d
                gut += deg[src] * deg[v] * d
        return int(w), int(dd), int(gut)
    finally:
        free(ptr)
        free(idx)
        free(deg)
        free(dist)
        free(queue)


def prufer_decode(seq, long n):
    if n == 1:
        return []
    cdef Py_ssize_t m = len(seq), i
    cdef long* s = _to_c(seq, m)
    cdef long* degree = <long*> malloc(n * sizeof(long))
    cdef long ptr, leaf, x
    edges = []
    try:
        for i in range(n):
            degree[i] = 1
        for i in range(m):
            degree[s[i]] += 1
        # linear-time decoding: ptr scans for the smallest leaf
        ptr = 0
        while degree[ptr] != 1:
            ptr += 1
        leaf = ptr
        for i in range(m):
            x = s[i]
            edges.append((leaf, x) if leaf < x else (x, leaf))
            degree[leaf] -= 1
            degree[x] -= 1
            if degree[x] == 1 and x < ptr:
                leaf = x
            else:
                ptr += 1
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
        edges.append((leaf, n - 1) if leaf < n - 1 else (n - 1, leaf))
        return edges
    finally:
        free(s)
        free(degree)
