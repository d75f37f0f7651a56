# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Hot inner loops for the distance, Hausdorff and bottleneck-matching
primitives.  Same call surface as `_pure`; inputs are C-contiguous float64
arrays, already validated by the calling layer.  Norm codes: 0 = max norm,
1 = Euclidean.
"""

from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc

import numpy as np

BACKEND_NAME = "native"

cdef double INF = float("inf")


cdef inline double _dist(const double* x, const double* y, Py_ssize_t d, int norm) noexcept nogil:
    cdef Py_ssize_t j
    cdef double acc = 0.0
    cdef double t
    if norm == 0:
        for j in range(d):
            t = fabs(x[j] - y[j])
            if t > acc:
                acc = t
        return acc
    for j in range(d):
        t = x[j] - y[j]
        acc += t * t
    return sqrt(acc)


def dist(double[::1] x, double[::1] y, int norm):
    return _dist(&x[0], &y[0], x.shape[0], norm)


def pairwise(double[:, ::1] a, double[:, ::1] b, int norm):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], d = a.shape[1]
    cdef Py_ssize_t i, j
    out_arr = np.empty((n, m), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    with nogil:
        for i in range(n):
            for j in range(m):
                out[i, j] = _dist(&a[i, 0], &b[j, 0], d, norm)
    return out_arr


def point_to_set(double[::1] x, double[:, ::1] cloud, int norm):
    cdef Py_ssize_t n = cloud.shape[0], d = cloud.shape[1]
    cdef Py_ssize_t i
    cdef double best = INF, v
    with nogil:
        for i in range(n):
            v = _dist(&x[0], &cloud[i, 0], d, norm)
            if v < best:
                best = v
    return best


def farthest(double[:, ::1] cloud, double[::1] x, int norm):
    cdef Py_ssize_t n = cloud.shape[0], d = cloud.shape[1]
    cdef Py_ssize_t i
    cdef double best = 0.0, v
    with nogil:
        for i in range(n):
            v = _dist(&cloud[i, 0], &x[0], d, norm)
            if v > best:
                best = v
    return best


def diameter(double[:, ::1] cloud, int norm):
    cdef Py_ssize_t n = cloud.shape[0], d = cloud.shape[1]
    cdef Py_ssize_t i, j
    cdef double best = 0.0, v
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                v = _dist(&cloud[i, 0], &cloud[j, 0], d, norm)
                if v > best:
                    best = v
    return best


def directed_hausdorff(double[:, ::1] a, double[:, ::1] b, int norm):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], d = a.shape[1]
    cdef Py_ssize_t i, j
    cdef double worst = 0.0, best, v
    with nogil:
        for i in range(n):
            best = INF
            for j in range(m):
                v = _dist(&a[i, 0], &b[j, 0], d, norm)
                if v < best:
                    best = v
            if best > worst:
                worst = best
    return worst


def hausdorff(double[:, ::1] a, double[:, ::1] b, int norm):
    cdef Py_ssize_t n = a.shape[0], m = b.shape[0], d = a.shape[1]
    cdef Py_ssize_t i, j
    cdef double worst = 0.0, rowmin, v
    cdef double* colmin = <double*> malloc(m * sizeof(double))
    if colmin == NULL:
        raise MemoryError()
    try:
        with nogil:
            for j in range(m):
                colmin[j] = INF
            for i in range(n):
                rowmin = INF
                for j in range(m):
                    v = _dist(&a[i, 0], &b[j, 0], d, norm)
                    if v < rowmin:
                        rowmin = v
                    if v < colmin[j]:
                        colmin[j] = v
                if rowmin > worst:
                    worst = rowmin
            for j in range(m):
                if colmin[j] > worst:
                    worst = colmin[j]
        return worst
    finally:
        free(colmin)


# --- bottleneck matching -----------------------------------------------

cdef bint _dfs(Py_ssize_t u, const double* dmat, Py_ssize_t n, double thr,
               Py_ssize_t* pair_u, Py_ssize_t* pair_v, double* level,
               double level_nil) noexcept nogil:
    cdef Py_ssize_t v, w
    for v in range(n):
        if dmat[u * n + v] <= thr:
            w = pair_v[v]
            if w == -1:
                if level_nil == level[u] + 1.0:
                    pair_u[u] = v
                    pair_v[v] = u
                    return True
            elif level[w] == level[u] + 1.0 and _dfs(w, dmat, n, thr, pair_u, pair_v, level, level_nil):
                pair_u[u] = v
                pair_v[v] = u
                return True
    level[u] = INF
    return False


cdef bint _perfect_matching_exists(const double* dmat, Py_ssize_t n, double thr) noexcept nogil:
    """Hopcroft-Karp over edges with dmat[u,v] <= thr."""
    cdef Py_ssize_t* pair_u = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* pair_v = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef Py_ssize_t* queue = <Py_ssize_t*> malloc(n * sizeof(Py_ssize_t))
    cdef double* level = <double*> malloc(n * sizeof(double))
    cdef Py_ssize_t matched = 0, u, v, w, head, tail
    cdef double level_nil
    cdef bint progress = True
    if pair_u == NULL or pair_v == NULL or queue == NULL or level == NULL:
        if pair_u != NULL: free(pair_u)
        if pair_v != NULL: free(pair_v)
        if queue != NULL: free(queue)
        if level != NULL: free(level)
        return False
    for u in range(n):
        pair_u[u] = -1
        pair_v[u] = -1
    while progress and matched < n:
        # BFS phase: layer the alternating-path graph from free left vertices.
        head = 0
        tail = 0
        for u in range(n):
            if pair_u[u] == -1:
                level[u] = 0.0
                queue[tail] = u
                tail += 1
            else:
                level[u] = INF
        level_nil = INF
        while head < tail:
            u = queue[head]
            head += 1
            if level[u] < level_nil:
                for v in range(n):
                    if dmat[u * n + v] <= thr:
                        w = pair_v[v]
                        if w == -1:
                            if level_nil == INF:
                                level_nil = level[u] + 1.0
                        elif level[w] == INF:
                            level[w] = level[u] + 1.0
                            queue[tail] = w
                            tail += 1
        progress = level_nil != INF
        if progress:
            for u in range(n):
                if pair_u[u] == -1:
                    if _dfs(u, dmat, n, thr, pair_u, pair_v, level, level_nil):
                        matched += 1
    free(pair_u)
    free(pair_v)
    free(queue)
    free(level)
    return matched == n


def bottleneck(double[:, ::1] a, double[:, ::1] b, int norm):
    """Exact bottleneck value of the best bijection between equal-size clouds.

    Binary search over the sorted multiset of pairwise distances; feasibility
    at a threshold is a perfect matching over edges at or below it, decided
    with Hopcroft-Karp.  The optimum is always one of the pairwise distances.
    """
    cdef Py_ssize_t n = a.shape[0], d = a.shape[1]
    cdef Py_ssize_t i, j
    dmat_arr = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] dmat = dmat_arr
    with nogil:
        for i in range(n):
            for j in range(n):
                dmat[i, j] = _dist(&a[i, 0], &b[j, 0], d, norm)
    cand_arr = np.unique(dmat_arr)
    cdef double[::1] cand = cand_arr
    cdef Py_ssize_t lo = 0, hi = cand.shape[0] - 1, mid
    cdef double result
    with nogil:
        while lo < hi:
            mid = (lo + hi) // 2
            if _perfect_matching_exists(&dmat[0, 0], n, cand[mid]):
                hi = mid
            else:
                lo = mid + 1
        result = cand[lo]
    return result
