"""Pure-Python (numpy) kernel backend.

Same call surface as the compiled module `_native`; selected automatically
when the extension is unavailable.  Inputs are C-contiguous float64 arrays,
already validated by the calling layer.  Norm codes: 0 = max norm, 1 =
Euclidean.
"""

from collections import deque

import numpy as np

BACKEND_NAME = "pure"

_INF = float("inf")


def dist(x, y, norm):
    d = x - y
    if norm == 0:
        return float(np.abs(d).max())
    return float(np.sqrt((d * d).sum()))


def pairwise(a, b, norm):
    d = a[:, None, :] - b[None, :, :]
    if norm == 0:
        return np.abs(d).max(axis=-1)
    return np.sqrt((d * d).sum(axis=-1))


def point_to_set(x, cloud, norm):
    d = cloud - x[None, :]
    if norm == 0:
        return float(np.abs(d).max(axis=-1).min())
    return float(np.sqrt((d * d).sum(axis=-1)).min())


def farthest(cloud, x, norm):
    d = cloud - x[None, :]
    if norm == 0:
        return float(np.abs(d).max(axis=-1).max())
    return float(np.sqrt((d * d).sum(axis=-1)).max())


def diameter(cloud, norm):
    if cloud.shape[0] == 1:
        return 0.0
    return float(pairwise(cloud, cloud, norm).max())


def directed_hausdorff(a, b, norm):
    return float(pairwise(a, b, norm).min(axis=1).max())


def hausdorff(a, b, norm):
    dmat = pairwise(a, b, norm)
    return float(max(dmat.min(axis=1).max(), dmat.min(axis=0).max()))


def bottleneck(a, b, norm):
    """Exact bottleneck value of the best bijection between equal-size clouds.

    Binary search over the sorted multiset of pairwise distances; feasibility
    at a threshold is a perfect matching over edges at or below it, decided
    with Hopcroft-Karp.  The optimum is always one of the pairwise distances.
    """
    dmat = pairwise(a, b, norm)
    candidates = np.unique(dmat)
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _perfect_matching_exists(dmat, candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


def _perfect_matching_exists(dmat, threshold):
    n = dmat.shape[0]
    adj = [np.nonzero(dmat[u] <= threshold)[0] for u in range(n)]
    pair_u = [-1] * n
    pair_v = [-1] * n
    dist_u = [_INF] * n
    dist_nil = _INF

    def bfs():
        nonlocal dist_nil
        queue = deque()
        for u in range(n):
            if pair_u[u] == -1:
                dist_u[u] = 0
                queue.append(u)
            else:
                dist_u[u] = _INF
        dist_nil = _INF
        while queue:
            u = queue.popleft()
            if dist_u[u] < dist_nil:
                for v in adj[u]:
                    w = pair_v[v]
                    if w == -1:
                        if dist_nil == _INF:
                            dist_nil = dist_u[u] + 1
                    elif dist_u[w] == _INF:
                        dist_u[w] = dist_u[u] + 1
                        queue.append(w)
        return dist_nil != _INF

    def dfs(u):
        for v in adj[u]:
            w = pair_v[v]
            if w == -1:
                if dist_nil == dist_u[u] + 1:
                    pair_u[u] = v
                    pair_v[v] = u
                    return True
            elif dist_u[w] == dist_u[u] + 1 and dfs(w):
                pair_u[u] = v
                pair_v[v] = u
                return True
        dist_u[u] = _INF
        return False

    matched = 0
    while bfs():
        for u in range(n):
            if pair_u[u] == -1 and dfs(u):
                matched += 1
        if matched == n:
            return True
    return matched == n
