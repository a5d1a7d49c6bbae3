"""Exact offline topology optimizers and the enumeration oracle.

Two dynamic programs: the generic-demand segment DP (O(n^3 k) after the
running-minimum trick) and the uniform-workload DP over segment lengths
(O(n^2 k)). Both reconstruct an optimal tree from recorded argmin choices.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

import numpy as np

from .demand import DemandMatrix, compute_outflow, uniform_demand, uniform_outflow
from .tree_core import KaryTree

INF = 1 << 60


class OptError(Exception):
    pass


@dataclass
class OptResult:
    tree: KaryTree
    cost: int


def _ensure_recursion(limit=20000):
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)


def optimal_tree_generic(D, k, _tables=None):
    """Minimal-TotalDistance k-ary search tree for an arbitrary demand matrix.

    dp[i][j][t] is the minimal cost of partitioning segment [i, j] into t
    child trees; dp2 is the running minimum over t. Ties break toward the
    smallest root, then the smallest left-tree count, then the smallest cut.
    """
    if k < 2:
        raise OptError("arity must be >= 2")
    n = D.n
    if n < 1:
        raise OptError("empty demand")
    W = compute_outflow(D)

    dp = np.full((n + 2, n + 2, k + 1), INF, dtype=np.int64)
    dp2 = np.full((n + 2, n + 2, k + 1), INF, dtype=np.int64)
    for i in range(1, n + 2):
        dp[i, i - 1, :] = 0
        dp2[i, i - 1, :] = 0  # empty segment: zero cost, any t
    root_c = np.zeros((n + 2, n + 2), dtype=np.int64)
    sleft_c = np.zeros((n + 2, n + 2), dtype=np.int64)
    cut_c = np.zeros((n + 2, n + 2, k + 1), dtype=np.int64)
    dp2arg = np.zeros((n + 2, n + 2, k + 1), dtype=np.int64)

    for L in range(1, n + 1):
        for i in range(1, n - L + 2):
            j = i + L - 1
            # t = 1: choose root r and the split of up to k children.
            vals = np.empty((L, k + 1), dtype=np.int64)
            for s in range(k + 1):
                dl = min(s, k - 1)  # at most k-1 children per side
                dr = min(k - s, k - 1)
                vals[:, s] = dp2[i, i - 1 : j, dl] + dp2[i + 1 : j + 2, j, dr]
            flat = int(np.argmin(vals))
            ridx, sidx = divmod(flat, k + 1)
            dp[i, j, 1] = vals[ridx, sidx] + W[i, j]
            root_c[i, j] = i + ridx
            sleft_c[i, j] = sidx
            # t > 1: first tree on a prefix, t-1 trees on the rest.
            for t in range(2, k + 1):
                if t > L:
                    break
                vec = dp[i, i : j, 1] + dp[i + 1 : j + 1, j, t - 1]
                lidx = int(np.argmin(vec))
                dp[i, j, t] = vec[lidx]
                cut_c[i, j, t] = i + lidx
            best = INF
            barg = 0
            for t in range(1, k + 1):
                if dp[i, j, t] < best:
                    best = int(dp[i, j, t])
                    barg = t
                dp2[i, j, t] = best
                dp2arg[i, j, t] = barg

    if _tables is not None:
        _tables["dp"] = dp
        _tables["dp2"] = dp2

    tree = KaryTree(n, k)
    _ensure_recursion(4 * n + 100)

    def build_one(i, j):
        r = int(root_c[i, j])
        s = int(sleft_c[i, j])
        if r - 1 >= i:
            for c in build_forest(i, r - 1, int(dp2arg[i, r - 1, min(s, k - 1)])):
                tree.attach(c, r, "L")
        if j >= r + 1:
            for c in build_forest(r + 1, j, int(dp2arg[r + 1, j, min(k - s, k - 1)])):
                tree.attach(c, r, "R")
        return r

    def build_forest(i, j, t):
        roots = []
        while t > 1:
            l = int(cut_c[i, j, t])
            roots.append(build_one(i, l))
            i, t = l + 1, t - 1
        roots.append(build_one(i, j))
        return roots

    tree.root = build_one(1, n)
    return OptResult(tree, int(dp[1, n, 1]))


def optimal_tree_uniform(n, k):
    """Same optimum as the generic DP on uniform demand, in O(n^2 k).

    Under uniform demand cost depends only on segment length, so the DP is
    indexed by length alone.
    """
    if k < 2:
        raise OptError("arity must be >= 2")
    if n < 1:
        raise OptError("n must be >= 1")
    dp = np.full((n + 1, k + 1), INF, dtype=np.int64)
    dp2 = np.full((n + 1, k + 1), INF, dtype=np.int64)
    dp[0, :] = 0
    dp2[0, :] = 0
    rootpos = np.zeros(n + 1, dtype=np.int64)
    sleft_c = np.zeros(n + 1, dtype=np.int64)
    cut_c = np.zeros((n + 1, k + 1), dtype=np.int64)
    dp2arg = np.zeros((n + 1, k + 1), dtype=np.int64)

    for l in range(1, n + 1):
        w = uniform_outflow(l, n)
        vals = np.empty((l, k + 1), dtype=np.int64)
        for s in range(k + 1):
            dl = min(s, k - 1)
            dr = min(k - s, k - 1)
            vals[:, s] = dp2[0:l, dl] + dp2[l - 1 :: -1, dr]
        flat = int(np.argmin(vals))
        ridx, sidx = divmod(flat, k + 1)
        dp[l, 1] = vals[ridx, sidx] + w
        rootpos[l] = ridx + 1
        sleft_c[l] = sidx
        for t in range(2, k + 1):
            if t > l:
                break
            vec = dp[1:l, 1] + dp[l - 1 : 0 : -1, t - 1]
            cidx = int(np.argmin(vec))
            dp[l, t] = vec[cidx]
            cut_c[l, t] = cidx + 1
        best = INF
        barg = 0
        for t in range(1, k + 1):
            if dp[l, t] < best:
                best = int(dp[l, t])
                barg = t
            dp2[l, t] = best
            dp2arg[l, t] = barg

    tree = KaryTree(n, k)
    _ensure_recursion(4 * n + 100)

    def build_one(i, j):
        l = j - i + 1
        r = i + int(rootpos[l]) - 1
        s = int(sleft_c[l])
        if r - 1 >= i:
            for c in build_forest(i, r - 1, int(dp2arg[r - i, min(s, k - 1)])):
                tree.attach(c, r, "L")
        if j >= r + 1:
            for c in build_forest(r + 1, j, int(dp2arg[j - r, min(k - s, k - 1)])):
                tree.attach(c, r, "R")
        return r

    def build_forest(i, j, t):
        roots = []
        while t > 1:
            c = int(cut_c[j - i + 1, t])
            roots.append(build_one(i, i + c - 1))
            i, t = i + c, t - 1
        roots.append(build_one(i, j))
        return roots

    tree.root = build_one(1, n)
    return OptResult(tree, int(dp[n, 1]))


def _enum_guard(n, k):
    limit = 12 if k == 2 else 8
    if n > limit:
        raise OptError("enumeration guarded to n <= %d for k=%d" % (limit, k))


def enumerate_trees(n, k):
    """Yield every k-ary search tree on keys 1..n exactly once.

    Each node holds at most k children with at most k-1 on either side of
    its key slot; for k=2 these are exactly the binary search trees.
    """
    _enum_guard(n, k)

    def gen_one(i, j):
        for r in range(i, j + 1):
            left_empty = r - 1 < i
            right_empty = j < r + 1
            max_dl = 0 if left_empty else min(k - 1, r - i)
            for d_l in range(0, 0 + 1) if left_empty else range(1, max_dl + 1):
                max_dr = 0 if right_empty else min(k - d_l, k - 1, j - r)
                for d_r in (
                    range(0, 0 + 1) if right_empty else range(1, max_dr + 1)
                ):
                    for ls in gen_forest(i, r - 1, d_l):
                        for rs in gen_forest(r + 1, j, d_r):
                            yield (r, ls, rs)

    def gen_forest(i, j, t):
        if i > j:
            yield ()
            return
        if t == 1:
            for tr in gen_one(i, j):
                yield (tr,)
            return
        for c in range(i, j - t + 2):
            for first in gen_one(i, c):
                for rest in gen_forest(c + 1, j, t - 1):
                    yield (first,) + rest

    def materialize(struct):
        tree = KaryTree(n, k)

        def place(node):
            r, ls, rs = node
            for child in ls:
                tree.attach(place(child), r, "L")
            for child in rs:
                tree.attach(place(child), r, "R")
            return r

        tree.root = place(struct)
        return tree

    for struct in gen_one(1, n):
        yield materialize(struct)


_BF_CACHE = {}


def _brute_tables(n, k):
    """Flattened distance matrices and parent arrays for all (n, k) trees."""
    key = (n, k)
    if key not in _BF_CACHE:
        parents = []
        stacks = []
        for tree in enumerate_trees(n, k):
            dists = np.empty((n, n), dtype=np.int64)
            for u in range(1, n + 1):
                dists[u - 1] = tree.distances_from(u)[1:]
            parents.append((tuple(tree.parent), tree.root))
            stacks.append(dists.ravel())
        _BF_CACHE[key] = (parents, np.vstack(stacks))
    return _BF_CACHE[key]


def brute_force_optimal(D, k):
    """Exhaustive argmin of TotalDistance over all k-ary search trees."""
    n = D.n
    _enum_guard(n, k)
    parents, stack = _brute_tables(n, k)
    costs = stack @ D.mat.ravel()
    idx = int(np.argmin(costs))
    parent, root = parents[idx]
    tree = KaryTree.from_parents(n, k, list(parent), root)
    return OptResult(tree, int(costs[idx]))
