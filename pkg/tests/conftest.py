import random

import numpy as np
import pytest

from santree.demand import DemandMatrix
from santree.tree_core import KaryTree


def rand_demand(rng, n, hi=3):
    mat = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if i != j:
                mat[i, j] = rng.randint(0, hi)
    return DemandMatrix(mat)


def rand_tree(rng, n, k):
    """A uniform-ish random valid k-ary search tree (random root-and-split)."""
    t = KaryTree(n, k)

    def build(i, j):
        r = rng.randint(i, j)
        t_left = []
        t_right = []
        if r > i:
            t_left = split(i, r - 1, rng.randint(1, min(k - 1, r - i)))
        if r < j:
            budget = k - len(t_left)
            t_right = split(r + 1, j, rng.randint(1, min(budget, k - 1, j - r)))
        for c in t_left:
            t.attach(c, r, "L")
        for c in t_right:
            t.attach(c, r, "R")
        return r

    def split(i, j, parts):
        if parts == 1:
            return [build(i, j)]
        cut = rng.randint(i, j - parts + 1)
        return [build(i, cut)] + split(cut + 1, j, parts - 1)

    t.root = build(1, n)
    assert t.validate()
    return t


def shape_complete(k, h):
    """Nested-tuple shape of the complete k-ary tree of height h."""
    if h == 0:
        return ()
    return tuple(shape_complete(k, h - 1) for _ in range(k))


def tree_from_shape(shape, k):
    """Materialize a nested-tuple shape with in-order keys; arity must fit k."""

    def size(nd):
        return 1 + sum(size(c) for c in nd)

    t = KaryTree(size(shape), k)
    counter = [0]

    def build(nd):
        c = len(nd)
        dl = c // 2
        left_roots = [build(x) for x in nd[:dl]]
        counter[0] += 1
        key = counter[0]
        right_roots = [build(x) for x in nd[dl:]]
        for r in left_roots:
            t.attach(r, key, "L")
        for r in right_roots:
            t.attach(r, key, "R")
        return key

    t.root = build(shape)
    assert t.validate()
    return t


def uniform_cost(tree):
    """TotalDistance under one-request-per-unordered-pair demand, in O(n).

    Uses the edge-potential identity: each edge cutting off a subtree of
    size s carries s*(n-s) paths.
    """
    n = tree.n
    total = 0
    for key in range(1, n + 1):
        if tree.parent[key]:
            s = len(tree.subtree_keys(key))
            total += s * (n - s)
    return total


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
