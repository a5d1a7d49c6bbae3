"""Online self-adjusting strategies and static baselines.

Every strategy exposes `tree` (the current topology) and `serve(u, v)`,
which reports the routing cost on the pre-adjustment topology and the net
number of links changed by the adjustment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree_core import KaryTree, LinkTracker, TreeError, balanced_tree


@dataclass
class ServeOutcome:
    routing_cost: int
    adjustment_cost: int


class StaticStrategy:
    """Fixed topology: routing only, zero adjustment."""

    def __init__(self, tree):
        self.tree = tree

    def serve(self, u, v):
        return ServeOutcome(self.tree.distance(u, v), 0)


class SplayNet:
    """k-ary SplayNet: splay u to the lowest common ancestor, then splay v
    up to become a child of u."""

    def __init__(self, n, k, tree=None):
        self.tree = tree if tree is not None else balanced_tree(n, k)

    def serve(self, u, v):
        t = self.tree
        if u == v:
            t._check_key(u)
            return ServeOutcome(0, 0)
        routing = t.distance(u, v)
        tracker = LinkTracker()
        while t.lca(u, v) != u:
            t.rotate_up(u, tracker)
        while t.parent[v] != u:
            t.rotate_up(v, tracker)
        return ServeOutcome(routing, tracker.cost())


class CentroidSplayNet:
    """(k+1)-SplayNet: two pinned centroid nodes; 2k-1 self-adjusting
    subtrees with invariant key ranges."""

    def __init__(self, n, k):
        if n < k + 3:
            raise TreeError("centroid layout needs n >= k + 3")
        self.n = n
        self.k = k
        tree = KaryTree(n, k)
        blocks = self._blocks(n, k)
        # Ascending key layout: c1's k-1 subtrees, c1, then c2's k subtrees
        # with c2's key before the last one.
        c1_blocks = blocks[0]
        c2_blocks = blocks[1:]
        pos = 1
        ranges = []
        for size in c1_blocks:
            ranges.append((pos, pos + size - 1))
            pos += size
        c1 = pos
        pos += 1
        for size in c2_blocks[:-1]:
            ranges.append((pos, pos + size - 1))
            pos += size
        c2 = pos
        pos += 1
        ranges.append((pos, pos + c2_blocks[-1] - 1))

        self.c1, self.c2 = c1, c2
        self.subtree_of = {}
        tree.root = c1
        for idx, (lo, hi) in enumerate(ranges):
            if lo > hi:
                continue
            sub = balanced_tree(hi - lo + 1, k)
            offset = lo - 1
            for key in range(1, sub.n + 1):
                tree.parent[key + offset] = (
                    sub.parent[key] + offset if sub.parent[key] else 0
                )
                tree.left[key + offset] = [c + offset for c in sub.left[key]]
                tree.right[key + offset] = [c + offset for c in sub.right[key]]
                self.subtree_of[key + offset] = idx
            owner = c1 if hi < c1 else c2
            tree.attach(sub.root + offset, owner, "L" if hi < owner else "R")
        tree.attach(c2, c1, "R")
        self.tree = tree
        self.ranges = ranges

    @staticmethod
    def _blocks(n, k):
        """k+1 key blocks; block 0 is split further into c1's k-1 subtrees."""
        m = n - 2
        base, rem = divmod(m, k + 1)
        tops = [base + (1 if i < rem else 0) for i in range(k + 1)]
        b0 = tops[0]
        if k == 2:
            first = [b0]
        else:
            base2, rem2 = divmod(b0, k - 1)
            first = [base2 + (1 if i < rem2 else 0) for i in range(k - 1)]
        return [first] + tops[1:]

    def _pinned(self, u):
        return u == self.c1 or u == self.c2

    def _splay_to_subtree_root(self, u, tracker):
        t = self.tree
        while not self._pinned(t.parent[u]):
            t.rotate_up(u, tracker)

    def serve(self, u, v):
        t = self.tree
        if u == v:
            t._check_key(u)
            return ServeOutcome(0, 0)
        routing = t.distance(u, v)
        tracker = LinkTracker()
        su = self.subtree_of.get(u)
        sv = self.subtree_of.get(v)
        if su is not None and su == sv:
            # Same adjustable subtree: confined SplayNet serve. The subtree
            # root's pinned parent is never displaced.
            while t.lca(u, v) != u and not self._pinned(t.parent[u]):
                t.rotate_up(u, tracker)
            if t.lca(u, v) == u:
                while t.parent[v] != u:
                    t.rotate_up(v, tracker)
        else:
            if su is not None:
                self._splay_to_subtree_root(u, tracker)
            if sv is not None:
                self._splay_to_subtree_root(v, tracker)
        return ServeOutcome(routing, tracker.cost())
