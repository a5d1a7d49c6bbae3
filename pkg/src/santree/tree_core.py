"""k-ary search tree topology: representation, queries and the rotation primitive.

Trees live on the fixed key set 1..n. Each node keeps two ordered child
groups: left children (whole subtrees below the node's key) and right
children (whole subtrees above it). Within a group, children are stored in
ascending segment order, so list position encodes the child order.
"""

from __future__ import annotations

from collections import deque


class TreeError(Exception):
    """Structural violation or bad node id."""


class LinkTracker:
    """Accumulates net link changes (added + removed undirected edges).

    Removing and re-adding the same edge cancels out, so cost() equals the
    symmetric difference of the before/after edge sets.
    """

    __slots__ = ("added", "removed")

    def __init__(self):
        self.added = set()
        self.removed = set()

    def link(self, a, b):
        e = (a, b) if a < b else (b, a)
        if e in self.removed:
            self.removed.discard(e)
        else:
            self.added.add(e)

    def unlink(self, a, b):
        e = (a, b) if a < b else (b, a)
        if e in self.added:
            self.added.discard(e)
        else:
            self.removed.add(e)

    def cost(self):
        return len(self.added) + len(self.removed)


class KaryTree:
    """Rooted search tree over keys 1..n with arity <= k."""

    def __init__(self, n, k, root=None):
        if n < 1:
            raise TreeError("need at least one node")
        if k < 2:
            raise TreeError("arity must be >= 2")
        self.n = n
        self.k = k
        self.root = root if root is not None else 1
        self.parent = [0] * (n + 1)
        self.left = [[] for _ in range(n + 1)]
        self.right = [[] for _ in range(n + 1)]

    # -- basic structure -------------------------------------------------

    def _check_key(self, u):
        if not (1 <= u <= self.n):
            raise TreeError("unknown node id %r" % (u,))

    def children(self, u):
        return self.left[u] + self.right[u]

    def arity(self, u):
        return len(self.left[u]) + len(self.right[u])

    def attach(self, child, parent, side, pos=None):
        """Place `child` under `parent` in the given group ('L' or 'R')."""
        group = self.left[parent] if side == "L" else self.right[parent]
        if pos is None:
            pos = len(group)
        group.insert(pos, child)
        self.parent[child] = parent

    def depth(self, u):
        self._check_key(u)
        d = 0
        p = self.parent[u]
        while p:
            d += 1
            u = p
            p = self.parent[u]
        return d

    def edges(self):
        """Undirected edge set as (min, max) pairs."""
        return {
            (u, self.parent[u]) if u < self.parent[u] else (self.parent[u], u)
            for u in range(1, self.n + 1)
            if self.parent[u]
        }

    def copy(self):
        t = KaryTree(self.n, self.k, self.root)
        t.parent = list(self.parent)
        t.left = [list(g) for g in self.left]
        t.right = [list(g) for g in self.right]
        return t

    def subtree_keys(self, r):
        self._check_key(r)
        out = []
        stack = [r]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.left[u])
            stack.extend(self.right[u])
        return out

    def height(self, r=None):
        """Height in edges of the subtree rooted at r (default: whole tree)."""
        r = self.root if r is None else r
        h = 0
        level = [r]
        while True:
            nxt = []
            for u in level:
                nxt.extend(self.left[u])
                nxt.extend(self.right[u])
            if not nxt:
                return h
            h += 1
            level = nxt

    # -- queries ---------------------------------------------------------

    def lca(self, u, v):
        self._check_key(u)
        self._check_key(v)
        seen = set()
        x = u
        while x:
            seen.add(x)
            x = self.parent[x]
        x = v
        while x not in seen:
            x = self.parent[x]
        return x

    def distance(self, u, v):
        if u == v:
            self._check_key(u)
            return 0
        a = self.lca(u, v)
        d = 0
        x = u
        while x != a:
            x = self.parent[x]
            d += 1
        x = v
        while x != a:
            x = self.parent[x]
            d += 1
        return d

    def distances_from(self, u):
        """Distance in edges from u to every node; index 0 unused."""
        self._check_key(u)
        dist = [-1] * (self.n + 1)
        dist[u] = 0
        q = deque([u])
        while q:
            x = q.popleft()
            nxt = self.left[x] + self.right[x]
            p = self.parent[x]
            if p:
                nxt.append(p)
            for y in nxt:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    q.append(y)
        return dist

    def tdr(self, r):
        """Sum of distances from every node of r's subtree to r."""
        self._check_key(r)
        total = 0
        level = [r]
        d = 0
        while level:
            total += d * len(level)
            nxt = []
            for u in level:
                nxt.extend(self.left[u])
                nxt.extend(self.right[u])
            level = nxt
            d += 1
        return total

    def centroid(self):
        """A node whose removal leaves components of size <= n/2.

        Ties broken by smallest key.
        """
        n = self.n
        size = [0] * (n + 1)
        order = []
        stack = [self.root]
        while stack:
            u = stack.pop()
            order.append(u)
            stack.extend(self.left[u])
            stack.extend(self.right[u])
        for u in reversed(order):
            size[u] = 1 + sum(size[c] for c in self.left[u] + self.right[u])
        best, best_key = None, None
        for u in range(1, n + 1):
            worst = n - size[u]
            for c in self.left[u] + self.right[u]:
                if size[c] > worst:
                    worst = size[c]
            if worst <= n // 2 and (best is None or u < best_key):
                best, best_key = u, u
        if best is None:
            raise TreeError("no centroid found (tree is inconsistent)")
        return best

    # -- validation --------------------------------------------------------

    def validate(self, diagnostics=None):
        """True iff every structural invariant holds.

        Checks: single root, consistent parent/child links, arity <= k,
        ordered child groups, and the contiguous-segment search property.
        Violations are appended to `diagnostics` when given.
        """
        msgs = diagnostics if diagnostics is not None else []

        def fail(msg):
            msgs.append(msg)
            return False

        n = self.n
        if not (1 <= self.root <= n):
            return fail("root %r out of range" % (self.root,))
        if self.parent[self.root] != 0:
            return fail("root %d has a parent" % self.root)
        seen = [False] * (n + 1)
        order = []
        stack = [self.root]
        while stack:
            u = stack.pop()
            if seen[u]:
                return fail("node %d reached twice" % u)
            seen[u] = True
            order.append(u)
            if len(self.left[u]) + len(self.right[u]) > self.k:
                return fail("node %d exceeds arity %d" % (u, self.k))
            for c in self.left[u] + self.right[u]:
                if not (1 <= c <= n):
                    return fail("node %d has out-of-range child %r" % (u, c))
                if self.parent[c] != u:
                    return fail("parent link of %d inconsistent" % c)
                stack.append(c)
        if not all(seen[1:]):
            missing = next(i for i in range(1, n + 1) if not seen[i])
            return fail("node %d unreachable from root" % missing)

        # Post-order segment check: every subtree spans a contiguous key
        # range and child segments are ordered around the node's key.
        lo = [0] * (n + 1)
        hi = [0] * (n + 1)
        cnt = [0] * (n + 1)
        for u in reversed(order):
            lo[u] = hi[u] = u
            cnt[u] = 1
            prev_hi = None
            for c in self.left[u]:
                if hi[c] >= u:
                    return fail("left child %d of %d holds keys >= %d" % (c, u, u))
                if prev_hi is not None and lo[c] <= prev_hi:
                    return fail("child order violated at node %d (child %d)" % (u, c))
                prev_hi = hi[c]
                lo[u] = min(lo[u], lo[c])
                cnt[u] += cnt[c]
            if prev_hi is not None and prev_hi >= u:
                return fail("left group of %d overlaps its key" % u)
            prev_hi = u
            for c in self.right[u]:
                if lo[c] <= u:
                    return fail("right child %d of %d holds keys <= %d" % (c, u, u))
                if lo[c] <= prev_hi:
                    return fail("child order violated at node %d (child %d)" % (u, c))
                prev_hi = hi[c]
                hi[u] = max(hi[u], hi[c])
                cnt[u] += cnt[c]
            if hi[u] - lo[u] + 1 != cnt[u]:
                return fail("subtree of %d is not a contiguous segment" % u)
        return True

    # -- rotation ----------------------------------------------------------

    def _detach(self, u, tracker):
        p = self.parent[u]
        group = self.left[p] if u < p else self.right[p]
        group.remove(u)
        self.parent[u] = 0
        tracker.unlink(u, p)

    def _attach(self, u, p, side, pos, tracker):
        self.attach(u, p, side, pos)
        tracker.link(u, p)

    def _spill(self, node, side, tracker):
        """Push the outermost child of `node` (on `side`) one level down.

        Cascades toward the leaves until all arities are <= k.
        """
        stack = [node]
        while stack:
            node = stack[-1]
            if self.arity(node) <= self.k:
                stack.pop()
                continue
            s = side
            if s == "L" and len(self.left[node]) < 2:
                s = "R"
            elif s == "R" and len(self.right[node]) < 2:
                s = "L"
            if s == "L":
                x = self.left[node][0]
                neighbor = self.left[node][1]
                self._detach(x, tracker)
                self._attach(x, neighbor, "L", 0, tracker)
            else:
                x = self.right[node][-1]
                neighbor = self.right[node][-2]
                self._detach(x, tracker)
                self._attach(x, neighbor, "R", None, tracker)
            stack.append(neighbor)

    def rotate_up(self, u, tracker=None):
        """Promote u over its parent (generalized zig); returns link changes.

        The promoted node takes its parent's slot; the parent drops one
        level; sibling subtrees on the far side of u move with u; arity
        overflow is relieved by transferring u's innermost children back to
        the parent and, failing that, by a spill chain toward the leaves.
        """
        self._check_key(u)
        p = self.parent[u]
        if not p:
            raise TreeError("cannot rotate the root")
        own = tracker is None
        if own:
            tracker = LinkTracker()
        g = self.parent[p]
        k = self.k

        if u < p:
            idx = self.left[p].index(u)
            movers = self.left[p][:idx]
            for m in movers:
                self._detach(m, tracker)
            self._detach(u, tracker)
            if g:
                ggroup = self.left[g] if p < g else self.right[g]
                gside = "L" if p < g else "R"
                gpos = ggroup.index(p)
                self._detach(p, tracker)
                self._attach(u, g, gside, gpos, tracker)
            else:
                self.root = u
            self._attach(p, u, "R", None, tracker)
            for i, m in enumerate(movers):
                self._attach(m, u, "L", i, tracker)
            # Hand u's largest right children (all between u and p's key)
            # back to p while both arities allow it.
            while self.arity(u) > k and len(self.right[u]) > 1 and self.arity(p) < k:
                c = self.right[u][-2]
                self._detach(c, tracker)
                self._attach(c, p, "L", 0, tracker)
            if self.arity(u) > k:
                self._spill(u, "L", tracker)
        else:
            idx = self.right[p].index(u)
            movers = self.right[p][idx + 1 :]
            for m in movers:
                self._detach(m, tracker)
            self._detach(u, tracker)
            if g:
                ggroup = self.left[g] if p < g else self.right[g]
                gside = "L" if p < g else "R"
                gpos = ggroup.index(p)
                self._detach(p, tracker)
                self._attach(u, g, gside, gpos, tracker)
            else:
                self.root = u
            self._attach(p, u, "L", 0, tracker)
            for m in movers:
                self._attach(m, u, "R", None, tracker)
            while self.arity(u) > k and len(self.left[u]) > 1 and self.arity(p) < k:
                c = self.left[u][1]
                self._detach(c, tracker)
                self._attach(c, p, "R", None, tracker)
            if self.arity(u) > k:
                self._spill(u, "R", tracker)
        return tracker.cost() if own else None

    # -- serialization -------------------------------------------------------

    def dumps(self):
        """Text format: header "n k root", then one "key:parent" line per node."""
        lines = ["%d %d %d" % (self.n, self.k, self.root)]
        for key in range(1, self.n + 1):
            lines.append("%d:%d" % (key, self.parent[key]))
        return "\n".join(lines) + "\n"

    def dump(self, path):
        with open(path, "w") as f:
            f.write(self.dumps())

    @classmethod
    def loads(cls, text):
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        try:
            n, k, root = (int(x) for x in lines[0].split())
        except (ValueError, IndexError):
            raise TreeError("bad tree header: %r" % (lines[:1],))
        if len(lines) != n + 1:
            raise TreeError("expected %d node lines, got %d" % (n, len(lines) - 1))
        parent = [0] * (n + 1)
        for ln in lines[1:]:
            key_s, _, par_s = ln.partition(":")
            key, par = int(key_s), int(par_s)
            if not (1 <= key <= n) or not (0 <= par <= n):
                raise TreeError("bad node line %r" % ln)
            parent[key] = par
        return cls.from_parents(n, k, parent, root)

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.loads(f.read())

    @classmethod
    def from_parents(cls, n, k, parent, root):
        """Rebuild from a parent array; child order by key within each group."""
        t = cls(n, k, root)
        t.parent = list(parent)
        for key in range(1, n + 1):
            p = parent[key]
            if p:
                (t.left[p] if key < p else t.right[p]).append(key)
        for u in range(1, n + 1):
            t.left[u].sort()
            t.right[u].sort()
        return t


def edge_diff(a, b):
    """Number of links added or removed between edge sets a and b."""
    return len(a ^ b)


def balanced_tree(n, k):
    """Deterministic balanced k-ary search tree on keys 1..n."""
    t = KaryTree(n, k)

    def build(i, j):
        size = j - i + 1
        if size == 1:
            return i
        c = min(k, size - 1)
        base, rem = divmod(size - 1, c)
        sizes = [base + 1 if x < rem else base for x in range(c)]
        n_left = c // 2 if c > 1 else (1 if sizes[0] else 0)
        if c == 1:
            n_left = 0
        r = i + sum(sizes[:n_left])
        pos = i
        roots = []
        for idx, s in enumerate(sizes):
            if idx == n_left:
                pos += 1  # skip the root's own key slot
            roots.append(build(pos, pos + s - 1))
            pos += s
        for idx, c_root in enumerate(roots):
            t.attach(c_root, r, "L" if idx < n_left else "R")
        return r

    t.root = build(1, n)
    return t
