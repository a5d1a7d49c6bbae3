"""Centroid-style quasi-optimal trees for uniform workloads.

The layout is a central node joined to k+1 weakly-complete k-ary subtrees,
with every level of the whole tree full except possibly the last, whose
leaves are packed to the left. The emitted KaryTree is re-rooted at the
deepest leftmost leaf so the strict arity bound holds; re-rooting does not
change any pairwise distance.
"""

from __future__ import annotations

from .tree_core import KaryTree, TreeError


class QuasiOptError(Exception):
    pass


# -- shape helpers ----------------------------------------------------------
# A shape is a nested list: each node is a list of its child shapes.


def _wc_shape(k, h, leaves):
    """Weakly-complete k-ary shape: full through height h, plus `leaves`
    extra nodes on level h+1 packed leftmost."""
    if h < 0:
        return []
    cap_last = k**h
    if not (0 <= leaves <= cap_last * k):
        raise QuasiOptError("cannot place %d leaves under height %d" % (leaves, h))
    if h == 0:
        return [[] for _ in range(leaves)]
    children = []
    cap_child = k ** (h - 1) * k
    for _ in range(k):
        take = min(leaves, cap_child)
        children.append(_wc_shape(k, h - 1, take))
        leaves -= take
    return children


def _shape_size(shape):
    return 1 + sum(_shape_size(c) for c in shape)


def quasi_optimal_shape(n, k):
    """Central root plus k+1 weakly-complete subtrees, leaves leftmost."""
    if n < 1:
        raise QuasiOptError("n must be >= 1")
    if k < 2:
        raise QuasiOptError("arity must be >= 2")
    if n == 1:
        return []
    # Height h of the whole layout: level d >= 1 holds (k+1) * k^(d-1) nodes.
    h = 1
    full = 1 + (k + 1)
    while full < n:
        h += 1
        full += (k + 1) * k ** (h - 1)
    full_below = 1 + (k + 1) * (k ** (h - 1) - 1) // (k - 1)
    leaves = n - full_below  # 0 < leaves <= (k+1) * k^(h-1)
    subtrees = []
    cap = k ** (h - 1)
    for _ in range(k + 1):
        if h == 1:
            if leaves > 0:
                subtrees.append([])
                leaves -= 1
        else:
            take = min(leaves, cap)
            subtrees.append(_wc_shape(k, h - 2, take))
            leaves -= take
    return subtrees


def _tree_from_adjacency(n, k, adj, root):
    """Orient an undirected tree at `root`; keys by preorder position.

    Every child lands in its parent's right group, so each node's key is the
    minimum of its subtree and child segments are consecutive ascending.
    """
    tree = KaryTree(n, k, root=1)
    counter = [0]

    def assign(u, parent_key):
        counter[0] += 1
        key = counter[0]
        if parent_key:
            tree.attach(key, parent_key, "R")
        for v in adj[u]:
            adj[v].remove(u)
            assign(v, key)

    import sys

    if sys.getrecursionlimit() < 2 * n + 100:
        sys.setrecursionlimit(2 * n + 100)
    assign(root, 0)
    return tree


def build_quasi_optimal(n, k):
    """Quasi-optimal k-ary search tree on keys 1..n, built in O(n)."""
    shape = quasi_optimal_shape(n, k)
    # Flatten the shape into an adjacency list (node 0 is the central root).
    adj = [[] for _ in range(n)]
    counter = [0]
    deepest = [0, 0]  # (depth, node) of the first-visited deepest leaf

    def walk(children, parent_id, depth):
        for child in children:
            counter[0] += 1
            cid = counter[0]
            adj[parent_id].append(cid)
            adj[cid].append(parent_id)
            if depth > deepest[0]:
                deepest[0], deepest[1] = depth, cid
            walk(child, cid, depth + 1)

    import sys

    if sys.getrecursionlimit() < 2 * n + 100:
        sys.setrecursionlimit(2 * n + 100)
    walk(shape, 0, 1)
    if counter[0] != n - 1:
        raise QuasiOptError("shape size mismatch: %d != %d" % (counter[0] + 1, n))
    return _tree_from_adjacency(n, k, adj, deepest[1])


# -- structural predicates ---------------------------------------------------


def _levels(tree, r):
    """Node lists per depth within the subtree rooted at r, left-to-right."""
    levels = []
    level = [r]
    while level:
        levels.append(level)
        nxt = []
        for u in level:
            nxt.extend(tree.left[u])
            nxt.extend(tree.right[u])
        level = nxt
    return levels


def is_weakly_complete(tree, r):
    """True iff every level of r's subtree except the last is fully filled."""
    levels = _levels(tree, r)
    k = tree.k
    for d in range(len(levels) - 1):
        if len(levels[d]) != k**d:
            return False
    return True


def _relabel_inorder(tree):
    """Reassign keys 1..n by in-order position, keeping the structure."""
    n, k = tree.n, tree.k
    new_key = {}
    counter = [0]
    stack = [(tree.root, False)]
    # Iterative in-order: left group, node, right group.
    while stack:
        u, expanded = stack.pop()
        if expanded:
            counter[0] += 1
            new_key[u] = counter[0]
            continue
        for c in reversed(tree.right[u]):
            stack.append((c, False))
        stack.append((u, True))
        for c in reversed(tree.left[u]):
            stack.append((c, False))
    out = KaryTree(n, k, root=new_key[tree.root])
    for u in range(1, n + 1):
        nu = new_key[u]
        out.parent[nu] = new_key[tree.parent[u]] if tree.parent[u] else 0
        out.left[nu] = [new_key[c] for c in tree.left[u]]
        out.right[nu] = [new_key[c] for c in tree.right[u]]
    return out


def push_up(tree, from_subtree, to_subtree):
    """Move one last-level leaf between sibling weakly-complete subtrees.

    Keys are reassigned by in-order position afterwards, so the result is a
    valid search tree; returns a new tree, the input is untouched.
    """
    t = tree.copy()
    pf, pt = t.parent[from_subtree], t.parent[to_subtree]
    if not pf or pf != pt:
        raise QuasiOptError("subtrees must be siblings")
    if not is_weakly_complete(t, from_subtree) or not is_weakly_complete(t, to_subtree):
        raise QuasiOptError("both subtrees must be weakly-complete")
    h2 = t.height(from_subtree)
    levels_to = _levels(t, to_subtree)
    ht = len(levels_to) - 1
    if h2 <= ht:
        raise QuasiOptError("push-up needs the source strictly taller (h2 > h1)")
    # Destination: first free slot on to's last level, else start a new level.
    slot = None
    if ht >= 1:
        for cand in levels_to[ht - 1]:
            if t.arity(cand) < t.k:
                slot = cand
                break
    if slot is None:
        slot = levels_to[ht][0]
    leaf = _levels(t, from_subtree)[h2][-1]
    from .tree_core import LinkTracker

    tracker = LinkTracker()
    t._detach(leaf, tracker)
    side = "L" if leaf < slot else "R"
    t._attach(leaf, slot, side, None, tracker)
    return _relabel_inorder(t)


def pack_leaves_left(tree):
    """Regroup last-level leaves into the leftmost free slots.

    Requires all levels full except possibly the last. TotalDistance under
    uniform demand never increases. Returns a new tree.
    """
    t = tree.copy()
    levels = _levels(t, t.root)
    k = t.k
    h = len(levels) - 1
    for d in range(h):
        if len(levels[d]) != k**d:
            raise QuasiOptError("level %d is not fully filled" % d)
    if h == 0:
        return t
    leaves = levels[h]
    parents = levels[h - 1]
    quota = []
    remaining = len(leaves)
    for _ in parents:
        take = min(k, remaining)
        quota.append(take)
        remaining -= take
    current = [t.arity(p) for p in parents]
    if current == quota:
        return t
    from .tree_core import LinkTracker

    tracker = LinkTracker()
    for leaf in leaves:
        t._detach(leaf, tracker)
    it = iter(leaves)
    for p, q in zip(parents, quota):
        for _ in range(q):
            t._attach(next(it), p, "R", None, tracker)
    return _relabel_inorder(t)
