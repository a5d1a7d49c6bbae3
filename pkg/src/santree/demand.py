"""Demand matrices, prefix/outflow tables and the weighted-distance objective."""

from __future__ import annotations

import numpy as np


class DemandError(Exception):
    pass


class DemandMatrix:
    """n x n nonnegative request counts, zero diagonal. Keys are 1-based."""

    def __init__(self, mat):
        mat = np.asarray(mat, dtype=np.int64)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
            raise DemandError("demand matrix must be square")
        if (mat < 0).any():
            raise DemandError("demand entries must be nonnegative")
        if np.diagonal(mat).any():
            raise DemandError("demand diagonal must be zero")
        self.mat = mat

    @property
    def n(self):
        return self.mat.shape[0]

    def get(self, u, v):
        return int(self.mat[u - 1, v - 1])

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros((n, n), dtype=np.int64))

    @classmethod
    def from_pairs(cls, n, pairs):
        """pairs: iterable of (u, v, count)."""
        mat = np.zeros((n, n), dtype=np.int64)
        for u, v, c in pairs:
            mat[u - 1, v - 1] += c
        return cls(mat)

    @classmethod
    def from_trace(cls, trace):
        mat = np.zeros((trace.n, trace.n), dtype=np.int64)
        for u, v in trace.requests:
            if u != v:
                mat[u - 1, v - 1] += 1
        return cls(mat)

    def dumps(self):
        """File format: header "n", then "u v count" for each nonzero entry."""
        lines = [str(self.n)]
        for u, v in zip(*np.nonzero(self.mat)):
            lines.append("%d %d %d" % (u + 1, v + 1, self.mat[u, v]))
        return "\n".join(lines) + "\n"

    def dump(self, path):
        with open(path, "w") as f:
            f.write(self.dumps())

    @classmethod
    def loads(cls, text):
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if not lines:
            raise DemandError("empty demand file")
        n = int(lines[0])
        pairs = []
        for ln in lines[1:]:
            u, v, c = (int(x) for x in ln.split())
            pairs.append((u, v, c))
        return cls.from_pairs(n, pairs)

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.loads(f.read())


class PrefixTables:
    """F[u][v]: requests between u and [v, n]; B[u][v]: between u and [1, v].

    Stored as (n+2) x (n+2) arrays so that F[u][n+1] = 0 and B[u][0] = 0.
    """

    def __init__(self, F, B):
        self.F = F
        self.B = B


def uniform_demand(n):
    """One request per unordered pair: upper-triangular ones."""
    if n < 1:
        raise DemandError("n must be >= 1")
    mat = np.triu(np.ones((n, n), dtype=np.int64), 1)
    return DemandMatrix(mat)


def uniform_outflow(l, n):
    """Requests leaving any key segment of length l under uniform demand."""
    if not (1 <= l <= n):
        raise DemandError("need 1 <= l <= n")
    return l * (n - l)


def total_distance(D, T):
    """Sum over ordered pairs of tree distance weighted by demand."""
    if D.n != T.n:
        raise DemandError("demand size %d != tree size %d" % (D.n, T.n))
    total = 0
    mat = D.mat
    for u in range(1, T.n + 1):
        row = mat[u - 1]
        if not row.any():
            continue
        dist = np.asarray(T.distances_from(u)[1:], dtype=np.int64)
        total += int(row @ dist)
    return total


def edge_potential(D, T, e):
    """Total demand whose unique path crosses edge e = (a, b)."""
    a, b = e
    if T.parent[a] == b:
        child = a
    elif T.parent[b] == a:
        child = b
    else:
        raise DemandError("edge %r not in tree" % (e,))
    inside = np.asarray(T.subtree_keys(child), dtype=np.int64) - 1
    mask = np.zeros(T.n, dtype=bool)
    mask[inside] = True
    mat = D.mat
    return int(mat[np.ix_(mask, ~mask)].sum() + mat[np.ix_(~mask, mask)].sum())


def compute_prefix_tables(D):
    """Running-difference computation of F and B in O(n^2)."""
    n = D.n
    S = D.mat + D.mat.T  # S[u-1][w-1] = D[u][w] + D[w][u]
    F = np.zeros((n + 2, n + 2), dtype=np.int64)
    B = np.zeros((n + 2, n + 2), dtype=np.int64)
    for u in range(1, n + 1):
        F[u][n] = S[u - 1][n - 1] if u < n else 0
        for v in range(n - 1, u, -1):
            F[u][v] = F[u][v + 1] + S[u - 1][v - 1]
        B[u][1] = S[u - 1][0] if u > 1 else 0
        for v in range(2, u):
            B[u][v] = B[u][v - 1] + S[u - 1][v - 1]
    return PrefixTables(F, B)


def compute_outflow(D, P=None):
    """W[i][j]: requests crossing the boundary of segment [i, j]."""
    if P is None:
        P = compute_prefix_tables(D)
    n = D.n
    F, B = P.F, P.B
    W = np.zeros((n + 2, n + 2), dtype=np.int64)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            W[i][j] = F[i : j + 1, j + 1].sum() + B[i : j + 1, i - 1].sum()
    return W
