import random

import numpy as np
import pytest

from santree.demand import (
    DemandError,
    DemandMatrix,
    compute_outflow,
    compute_prefix_tables,
    edge_potential,
    total_distance,
    uniform_demand,
    uniform_outflow,
)
from santree.tree_core import KaryTree

from conftest import rand_demand, rand_tree


def comb_tree():
    # root 1, right child 3 with children {2, 4}
    t = KaryTree(4, 2)
    t.root = 1
    t.attach(3, 1, "R")
    t.attach(2, 3, "L")
    t.attach(4, 3, "R")
    return t


class TestDemandMatrix:
    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(DemandError):
            DemandMatrix(np.eye(3, dtype=np.int64))

    def test_rejects_negative(self):
        mat = np.zeros((2, 2), dtype=np.int64)
        mat[0, 1] = -1
        with pytest.raises(DemandError):
            DemandMatrix(mat)

    def test_round_trip(self, rng):
        D = rand_demand(rng, 6)
        back = DemandMatrix.loads(D.dumps())
        assert (back.mat == D.mat).all()


class TestTotalDistance:
    def test_single_node(self):
        t = KaryTree(1, 2)
        t.root = 1
        assert total_distance(uniform_demand(1), t) == 0

    def test_any_three_node_bst_is_four(self):
        from santree.offline_opt import enumerate_trees

        for t in enumerate_trees(3, 2):
            assert total_distance(uniform_demand(3), t) == 4

    def test_comb_example(self):
        assert total_distance(uniform_demand(4), comb_tree()) == 9

    def test_size_mismatch(self):
        with pytest.raises(DemandError):
            total_distance(uniform_demand(3), comb_tree())


class TestEdgePotential:
    def test_two_nodes(self):
        mat = np.zeros((2, 2), dtype=np.int64)
        mat[0, 1] = 5
        D = DemandMatrix(mat)
        t = KaryTree(2, 2)
        t.root = 1
        t.attach(2, 1, "R")
        assert edge_potential(D, t, (1, 2)) == 5

    def test_uniform_leaf_edge(self):
        t = comb_tree()
        # edge (3,4) cuts off a single-node subtree: 1 * (4 - 1)
        assert edge_potential(uniform_demand(4), t, (3, 4)) == 3

    def test_missing_edge(self):
        with pytest.raises(DemandError):
            edge_potential(uniform_demand(4), comb_tree(), (1, 4))

    def test_sum_over_edges_equals_total_distance(self, rng):
        for _ in range(200):
            n = rng.randint(2, 30)
            D = rand_demand(rng, n)
            t = rand_tree(rng, n, rng.choice([2, 3, 4]))
            by_edges = sum(edge_potential(D, t, e) for e in t.edges())
            assert by_edges == total_distance(D, t)


class TestPrefixTables:
    def test_all_zero(self):
        D = DemandMatrix(np.zeros((4, 4), dtype=np.int64))
        P = compute_prefix_tables(D)
        assert not P.F.any() and not P.B.any()

    def test_hand_example(self):
        mat = np.zeros((3, 3), dtype=np.int64)
        mat[0, 1] = 1
        mat[0, 2] = 1
        P = compute_prefix_tables(DemandMatrix(mat))
        assert P.F[1, 2] == 2
        assert P.F[1, 3] == 1

    def test_direct_summation_oracle(self, rng):
        for _ in range(30):
            n = rng.randint(1, 12)
            D = rand_demand(rng, n)
            P = compute_prefix_tables(D)
            for u in range(1, n + 1):
                # defined for v > u (F) and v < u (B); boundaries are zero
                assert P.F[u, n + 1] == 0
                assert P.B[u, 0] == 0
                for v in range(u + 1, n + 1):
                    f = sum(D.mat[u - 1, w - 1] + D.mat[w - 1, u - 1] for w in range(v, n + 1))
                    assert P.F[u, v] == f
                for v in range(1, u):
                    b = sum(D.mat[u - 1, w - 1] + D.mat[w - 1, u - 1] for w in range(1, v + 1))
                    assert P.B[u, v] == b


class TestOutflow:
    def test_full_segment_is_zero(self, rng):
        for n in (1, 4, 9):
            W = compute_outflow(rand_demand(rng, n))
            assert W[1, n] == 0

    def test_uniform_hand_example(self):
        W = compute_outflow(uniform_demand(4))
        assert W[2, 3] == 4

    def test_quadruple_loop_oracle(self, rng):
        for _ in range(15):
            n = rng.randint(1, 15)
            D = rand_demand(rng, n)
            W = compute_outflow(D)
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    expect = 0
                    for u in range(1, n + 1):
                        if i <= u <= j:
                            continue
                        for v in range(i, j + 1):
                            expect += D.mat[u - 1, v - 1] + D.mat[v - 1, u - 1]
                    assert W[i, j] == expect


class TestUniform:
    def test_n2(self):
        D = uniform_demand(2)
        assert D.mat[0, 1] == 1 and D.mat.sum() == 1

    def test_n4_count(self):
        assert uniform_demand(4).mat.sum() == 6

    def test_outflow_closed_form(self):
        assert uniform_outflow(5, 5) == 0
        assert uniform_outflow(1, 5) == 4

    def test_position_independence(self):
        # closed form vs the
        # generic outflow on uniform demand, for every segment
        for n in (1, 2, 7, 33, 64):
            W = compute_outflow(uniform_demand(n))
            for l in range(1, n + 1):
                for i in range(1, n - l + 2):
                    assert W[i, i - 1 + l] == uniform_outflow(l, n)
