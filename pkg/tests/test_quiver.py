"""Doubled tree quivers and path algebra basis enumeration.

The independent oracle is a recursive count of non-backtracking walks on
the underlying graph, written directly against the adjacency structure
(never through the quiver machinery).
"""

import random

import pytest

from kminusone.curves import DualGraph
from kminusone.errors import InfiniteDimensionalSuspected, NotATree
from kminusone.quiver import algebra_basis, burban_quiver, doubled_quiver


def random_tree(rng, max_v=12):
    v = rng.randint(1, max_v)
    edges = tuple((rng.randrange(i), i) for i in range(1, v))
    return DualGraph(v, edges)


def count_non_backtracking_walks(graph, max_len):
    """Oracle: walks in the doubled graph that never traverse an edge and
    immediately traverse it back; counts walks of length 0..max_len."""
    darts = []  # (source, target, edge_id)
    for eid, (u, v) in enumerate(graph.edges):
        darts.append((u, v, eid))
        darts.append((v, u, eid))
    total = graph.vertex_count  # trivial walks
    frontier = [(v, None) for v in range(graph.vertex_count)]
    for _ in range(max_len):
        nxt = []
        for at, last in frontier:
            for s, t, eid in darts:
                if s != at:
                    continue
                if last is not None and eid == last[2] and t == last[0]:
                    continue  # immediate backtrack of the same edge
                nxt.append((t, (s, t, eid)))
        total += len(nxt)
        frontier = nxt
        if not frontier:
            break
    return total


class TestBurbanQuiver:
    def test_a2_chain(self):
        q = burban_quiver(DualGraph(2, ((0, 1),)))
        assert q.vertices == 2
        assert [(a.name, a.source, a.target) for a in q.arrows] == \
            [("a", 0, 1), ("a*", 1, 0)]
        assert set(q.relations) == {(0, 1), (1, 0)}

    def test_single_vertex(self):
        q = burban_quiver(DualGraph(1))
        assert q.vertices == 1 and not q.arrows and not q.relations

    def test_star_with_three_leaves(self):
        q = burban_quiver(DualGraph(4, ((0, 1), (0, 2), (0, 3))))
        assert q.vertices == 4
        assert len(q.arrows) == 6
        assert len(q.relations) == 6

    def test_rejects_non_trees(self):
        with pytest.raises(NotATree):
            burban_quiver(DualGraph(1, ((0, 0),)))
        with pytest.raises(NotATree):
            burban_quiver(DualGraph(4, ((0, 1), (2, 3))))  # disconnected
        with pytest.raises(NotATree):
            burban_quiver(DualGraph(2, ((0, 1),), rational=(True, False)))


class TestAlgebraBasis:
    def test_a2_basis_exact(self):
        q = burban_quiver(DualGraph(2, ((0, 1),)))
        basis = algebra_basis(q)
        assert basis.dimension == 4
        assert set(basis.labels(q)) == {"e1", "e2", "a", "a*"}

    def test_single_vertex(self):
        q = burban_quiver(DualGraph(1))
        assert algebra_basis(q).dimension == 1

    def test_chain_of_three(self):
        q = burban_quiver(DualGraph(3, ((0, 1), (1, 2))))
        assert algebra_basis(q).dimension == 9

    def test_dimension_is_vertex_count_squared(self):
        rng = random.Random(8)
        for _ in range(40):
            tree = random_tree(rng)
            q = burban_quiver(tree)
            basis = algebra_basis(q)
            assert basis.dimension == tree.vertex_count ** 2
            assert basis.dimension == count_non_backtracking_walks(
                tree, tree.vertex_count - 1)

    def test_idempotents_and_degree_one_part(self):
        rng = random.Random(12)
        for _ in range(20):
            tree = random_tree(rng, max_v=8)
            q = burban_quiver(tree)
            basis = algebra_basis(q)
            by_len = {}
            for p in basis.paths:
                by_len[p.length] = by_len.get(p.length, 0) + 1
            assert by_len.get(0, 0) == tree.vertex_count
            assert by_len.get(1, 0) == 2 * tree.edge_count

    def test_doubled_cycle_suspected_infinite(self):
        cycle = DualGraph(3, ((0, 1), (1, 2), (0, 2)))
        q = doubled_quiver(cycle)
        with pytest.raises(InfiniteDimensionalSuspected):
            algebra_basis(q)

    def test_length_bound_validation(self):
        q = burban_quiver(DualGraph(3, ((0, 1), (1, 2))))
        with pytest.raises(ValueError):
            algebra_basis(q, length_bound=2)

    def test_paths_respect_relations(self):
        rng = random.Random(3)
        tree = random_tree(rng)
        q = burban_quiver(tree)
        forbidden = set(q.relations)
        for p in algebra_basis(q).paths:
            for x, y in zip(p.arrows, p.arrows[1:]):
                assert (x, y) not in forbidden


class TestForestQuiver:
    def test_forest_dimension_is_sum_of_squares(self):
        forest = DualGraph(5, ((0, 1), (2, 3)))
        q = doubled_quiver(forest)
        assert algebra_basis(q).dimension == 4 + 4 + 1
