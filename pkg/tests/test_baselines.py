import pytest

from antclust.baselines import WcaParams, highest_degree, kconid, lowest_id, wca, wca_node_weight
from antclust.clustering import is_dominating, is_k_dominating, validate_clustering
from antclust.errors import ConfigurationError

from conftest import (
    edgeless_topology,
    make_topology,
    path_topology,
    random_topology,
    star_topology,
)


def heads_independent(t, heads):
    heads = sorted(heads)
    return all(v not in t.neighbors(u) for i, u in enumerate(heads) for v in heads[i + 1:])


class TestLowestId:
    def test_path3(self, path3):
        c = lowest_id(path3)
        assert c.heads == frozenset({0, 2})
        assert c.assignment == {1: 0}

    def test_star_center_zero(self):
        c = lowest_id(star_topology(4))
        assert c.heads == frozenset({0})
        assert set(c.assignment) == {1, 2, 3, 4}

    def test_edgeless(self):
        c = lowest_id(edgeless_topology(5))
        assert c.heads == frozenset(range(5))

    def test_head_id_below_member_ids(self):
        for seed in range(8):
            t = random_topology(40, 150, 40, seed=seed)
            c = lowest_id(t)
            for m, h in c.assignment.items():
                assert h < m


class TestHighestDegree:
    def test_star_center_wins(self):
        c = highest_degree(star_topology(5))
        assert c.heads == frozenset({0})
        assert set(c.assignment.values()) == {0}

    def test_disjoint_edges_tie_break(self):
        t = make_topology([(0, 0), (1, 0), (10, 0), (11, 0)], 1.5)
        c = highest_degree(t)
        assert c.heads == frozenset({0, 2})

    def test_edgeless(self):
        assert highest_degree(edgeless_topology(4)).heads == frozenset(range(4))


class TestKconid:
    def test_k1_matches_highest_degree(self):
        for seed in range(10):
            t = random_topology(35, 150, 45, seed=seed)
            assert kconid(t, 1).heads == highest_degree(t).heads

    def test_equal_connectivity_prefers_lower_id(self):
        t = make_topology([(0, 0), (1, 0)], 1.5)
        assert kconid(t, 1).heads == frozenset({0})

    def test_path5_k2_single_head(self):
        t = path_topology(5)
        c = kconid(t, 2)
        assert c.heads == frozenset({2})
        assert c.hops == 2
        assert set(c.assignment) == {0, 1, 3, 4}
        assert is_k_dominating(t, c.heads, 2)

    def test_k_dominating_on_random_graphs(self):
        for seed in range(5):
            t = random_topology(40, 200, 40, seed=seed)
            for k in (1, 2, 3):
                c = kconid(t, k)
                assert is_k_dominating(t, c.heads, k)

    def test_invalid_k(self, path3):
        with pytest.raises(ConfigurationError):
            kconid(path3, 0)


class TestWcaWeight:
    def test_zero_degree_difference(self, path3):
        p = WcaParams(w1=1, w2=0, w3=0, w4=0, ideal_degree=2)
        assert wca_node_weight(path3, 1, p) == 0.0

    def test_distance_sum(self):
        t = make_topology([(0, 0), (3, 0), (0, 4)], 4.5)
        p = WcaParams(w1=0, w2=1, w3=0, w4=0)
        assert wca_node_weight(t, 0, p) == pytest.approx(7.0)

    def test_mobility_and_tenure(self, path3):
        p = WcaParams(w1=0, w2=0, w3=0.5, w4=0.5, mobility={1: 2.0}, head_tenure={1: 4.0})
        assert wca_node_weight(path3, 1, p) == pytest.approx(3.0)

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ConfigurationError, match="w1"):
            WcaParams(w1=0.5, w2=0.2, w3=0.1, w4=0.1).validate()


class TestWca:
    def test_edgeless(self):
        assert wca(edgeless_topology(4)).heads == frozenset(range(4))

    def test_star_ideal_degree_selects_center(self):
        t = star_topology(4)
        c = wca(t, WcaParams(w1=1, w2=0, w3=0, w4=0, ideal_degree=4))
        assert c.heads == frozenset({0})

    def test_no_two_heads_adjacent(self):
        for seed in range(8):
            t = random_topology(40, 150, 45, seed=seed)
            c = wca(t)
            assert heads_independent(t, c.heads)


class TestAllBaselines:
    @pytest.mark.parametrize("solver", [lowest_id, highest_degree, lambda t: kconid(t, 1), wca])
    def test_dominating_and_valid(self, solver):
        for seed in range(6):
            t = random_topology(30, 150, 50, seed=seed)
            c = solver(t)
            assert is_dominating(t, c.heads)
            assert validate_clustering(t, c) == []

    @pytest.mark.parametrize("solver", [lowest_id, highest_degree, lambda t: kconid(t, 2), wca])
    def test_deterministic(self, solver):
        t = random_topology(30, 150, 40, seed=99)
        a, b = solver(t), solver(t)
        assert a.heads == b.heads
        assert a.assignment == b.assignment

    @pytest.mark.parametrize("solver", [lowest_id, highest_degree, wca])
    def test_heads_independent(self, solver):
        for seed in range(6):
            t = random_topology(35, 150, 50, seed=seed)
            assert heads_independent(t, solver(t).heads)
