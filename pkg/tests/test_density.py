import random
from fractions import Fraction

import pytest

from regfree.construction import build, explicit_params
from regfree.density import (
    CERTIFIED,
    EmptyGraph,
    INCONCLUSIVE,
    max_density_subgraph,
    prefix_certificate_3reg_bipartite,
    prefix_certificate_4reg,
)
from regfree.graph import Graph, induced_subgraph
from regfree.regular import NOT_FOUND, find_k_regular

from helpers import (
    brute_max_density,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    random_graph,
    random_tree,
)


class TestMaxDensity:
    def test_empty_graph_rejected(self):
        with pytest.raises(EmptyGraph):
            max_density_subgraph(Graph(0, []))

    def test_edgeless(self):
        rep = max_density_subgraph(Graph(4, []))
        assert rep.density == 0 and rep.num_edges == 0

    def test_k4(self):
        rep = max_density_subgraph(complete_graph(4))
        assert rep.density == Fraction(3, 2)
        assert rep.subgraph == (0, 1, 2, 3)

    def test_cycle(self):
        assert max_density_subgraph(cycle_graph(9)).density == Fraction(1)

    def test_path(self):
        assert max_density_subgraph(path_graph(6)).density == Fraction(5, 6)

    def test_k5_plus_pendant(self):
        g = Graph(6, [(u, v) for u in range(5) for v in range(u + 1, 5)] + [(4, 5)])
        rep = max_density_subgraph(g)
        assert rep.density == Fraction(2)
        assert rep.subgraph == (0, 1, 2, 3, 4)

    def test_petersen(self):
        assert max_density_subgraph(petersen_graph()).density == Fraction(3, 2)

    def test_matches_brute_force(self):
        rng = random.Random(99)
        for _ in range(40):
            n = rng.randint(1, 10)
            g = random_graph(rng, n, rng.uniform(0.1, 0.8))
            rep = max_density_subgraph(g)
            assert rep.density == brute_max_density(g)
            # the reported set really attains the reported density
            sub, _ = induced_subgraph(g, list(rep.subgraph))
            assert rep.num_edges == sub.num_edges
            if rep.density > 0:
                assert Fraction(sub.num_edges, sub.n) == rep.density


class TestPrefixCertificates:
    def test_single_layer_certifies(self):
        # one edgeless layer: every prefix density is 0 < 11/10
        lg = build(explicit_params([600], seed=0))
        out = prefix_certificate_4reg(lg)
        assert out.verdict == CERTIFIED
        assert find_k_regular(lg.graph, 4).outcome == NOT_FOUND

    def test_desk_ladder_is_inconclusive(self):
        # the asymptotic density bound fails at desk scale; the verdict must
        # be honest about it
        lg = build(explicit_params([256, 64, 16, 4], seed=0))
        out = prefix_certificate_4reg(lg)
        assert out.verdict == INCONCLUSIVE
        dense = [p for p in out.prefixes if p.max_density is not None]
        assert dense and any(not p.below_threshold for p in dense)

    def test_prefix_structure(self):
        lg = build(explicit_params([256, 64, 16, 4], seed=3))
        out = prefix_certificate_4reg(lg)
        # indices 0..C+1, prefix sizes are the cumulative layer sums
        assert [p.i for p in out.prefixes] == [0, 1, 2, 3, 4, 5]
        assert [p.prefix_size for p in out.prefixes] == [0, 0, 256, 320, 336, 340]
        for p in out.prefixes:
            if p.active:
                assert p.side_condition_ok is not None
            else:
                assert p.side_condition_ok is None

    def test_activity_brackets(self):
        # s in (1000|B_{i+1}|, 1000|B_i|] intersected with [1, |V|];
        # with |V| = 340 only i with 1000|B_{i+1}| < 340 can fire
        lg = build(explicit_params([256, 64, 16, 4], seed=0))
        out = prefix_certificate_4reg(lg)
        active = {p.i for p in out.prefixes if p.active}
        assert active == {4}  # 1000*|B_5| = 0 < s <= min(1000*|B_4|, 340)

    def test_bipartite_certificate_runs(self):
        lg = build(explicit_params([256, 64, 16, 4], seed=0))
        out = prefix_certificate_3reg_bipartite(lg)
        assert out.k == 3
        assert out.verdict in (CERTIFIED, INCONCLUSIVE)

    def test_certified_implies_not_found_when_it_happens(self):
        # tall single-layer and two-layer ladders where the certificate can
        # actually fire
        for sizes in ([600], [800, 1]):
            for seed in range(5):
                lg = build(explicit_params(sizes, seed=seed))
                out = prefix_certificate_4reg(lg)
                if out.verdict == CERTIFIED:
                    assert find_k_regular(lg.graph, 4).outcome == NOT_FOUND

    def test_threshold_is_reported(self):
        lg = build(explicit_params([64, 16], seed=0))
        out = prefix_certificate_4reg(lg, threshold=Fraction(2))
        assert out.threshold == Fraction(2)
