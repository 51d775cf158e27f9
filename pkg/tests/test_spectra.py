import math
import random

import numpy as np
import pytest

from specgap import (
    DisconnectedGraph,
    Graph,
    NotRegular,
    adjacency_eigensystem,
    adjacency_spectrum,
    atlas_all,
    atlas_graph,
    enumerate_regular,
    is_connected,
    is_regular,
    mu1,
    spectral_measure_moments,
    trace_formula_check,
)
from oracles import random_graph

TWO_TRIANGLES = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
PATH3 = Graph.from_edges(3, [(0, 1), (1, 2)])


class TestGraphType:
    def test_validation(self):
        with pytest.raises(ValueError):
            Graph(2, (1, 0))  # asymmetric
        with pytest.raises(ValueError):
            Graph(2, (3, 1))  # self-loop
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 0)])

    def test_accessors(self):
        g = atlas_graph("K4").graph
        assert g.num_edges == 6
        assert g.degree(2) == 3
        assert sorted(g.neighbors(0)) == [1, 2, 3]
        assert g.has_edge(1, 3) and not g.has_edge(1, 1)
        a = g.adjacency_matrix()
        assert a.sum() == 12 and np.allclose(a, a.T)


class TestConnectivityAndRegularity:
    def test_examples(self):
        k4 = atlas_graph("K4").graph
        assert is_connected(k4) and is_regular(k4) == 3
        assert not is_connected(TWO_TRIANGLES)
        assert is_regular(PATH3) is None

    def test_mu1_requires_connected(self):
        with pytest.raises(DisconnectedGraph):
            mu1(TWO_TRIANGLES)


class TestAdjacencySpectrum:
    def test_k4(self):
        spec = adjacency_spectrum(atlas_graph("K4").graph)
        assert spec.values == pytest.approx((3.0, -1.0, -1.0, -1.0), abs=1e-9)

    def test_k33(self):
        spec = adjacency_spectrum(atlas_graph("K33").graph)
        assert spec.values == pytest.approx((3.0, 0, 0, 0, 0, -3.0), abs=1e-9)

    def test_petersen_multiplicities(self):
        spec = adjacency_spectrum(atlas_graph("petersen").graph)
        grouped = [(round(v, 6), c) for v, c in spec.grouped()]
        assert grouped == [(3.0, 1), (1.0, 5), (-2.0, 4)]

    def test_matches_lapack_on_random_graphs(self):
        rnd = random.Random(55)
        for _ in range(20):
            g = random_graph(rnd, rnd.randint(2, 12))
            ours = adjacency_spectrum(g).values
            ref = np.sort(np.linalg.eigvalsh(g.adjacency_matrix()))[::-1]
            assert ours == pytest.approx(tuple(ref), abs=1e-9)

    def test_eigensystem_residual(self):
        graphs = [e.graph for e in atlas_all()]
        graphs += list(enumerate_regular(3, 8))
        for g in graphs:
            spec, q = adjacency_eigensystem(g)
            lam = np.diag(spec.values)
            residual = np.abs(g.adjacency_matrix() - q @ lam @ q.T).max()
            assert residual < 1e-8

    def test_trace_and_edge_count_identities(self):
        for e in atlas_all():
            vals = np.array(adjacency_spectrum(e.graph).values)
            assert abs(vals.sum()) < 1e-7
            assert vals @ vals == pytest.approx(2 * e.graph.num_edges, abs=1e-7)

    def test_leading_eigenvalue_of_connected_regular(self):
        for e in atlas_all():
            k = is_regular(e.graph)
            vals = adjacency_spectrum(e.graph).values
            assert vals[0] == pytest.approx(k, abs=1e-9)
            assert vals[1] < k - 1e-9

    def test_bipartite_symmetry(self):
        for name in ("K33", "cube", "K44"):
            vals = adjacency_spectrum(atlas_graph(name).graph).values
            n = len(vals)
            for i in range(n):
                assert vals[i] == pytest.approx(-vals[n - 1 - i], abs=1e-8)


class TestMu1:
    def test_prism(self):
        assert mu1(atlas_graph("Y2_prism").graph) == pytest.approx(1.0, abs=1e-9)

    def test_complete_bipartite_family(self):
        for n in range(2, 7):
            assert mu1(atlas_graph(f"K{n},{n}").graph) == pytest.approx(0.0, abs=1e-9)

    def test_complete_family(self):
        for n in range(3, 8):
            assert mu1(atlas_graph(f"K{n}").graph) == pytest.approx(-1.0, abs=1e-9)


class TestTraceFormula:
    def test_k4_low_moments(self):
        sums = trace_formula_check(atlas_graph("K4").graph, 2)
        assert sums[0] == pytest.approx(4.0, abs=1e-9)  # S_0 = n
        assert sums[1] == pytest.approx(0.0, abs=1e-9)  # trace of A

    def test_petersen_nonnegative(self):
        sums = trace_formula_check(atlas_graph("petersen").graph, 20)
        assert all(s >= -1e-7 * 10 for s in sums)

    def test_rejects_irregular_and_disconnected(self):
        with pytest.raises(NotRegular):
            trace_formula_check(PATH3, 5)
        with pytest.raises(DisconnectedGraph):
            trace_formula_check(TWO_TRIANGLES, 5)

    def test_moments_probability_normalization(self):
        for name in ("K4", "petersen", "G7"):
            moments = spectral_measure_moments(atlas_graph(name).graph, 6)
            assert moments[0] == pytest.approx(1.0, abs=1e-12)

    def test_k33_first_moment(self):
        moments = spectral_measure_moments(atlas_graph("K33").graph, 1)
        assert moments[1] == pytest.approx(0.0, abs=1e-9)

    def test_moment_trace_consistency(self):
        graphs = list(enumerate_regular(3, 8)) + list(enumerate_regular(4, 7))
        for g in graphs:
            k = is_regular(g)
            sums = trace_formula_check(g, 12)
            moments = spectral_measure_moments(g, 12)
            for m in range(13):
                scale = g.n * math.sqrt(k - 1.0) ** m
                assert moments[m] == pytest.approx(sums[m] / scale, abs=1e-9)


def test_spectrum_grouping_gap():
    spec = adjacency_spectrum(atlas_graph("wagner").graph)
    grouped = spec.grouped()
    assert [c for _, c in grouped] == [1, 2, 2, 1, 2]
