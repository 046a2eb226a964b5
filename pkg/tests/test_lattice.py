import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from unionjack import (
    FaceStructure, Graph, LatticeSize, SizeError, adjacency_matrix, build_488, build_cycle,
    build_torus_grid, build_union_jack, degree_matrix, dual_of_488, face_vertex_incidence,
    incidence_matrix, laplacian, numeric_spectrum, signless_laplacian,
)
from unionjack.lattice import cartesian_product, read_edgelist

SMALL = list(itertools.product(range(3, 7), repeat=2))
sizes = st.tuples(st.integers(3, 8), st.integers(3, 8))


def all_builders(n, m):
    yield build_cycle(n)
    yield build_torus_grid((n, m))
    yield build_union_jack((n, m))[0]
    yield build_488((n, m))
    yield dual_of_488(build_488((n, m)))


def kron_grid(n, m):
    a_n = adjacency_matrix(build_cycle(n))
    a_m = adjacency_matrix(build_cycle(m))
    return np.kron(np.eye(m, dtype=int), a_n) + np.kron(a_m, np.eye(n, dtype=int))


class TestLatticeSize:
    def test_valid(self):
        s = LatticeSize(3, 5)
        assert (s.n, s.m, s.cells) == (3, 5, 15)

    @pytest.mark.parametrize("n,m", [(2, 3), (3, 2), (0, 5), (-1, 4)])
    def test_too_small(self, n, m):
        with pytest.raises(SizeError):
            LatticeSize(n, m)

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            LatticeSize(3.0, 3)
        with pytest.raises(TypeError):
            LatticeSize(True, 3)

    def test_parse(self):
        assert LatticeSize.parse("8x16") == LatticeSize(8, 16)
        with pytest.raises(ValueError):
            LatticeSize.parse("8by16")

    @pytest.mark.parametrize("builder", [build_torus_grid, build_union_jack, build_488,
                                         face_vertex_incidence])
    def test_builders_reject_small(self, builder):
        with pytest.raises(SizeError):
            builder((2, 4))


class TestCycle:
    def test_c3(self):
        g = build_cycle(3)
        assert g.vertex_count == 3
        assert set(g.edges) == {(0, 1), (1, 2), (0, 2)}

    def test_c4_regular(self):
        g = build_cycle(4)
        assert g.edge_count == 4
        assert list(g.degrees) == [2, 2, 2, 2]

    def test_c5_spectrum(self):
        expected = sorted([2, 2 * np.cos(2 * np.pi / 5), 2 * np.cos(2 * np.pi / 5),
                           2 * np.cos(4 * np.pi / 5), 2 * np.cos(4 * np.pi / 5)])
        got = numeric_spectrum(adjacency_matrix(build_cycle(5))).values
        np.testing.assert_allclose(got, expected, atol=1e-10)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_too_small(self, n):
        with pytest.raises(SizeError):
            build_cycle(n)


class TestTorusGrid:
    def test_3x3_counts(self):
        g = build_torus_grid((3, 3))
        assert (g.vertex_count, g.edge_count) == (9, 18)
        assert set(g.degrees) == {4}

    def test_labels_row_major(self):
        g = build_torus_grid((4, 3))
        assert g.labels[1 * 4 + 2] == "grid(1,2)"

    @pytest.mark.parametrize("n,m", SMALL)
    def test_kronecker_form(self, n, m):
        assert np.array_equal(adjacency_matrix(build_torus_grid((n, m))), kron_grid(n, m))

    def test_4x4_adjacency_spectrum(self):
        c = np.array([2.0, 0.0, -2.0, 0.0])
        expected = np.sort((c[:, None] + c[None, :]).ravel())
        got = numeric_spectrum(adjacency_matrix(build_torus_grid((4, 4)))).values
        np.testing.assert_allclose(got, expected, atol=1e-10)

    def test_cartesian_rule(self):
        # brute force on the definition: equal first coordinate and adjacent second, or vice versa
        g, h = build_cycle(3), build_cycle(5)
        prod = cartesian_product(g, h)
        ag, ah = adjacency_matrix(g), adjacency_matrix(h)
        ap = adjacency_matrix(prod)
        for (u, up), (v, vp) in itertools.product(itertools.product(range(3), range(5)), repeat=2):
            adjacent = (u == v and ah[up, vp]) or (up == vp and ag[u, v])
            assert ap[u * 5 + up, v * 5 + vp] == bool(adjacent)


class TestUnionJack:
    def test_3x3(self):
        g, faces = build_union_jack((3, 3))
        assert (g.vertex_count, g.edge_count) == (18, 54)
        assert Counter(g.degrees.tolist()) == {4: 9, 8: 9}
        assert np.trace(signless_laplacian(g)) == 108
        assert len(faces.faces) == 9

    def test_degree_matrix_layout(self):
        g, _ = build_union_jack((3, 3))
        assert list(np.diag(degree_matrix(g))) == [8] * 9 + [4] * 9

    def test_face_vertices_hit_corners(self):
        g, faces = build_union_jack((4, 3))
        adj = adjacency_matrix(g)
        for f, corners in enumerate(faces.faces):
            assert sorted(np.flatnonzero(adj[12 + f])) == sorted(corners)
        assert g.labels[12] == "face(0,0)"

    @settings(max_examples=30, deadline=None)
    @given(sizes)
    def test_counts_property(self, nm):
        n, m = nm
        g, _ = build_union_jack(nm)
        assert g.vertex_count == 2 * n * m
        assert g.edge_count == 6 * n * m
        assert Counter(g.degrees.tolist()) == {4: n * m, 8: n * m}

    def test_contains_triangle(self):
        g, _ = build_union_jack((3, 4))
        a = adjacency_matrix(g)
        # grid(0,0), grid(0,1), face(0,0)
        assert a[0, 1] and a[0, 12] and a[1, 12]
        assert np.trace(a @ a @ a) > 0

    def test_not_bipartite_spectra_differ(self):
        g, _ = build_union_jack((4, 4))
        q = numeric_spectrum(signless_laplacian(g)).values
        lap = numeric_spectrum(laplacian(g)).values
        assert np.abs(q - lap).max() > 1e-6


class TestFaceStructure:
    def test_rejects_bad_face_count(self):
        with pytest.raises(ValueError):
            FaceStructure(LatticeSize(3, 3), ((0, 1, 3, 4),))

    @pytest.mark.parametrize("n,m", SMALL)
    def test_each_vertex_in_four_faces(self, n, m):
        _, faces = build_union_jack((n, m))
        assert np.all(np.bincount(np.ravel(faces.faces)) == 4)


class Test488:
    def test_3x3(self):
        g = build_488((3, 3))
        assert (g.vertex_count, g.edge_count) == (36, 54)
        assert set(g.degrees) == {3}

    def test_4x4(self):
        g = build_488((4, 4))
        assert (g.vertex_count, g.edge_count) == (64, 96)

    @pytest.mark.parametrize("n,m", [(3, 3), (3, 5), (4, 6)])
    def test_faces(self, n, m):
        g = build_488((n, m))
        lengths = Counter(len(f) for f in g.faces)
        assert lengths == {8: n * m, 4: n * m}
        # Euler characteristic of the torus
        assert g.vertex_count - g.edge_count + len(g.faces) == 0
        edges = set(g.edges)
        for cycle in g.faces:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                assert (min(a, b), max(a, b)) in edges

    def test_dual_3x3(self):
        d = dual_of_488(build_488((3, 3)))
        assert (d.vertex_count, d.edge_count) == (18, 54)
        assert Counter(d.degrees.tolist()) == {4: 9, 8: 9}

    def test_dual_requires_faces(self):
        g = build_torus_grid((3, 3))
        with pytest.raises(ValueError):
            dual_of_488(g)

    def test_dual_spectrum_3x3(self):
        d = dual_of_488(build_488((3, 3)))
        u, _ = build_union_jack((3, 3))
        a = numeric_spectrum(signless_laplacian(d)).values
        b = numeric_spectrum(signless_laplacian(u)).values
        np.testing.assert_allclose(a, b, atol=1e-8)

    def test_dual_laplacian_3x4(self):
        d = dual_of_488(build_488((3, 4)))
        u, _ = build_union_jack((3, 4))
        a = numeric_spectrum(laplacian(d)).values
        b = numeric_spectrum(laplacian(u)).values
        np.testing.assert_allclose(a, b, atol=1e-8)


class TestMatrices:
    def test_c3(self):
        a = adjacency_matrix(build_cycle(3))
        assert np.all(np.diag(a) == 0) and a.sum() == 6
        assert np.all(laplacian(build_cycle(3)).sum(axis=1) == 0)

    @pytest.mark.parametrize("n,m", [(3, 3), (4, 5)])
    def test_builder_invariants(self, n, m):
        for g in all_builders(n, m):
            a, lap, q = adjacency_matrix(g), laplacian(g), signless_laplacian(g)
            assert g.degrees.sum() == 2 * g.edge_count
            assert np.array_equal(a, a.T) and np.all(np.diag(a) == 0)
            assert np.array_equal(q - lap, 2 * a)
            assert np.all(lap.sum(axis=1) == 0)
            assert a.dtype.kind == "i"

    def test_incidence_c3(self):
        inc = incidence_matrix(build_cycle(3))
        assert inc.shape == (3, 3)
        assert np.array_equal(inc @ inc.T, 2 * np.eye(3, dtype=int) + adjacency_matrix(build_cycle(3)))

    def test_incidence_c4_columns(self):
        assert np.all(incidence_matrix(build_cycle(4)).sum(axis=0) == 2)

    def test_incidence_ujl(self):
        g, _ = build_union_jack((3, 3))
        inc = incidence_matrix(g)
        assert inc.shape == (18, 54)
        assert np.array_equal(inc @ inc.T, signless_laplacian(g))

    @pytest.mark.parametrize("n,m", SMALL)
    def test_incidence_identity_all_builders(self, n, m):
        for g in all_builders(n, m):
            inc = incidence_matrix(g)
            assert np.array_equal(inc @ inc.T, signless_laplacian(g))


class TestFaceVertexIncidence:
    def test_row_column_sums(self):
        mm = face_vertex_incidence((3, 3))
        assert np.all(mm.sum(axis=0) == 4) and np.all(mm.sum(axis=1) == 4)

    @pytest.mark.parametrize("n,m", SMALL)
    def test_gram_kronecker(self, n, m):
        mm = face_vertex_incidence((n, m))
        b_n = 2 * np.eye(n, dtype=int) + adjacency_matrix(build_cycle(n))
        b_m = 2 * np.eye(m, dtype=int) + adjacency_matrix(build_cycle(m))
        assert np.array_equal(mm @ mm.T, np.kron(b_m, b_n))

    @pytest.mark.parametrize("n,m", [(4, 3), (3, 5), (6, 4)])
    def test_block_layout(self, n, m):
        mm = face_vertex_incidence((n, m))
        block = np.block([[kron_grid(n, m), mm], [mm.T, np.zeros_like(mm)]])
        assert np.array_equal(block, adjacency_matrix(build_union_jack((n, m))[0]))


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_repeated_edge(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 1), (1, 0)])

    def test_edgelist_format(self):
        text = build_union_jack((3, 3))[0].to_edgelist()
        lines = text.splitlines()
        assert lines[0] == "# vertices=18 edges=54"
        assert len(lines) == 55
        pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
        assert pairs == sorted(pairs)

    def test_edgelist_roundtrip(self):
        g = build_488((3, 4))
        back = read_edgelist(g.to_edgelist())
        assert back.edges == g.edges and back.vertex_count == g.vertex_count

    def test_immutable(self):
        g = build_cycle(4)
        with pytest.raises(AttributeError):
            g.vertex_count = 5
        with pytest.raises(ValueError):
            g.degrees[0] = 9
