"""Splitting and shrinking moves and the shrinkability classification."""

from __future__ import annotations

from itertools import combinations

import pytest

import trisurf as ts
from trisurf import errors
from trisurf.moves import Corner, TruncatedCorner


def _clique_triangles(tri):
    """Independent 3-clique scan used as the oracle for nonfacial counts."""
    return {
        (a, b, c)
        for a, b, c in combinations(range(tri.order), 3)
        if tri.has_edge(a, b) and tri.has_edge(a, c) and tri.has_edge(b, c)
    }


class TestNonfacialTriangles:
    def test_triangle_has_none(self, triangle):
        assert ts.nonfacial_triangles(triangle) == frozenset()

    def test_octahedron_has_none(self, octahedron):
        expected = _clique_triangles(octahedron) - set(octahedron.faces)
        assert expected == set()
        assert ts.nonfacial_triangles(octahedron) == frozenset()

    def test_quotient_has_ten(self, proj_plane):
        # K6 carries C(6,3) = 20 triangles and the complex uses 10 as faces.
        expected = _clique_triangles(proj_plane) - set(proj_plane.faces)
        assert len(expected) == 10
        assert ts.nonfacial_triangles(proj_plane) == frozenset(expected)


class TestClassifyEdge:
    def test_triangle_edges_blocked_by_boundary_triangle(self, triangle):
        for edge in triangle.edges:
            result = ts.classify_edge(triangle, edge)
            assert result.verdict == "rod"
            assert result.impediments == frozenset({ts.Impediment.BOUNDARY_TRIANGLE})

    def test_quotient_edges_blocked_by_nonfacial_triangles(self, proj_plane):
        for edge in proj_plane.edges:
            result = ts.classify_edge(proj_plane, edge)
            assert result.impediments == frozenset({ts.Impediment.NONFACIAL_TRIANGLE})

    def test_k5_moebius_chords_and_rim(self, k5_moebius):
        rim = k5_moebius.boundary_edges
        for edge in k5_moebius.edges:
            result = ts.classify_edge(k5_moebius, edge)
            assert result.verdict == "rod"
            if edge not in rim:
                assert ts.Impediment.CHORD in result.impediments
            else:
                assert ts.Impediment.CHORD not in result.impediments

    def test_unknown_edge(self, k5_moebius):
        with pytest.raises(errors.UnknownEdge):
            ts.classify_edge(k5_moebius, (0, 7))

    def test_chord_only_on_bordered(self, projective_catalog):
        for entry in projective_catalog.of_order(7):
            for edge in entry.triangulation.edges:
                impediments = ts.classify_edge(entry.triangulation, edge).impediments
                assert ts.Impediment.CHORD not in impediments
                assert ts.Impediment.BOUNDARY_TRIANGLE not in impediments


class TestIrreducibility:
    def test_triangle_is_irreducible(self, triangle):
        assert ts.is_irreducible(triangle)

    def test_quotient_is_irreducible(self, proj_plane):
        assert ts.is_irreducible(proj_plane)

    def test_k5_moebius_is_irreducible(self, k5_moebius):
        assert ts.is_irreducible(k5_moebius)

    def test_cable_subgraph_of_irreducible_is_empty(self, proj_plane):
        assert ts.cable_subgraph(proj_plane) == frozenset()

    def test_all_order_8_members_are_reducible(self, projective_catalog):
        for entry in projective_catalog.of_order(8):
            assert ts.cable_subgraph(entry.triangulation)


class TestSplitCorner:
    def test_corner_counts(self, proj_plane, tetrahedron):
        # One corner per unordered pair of edges at a vertex.
        assert len(ts.corners(proj_plane)) == 6 * 10  # six vertices of degree 5
        assert len(ts.corners(tetrahedron)) == 4 * 3

    def test_tetrahedron_splits_agree(self, tetrahedron):
        results = [ts.split_corner(tetrahedron, c) for c in ts.corners(tetrahedron)]
        codes = {ts.canonical_code(r) for r in results}
        assert len(codes) == 1
        bipyramid = results[0]
        assert bipyramid.order == 5
        assert bipyramid.surface_kind == ts.SPHERE

    def test_every_quotient_split_lands_in_order_7_catalog(self, proj_plane, projective_catalog):
        order7 = set(e.code for e in projective_catalog.of_order(7))
        for corner in ts.corners(proj_plane):
            child = ts.split_corner(proj_plane, corner)
            assert child.order == 7
            assert ts.canonical_code(child) in order7

    def test_fresh_edge_is_a_cable(self, proj_plane):
        corner = ts.corners(proj_plane)[0]
        child = ts.split_corner(proj_plane, corner)
        fresh = (corner.v, proj_plane.order)
        assert fresh in ts.cable_subgraph(child)

    def test_split_preserves_surface_kind(self, proj_plane, k5_moebius):
        for tri in (proj_plane, k5_moebius):
            for corner in ts.corners(tri)[:10]:
                assert ts.split_corner(tri, corner).surface_kind == tri.surface_kind

    def test_not_a_corner(self, k5_moebius):
        with pytest.raises(errors.AmbiguousArc):
            ts.split_corner(k5_moebius, Corner(v=0, u=1, w=1))
        with pytest.raises(errors.NotACorner):
            ts.split_corner(k5_moebius, Corner(v=0, u=1, w=9))


class TestSplitTruncated:
    def test_triangle_truncated_split_is_the_two_face_disk(self, triangle):
        child = ts.split_truncated(triangle, TruncatedCorner(v=0, u=1))
        assert child.order == 4
        assert len(child.faces) == 2
        assert child.surface_kind == ts.DISK

    def test_triangle_all_splits(self, triangle, disk_catalog_3_5):
        # 3 corners plus 6 truncated corners; their classes are exactly the
        # two disk triangulations of order 4.
        splits = ts.all_splits(triangle)
        assert len(splits) == 9
        assert sum(1 for d, _ in splits if isinstance(d, TruncatedCorner)) == 6
        codes = {ts.canonical_code(child) for _, child in splits}
        assert codes == {e.code for e in disk_catalog_3_5.of_order(4)}

    def test_boundary_grows_by_one(self, k5_moebius):
        for tcorner in ts.truncated_corners(k5_moebius)[:6]:
            child = ts.split_truncated(k5_moebius, tcorner)
            assert child.surface_kind == ts.MOEBIUS_BAND
            assert len(child.boundary_cycles[0]) == len(k5_moebius.boundary_cycles[0]) + 1

    def test_truncated_split_result_has_a_cable(self, k5_moebius):
        tcorner = ts.truncated_corners(k5_moebius)[0]
        child = ts.split_truncated(k5_moebius, tcorner)
        fresh = (tcorner.v, k5_moebius.order)
        assert fresh in ts.cable_subgraph(child)
        assert ts.isomorphic(ts.shrink_edge(child, fresh), k5_moebius)

    def test_closed_complex_has_no_truncated_corners(self, proj_plane):
        assert ts.truncated_corners(proj_plane) == []
        with pytest.raises(errors.NotBoundaryVertex):
            ts.split_truncated(proj_plane, TruncatedCorner(v=0, u=1))


class TestShrinkEdge:
    def test_rod_refusal_reports_impediments(self, proj_plane):
        with pytest.raises(errors.RodEdge) as excinfo:
            ts.shrink_edge(proj_plane, (0, 1))
        assert excinfo.value.impediments == frozenset({ts.Impediment.NONFACIAL_TRIANGLE})

    def test_split_then_shrink_is_identity(self, proj_plane, k5_moebius, tetrahedron):
        for tri in (proj_plane, k5_moebius, tetrahedron):
            for descriptor, child in ts.all_splits(tri)[:15]:
                fresh = (descriptor.v, tri.order)
                assert ts.shrink_edge(child, fresh).faces == tri.faces

    def test_shrink_preserves_surface_kind(self, projective_catalog):
        entry = projective_catalog.of_order(8)[0]
        tri = entry.triangulation
        for edge in ts.cable_subgraph(tri):
            assert ts.shrink_edge(tri, edge).surface_kind == tri.surface_kind


class TestDescriptors:
    def test_descriptor_round_trip(self, proj_plane, k5_moebius):
        corner = ts.corners(proj_plane)[5]
        replayed = ts.apply_descriptor(proj_plane, corner.descriptor())
        assert replayed.faces == ts.split_corner(proj_plane, corner).faces

        tcorner = ts.truncated_corners(k5_moebius)[2]
        replayed = ts.apply_descriptor(k5_moebius, tcorner.descriptor())
        assert replayed.faces == ts.split_truncated(k5_moebius, tcorner).faces

    def test_shrink_descriptor(self, proj_plane):
        corner = ts.corners(proj_plane)[0]
        child = ts.split_corner(proj_plane, corner)
        shrunk = ts.apply_descriptor(child, f"sh {corner.v} {proj_plane.order}")
        assert shrunk.faces == proj_plane.faces

    def test_bad_descriptor(self):
        with pytest.raises(ValueError):
            ts.parse_descriptor("flip 0 1")


class TestBoundaryTriangleSubsumption:
    def test_rim_edges_of_short_boundaries_hit_nonfacial_cycles_after_coning(
        self, proj_plane, moebius_catalog_5_7
    ):
        # For a bordered complex with a 3-cycle boundary whose cone is not
        # a sphere, each rim edge lies in a nonfacial 3-cycle of the cone.
        corpus = [
            e.triangulation
            for e in moebius_catalog_5_7.entries
            if len(e.triangulation.boundary_cycles[0]) == 3
        ]
        corpus.append(ts.build(proj_plane.faces[1:]))  # quotient minus a face
        assert corpus
        for tri in corpus:
            coned = ts.cone_boundary(tri)
            assert coned.surface_kind != ts.SPHERE
            nonfacial = ts.nonfacial_triangles(coned)
            for edge in tri.boundary_edges:
                assert any(
                    edge[0] in triple and edge[1] in triple for triple in nonfacial
                )
