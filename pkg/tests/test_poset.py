import pytest

from sposet.errors import (
    DanglingFaceRef,
    EmptyInput,
    NonBooleanInterval,
    PosetValidationError,
    RankMismatch,
    UnknownElement,
)
from sposet.poset import (
    SimplexElem,
    barycentric,
    from_face_lattice,
    from_facets,
    link,
    validate_stats,
)

from oracles import interval_ids, powerset_faces


def two_arc_circle_elems():
    return [
        SimplexElem("v1", ("v1",), ()),
        SimplexElem("v2", ("v2",), ()),
        SimplexElem("e", ("v1", "v2"), ("v2", "v1")),
        SimplexElem("e'", ("v1", "v2"), ("v2", "v1")),
    ]


class TestFromFaceLattice:
    def test_two_arc_circle_is_valid(self):
        S = from_face_lattice(two_arc_circle_elems())
        assert S.dim == 1
        assert validate_stats(S).f == (1, 2, 2)

    def test_single_vertex(self):
        S = from_face_lattice([SimplexElem("v", ("v",), ())])
        assert S.dim == 0
        assert validate_stats(S).f == (1, 1)

    def test_repeated_facet_id_rejected(self):
        # rank-3 face listing one facet twice cannot have a Boolean interval
        elems = [
            SimplexElem("a", ("a",), ()),
            SimplexElem("b", ("b",), ()),
            SimplexElem("c", ("c",), ()),
            SimplexElem("ab", ("a", "b"), ("b", "a")),
            SimplexElem("ac", ("a", "c"), ("c", "a")),
            SimplexElem("bc", ("b", "c"), ("c", "b")),
            SimplexElem("t", ("a", "b", "c"), ("bc", "bc", "ab")),
        ]
        with pytest.raises(NonBooleanInterval):
            from_face_lattice(elems)

    def test_dangling_facet_reference(self):
        elems = [
            SimplexElem("v1", ("v1",), ()),
            SimplexElem("v2", ("v2",), ()),
            SimplexElem("e", ("v1", "v2"), ("v2", "ghost")),
        ]
        with pytest.raises(DanglingFaceRef):
            from_face_lattice(elems)

    def test_facet_count_must_match_rank(self):
        elems = [
            SimplexElem("v1", ("v1",), ()),
            SimplexElem("v2", ("v2",), ()),
            SimplexElem("e", ("v1", "v2"), ("v2",)),
        ]
        with pytest.raises(RankMismatch):
            from_face_lattice(elems)

    def test_facet_with_wrong_vertex_set(self):
        elems = [
            SimplexElem("v1", ("v1",), ()),
            SimplexElem("v2", ("v2",), ()),
            SimplexElem("e", ("v1", "v2"), ("v1", "v2")),
        ]
        with pytest.raises(NonBooleanInterval):
            from_face_lattice(elems)

    def test_duplicate_ids_rejected(self):
        elems = [
            SimplexElem("v", ("v1",), ()),
            SimplexElem("v", ("v2",), ()),
        ]
        with pytest.raises(PosetValidationError):
            from_face_lattice(elems)


class TestFromFacets:
    def test_boundary_triangle(self):
        S = from_facets([{1, 2}, {1, 3}, {2, 3}])
        assert validate_stats(S).f == (1, 3, 3)

    def test_full_triangle_is_power_set(self):
        S = from_facets([{1, 2, 3}])
        assert validate_stats(S).f == (1, 3, 3, 1)

    def test_matches_subset_enumeration_oracle(self, torus7):
        facets = [set(e.vertices) for e in torus7.by_rank(3)]
        expected = powerset_faces(facets)
        got = {frozenset(e.vertices) for e in torus7.elements()}
        assert got == expected
        # vertex sets determine faces uniquely in a genuine complex
        assert len(got) == len(torus7)

    def test_torus7_counts(self, torus7):
        assert validate_stats(torus7).f == (1, 7, 21, 14)

    def test_empty_input(self):
        with pytest.raises(EmptyInput):
            from_facets([])
        with pytest.raises(EmptyInput):
            from_facets([set()])


class TestLink:
    def test_vertex_link_of_boundary_triangle(self, bd_triangle):
        lk = link(bd_triangle, "v1")
        assert validate_stats(lk).f == (1, 2)
        assert lk.n == 1

    def test_link_of_maximal_face_is_empty(self, bd_triangle):
        lk = link(bd_triangle, "v1,v2")
        assert len(lk) == 0
        assert lk.dim == -1

    def test_torus7_vertex_links_are_circles(self, torus7):
        for v in torus7.vertex_ids():
            lk = link(torus7, v)
            st = validate_stats(lk)
            assert st.f == (1, 6, 6)
            assert st.connected and st.pure

    def test_link_rank_shift(self, torus7):
        lk = link(torus7, "v1,v2")
        assert lk.n == 1
        assert validate_stats(lk).f == (1, 2)

    def test_unknown_element(self, bd_triangle):
        with pytest.raises(UnknownElement):
            link(bd_triangle, "nope")

    def test_link_revalidates(self, torus7):
        # links go through full construction, so Boolean checks rerun
        lk = link(torus7, "v1")
        for e in lk.elements():
            assert len(interval_ids(lk, e.id)) == 2 ** e.rank - 1


class TestBarycentric:
    def test_single_vertex(self):
        S = from_face_lattice([SimplexElem("v", ("v",), ())])
        assert validate_stats(barycentric(S)).f == (1, 1)

    def test_boundary_triangle_gives_hexagon(self, bd_triangle):
        sd = barycentric(bd_triangle)
        assert validate_stats(sd).f == (1, 6, 6)

    def test_two_arc_circle_gives_square(self):
        S = from_face_lattice(two_arc_circle_elems())
        sd = barycentric(S)
        assert validate_stats(sd).f == (1, 4, 4)

    def test_roundtrips_through_from_facets(self, torus7):
        sd = barycentric(torus7)
        facets = [set(e.vertices) for e in sd.by_rank(sd.dim + 1)]
        assert from_facets(facets) == sd

    def test_vertex_count_and_dimension(self, corpus_posets):
        for S in corpus_posets.values():
            sd = barycentric(S)
            assert len(sd.by_rank(1)) == len(S)
            assert sd.dim == S.dim


class TestStatsAndIntervals:
    def test_boolean_interval_sizes(self, corpus_posets):
        for S in corpus_posets.values():
            for e in S.elements():
                ids = interval_ids(S, e.id)
                assert len(ids) == 2 ** e.rank - 1
                vsets = {S.element(i).vertices for i in ids}
                assert len(vsets) == len(ids)

    def test_boundary_triangle_stats(self, bd_triangle):
        st = validate_stats(bd_triangle)
        assert (st.dim, st.pure, st.connected) == (1, True, True)

    def test_disjoint_vertex_and_edge_not_pure(self):
        elems = [
            SimplexElem("w", ("w",), ()),
            SimplexElem("a", ("a",), ()),
            SimplexElem("b", ("b",), ()),
            SimplexElem("e", ("a", "b"), ("b", "a")),
        ]
        st = validate_stats(from_face_lattice(elems))
        assert not st.pure
        assert not st.connected

    def test_torus7_stats(self, torus7):
        st = validate_stats(torus7)
        assert (st.dim, st.pure, st.connected) == (2, True, True)

    def test_ambient_rank_override(self):
        S = from_face_lattice([SimplexElem("v", ("v",), ())], n=2)
        assert S.n == 2
        assert validate_stats(S).f == (1, 1, 0)
        with pytest.raises(PosetValidationError):
            from_face_lattice([SimplexElem("v", ("v",), ())], n=0)
