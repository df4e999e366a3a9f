"""
Test Suite for Diagram Core
===========================

PD parsing and validation, faces, mirror images and connected sums.
"""

import pytest

from strandtwist.diagram import (
    UNKNOT, connected_sum, faces, format_pd, from_tuples, mirror, parse_pd,
)
from strandtwist.errors import (
    Disconnected, KnotEngineError, MalformedCode, OrientationInconsistent,
)
from strandtwist.invariants import determinant, jones


class TestParsePD:
    """PD text and tuple input."""

    def test_trefoil_parses(self, trefoil):
        assert trefoil.n_crossings == 3
        assert trefoil.n_arcs == 6
        assert trefoil.writhe() == -3

    def test_figure_eight_writhe_zero(self, figure_eight):
        assert figure_eight.writhe() == 0
        assert sorted(figure_eight.signs()) == [-1, -1, 1, 1]

    def test_plain_and_bracket_forms_agree(self, trefoil):
        plain = parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3")
        assert plain == trefoil

    def test_tuple_input(self, trefoil):
        assert parse_pd([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]) == trefoil

    def test_comments_ignored(self, trefoil):
        text = "# left trefoil\nX[1,4,2,5] X[3,6,4,1]\nX[5,2,6,3]  # last"
        assert parse_pd(text) == trefoil

    def test_empty_is_unknot(self):
        assert parse_pd("") == UNKNOT
        assert UNKNOT.n_crossings == 0

    def test_format_round_trip(self, trefoil, figure_eight):
        for d in (trefoil, figure_eight):
            assert parse_pd(format_pd(d)) == d

    def test_one_crossing_kink(self, kinked_unknot):
        assert kinked_unknot.n_crossings == 1


class TestPDValidation:
    """Malformed codes raise the matching error."""

    def test_arity(self):
        with pytest.raises(MalformedCode):
            parse_pd("X[1,2,3]")

    def test_tuple_arity(self):
        with pytest.raises(MalformedCode):
            parse_pd([(1, 2, 2)])

    def test_label_out_of_range(self):
        with pytest.raises(MalformedCode):
            parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]")

    def test_label_used_three_times(self):
        with pytest.raises(MalformedCode):
            parse_pd("X[1,1,2,1]")

    def test_two_components(self):
        with pytest.raises(Disconnected):
            parse_pd("X[1,1,2,2] X[3,3,4,4]")

    def test_under_strand_not_successive(self):
        with pytest.raises(OrientationInconsistent):
            parse_pd("X[2,4,1,5] X[3,6,4,1] X[5,2,6,3]")

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_pd("X[1,2,3]")
        assert issubclass(MalformedCode, KnotEngineError)

    def test_from_tuples_empty(self):
        assert from_tuples([]) == UNKNOT


class TestFaces:
    """Complementary regions."""

    def test_face_count(self, trefoil, figure_eight):
        assert len(faces(trefoil)) == 5
        assert len(faces(figure_eight)) == 6

    def test_unknot_has_two_empty_faces(self):
        fs = faces(UNKNOT)
        assert len(fs) == 2
        assert all(len(f) == 0 for f in fs)

    def test_every_arc_bounds_two_faces_with_opposite_sides(self, figure_eight):
        sides = {}
        for f in faces(figure_eight):
            for arc, side in f.edges:
                sides.setdefault(arc, []).append(side)
        assert set(sides) == set(range(1, 9))
        for arc, found in sides.items():
            assert sorted(found) == [-1, 1], arc

    def test_trefoil_has_two_triangles(self, trefoil):
        sizes = sorted(len(f) for f in faces(trefoil))
        assert sizes == [2, 2, 2, 3, 3]

    def test_step_of_returns_slots_of_arc(self, trefoil):
        for f in faces(trefoil):
            for arc in f.arcs():
                (ci, s), (cj, t) = f.step_of(arc)
                assert trefoil.crossings[ci].labels[s] == arc
                assert trefoil.crossings[cj].labels[t] == arc


class TestMirror:
    """Mirror images."""

    def test_signs_flip(self, trefoil):
        m = mirror(trefoil)
        assert m.writhe() == 3
        assert m.n_crossings == trefoil.n_crossings

    def test_mirror_is_involution(self, trefoil, figure_eight):
        for d in (trefoil, figure_eight):
            assert mirror(mirror(d)) == d

    def test_jones_inverts(self, trefoil, trefoil_jones):
        assert jones(mirror(trefoil)) == trefoil_jones.invert()

    def test_mirror_is_valid_pd(self, figure_eight):
        m = mirror(figure_eight)
        assert parse_pd(format_pd(m)) == m

    def test_unknot(self):
        assert mirror(UNKNOT) == UNKNOT


class TestConnectedSum:
    """Connected sums."""

    def test_crossings_add(self, trefoil, figure_eight):
        assert connected_sum(trefoil, figure_eight).n_crossings == 7

    def test_determinant_multiplies(self, trefoil, figure_eight):
        assert determinant(connected_sum(trefoil, figure_eight)) == 15

    def test_jones_multiplies(self, trefoil, figure_eight, trefoil_jones, figure_eight_jones):
        assert jones(connected_sum(trefoil, figure_eight)) == trefoil_jones * figure_eight_jones

    def test_unknot_is_identity(self, trefoil):
        assert connected_sum(UNKNOT, trefoil) == trefoil
        assert connected_sum(trefoil, UNKNOT) == trefoil
