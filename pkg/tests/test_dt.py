"""
Test Suite for DT Codes
=======================
"""

import pytest

from strandtwist.diagram import dt_code, faces, parse_dt
from strandtwist.errors import MalformedCode, ResourceExceeded
from strandtwist.invariants import determinant, jones

TABLE = {
    "3_1": ((4, 6, 2), 3),
    "4_1": ((4, 6, 8, 2), 5),
    "5_1": ((6, 8, 10, 2, 4), 5),
    "5_2": ((4, 8, 10, 2, 6), 7),
    "6_1": ((4, 8, 12, 10, 2, 6), 9),
    "6_2": ((4, 8, 10, 12, 2, 6), 11),
    "6_3": ((4, 8, 10, 2, 12, 6), 13),
}


class TestParseDT:
    """Realization of alternating table codes."""

    @pytest.mark.parametrize("name", sorted(TABLE))
    def test_determinant(self, name):
        code, det = TABLE[name]
        d = parse_dt(code)
        assert d.n_crossings == len(code)
        assert determinant(d) == det

    @pytest.mark.parametrize("name", sorted(TABLE))
    def test_round_trip(self, name):
        code, _ = TABLE[name]
        assert dt_code(parse_dt(code)) == code

    def test_planar(self):
        d = parse_dt((4, 8, 10, 2, 6))
        assert len(faces(d)) == d.n_crossings + 2

    def test_string_input(self):
        assert parse_dt("4, 6, 8, 2") == parse_dt((4, 6, 8, 2))

    def test_figure_eight_jones(self, figure_eight_jones):
        assert jones(parse_dt("4 6 8 2")) == figure_eight_jones

    def test_trefoil_jones_up_to_mirror(self, trefoil_jones):
        v = jones(parse_dt("4 6 2"))
        assert v in (trefoil_jones, trefoil_jones.invert())

    def test_empty_code(self):
        assert parse_dt(()).n_crossings == 0


class TestDTValidation:
    """Bad codes."""

    def test_odd_entry(self):
        with pytest.raises(MalformedCode):
            parse_dt("4 6 3")

    def test_not_a_permutation(self):
        with pytest.raises(MalformedCode):
            parse_dt("4 4 2")

    def test_consecutive_passages(self):
        with pytest.raises(MalformedCode):
            parse_dt("2 4")

    def test_too_many_crossings(self):
        code = tuple(range(4, 36, 2)) + (2,)
        assert len(code) == 17
        with pytest.raises(ResourceExceeded):
            parse_dt(code)
