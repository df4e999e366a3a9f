"""
Test Suite for Monodromy Homology
=================================

Transvections, the core relation on first homology and the conjugacy
residue.
"""

import numpy as np
import pytest

from strandtwist.errors import DimensionMismatch, NotSymplectic
from strandtwist.monodromy import (
    FIGURE_EIGHT_MONODROMY, TREFOIL_MONODROMY, conjugacy_residue,
    core_relation_witness, curve_class, identity, is_commutator_witness,
    is_symplectic, monodromy_determinant, random_symplectic, symplectic_form,
    symplectic_inverse, to_json, transvection, verify_core_relation,
)


def random_class(g, rng):
    v = [int(x) for x in rng.integers(-2, 3, size=2 * g)]
    if not any(v):
        v[0] = 1
    return v


class TestTransvection:
    """Dehn twist actions on homology."""

    def test_basic_shear(self):
        assert to_json(transvection([1, 0], 1)) == [[1, -1], [0, 1]]
        assert to_json(transvection([0, 1], 1)) == [[1, 0], [1, 1]]

    @pytest.mark.parametrize("g", [1, 2, 3])
    @pytest.mark.parametrize("n", [-5, -2, -1, 0, 1, 3, 5])
    def test_symplectic(self, g, n, rng):
        for _ in range(5):
            assert is_symplectic(transvection(random_class(g, rng), n))

    def test_powers_add(self, rng):
        v = random_class(2, rng)
        product = transvection(v, 2).dot(transvection(v, -3))
        assert np.array_equal(product, transvection(v, -1))

    def test_fixes_the_curve(self):
        v = curve_class([1, 2, 0, -1])
        assert np.array_equal(transvection(v, 4).dot(v), v)

    def test_odd_length(self):
        with pytest.raises(DimensionMismatch):
            transvection([1, 0, 1], 1)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_conjugation_moves_the_curve(self, g, rng):
        for _ in range(5):
            D = random_symplectic(g, rng)
            v, n = random_class(g, rng), int(rng.integers(-4, 5))
            lhs = D.dot(transvection(v, n)).dot(symplectic_inverse(D))
            assert np.array_equal(lhs, transvection(D.dot(curve_class(v)), n))


class TestSymplecticHelpers:
    """Forms, inverses and random elements."""

    def test_form(self):
        assert to_json(symplectic_form(1)) == [[0, 1], [-1, 0]]
        assert is_symplectic(identity(3))

    def test_not_symplectic(self):
        assert not is_symplectic([[2, 0], [0, 1]])

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_inverse(self, g, rng):
        M = random_symplectic(g, rng)
        assert is_symplectic(M)
        assert np.array_equal(M.dot(symplectic_inverse(M)), identity(g))

    def test_bad_shape(self):
        with pytest.raises(DimensionMismatch):
            is_symplectic([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


class TestCoreRelation:
    """Witness verification."""

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_witnesses_verify(self, g, rng):
        for _ in range(10):
            B, C = random_symplectic(g, rng), random_symplectic(g, rng)
            v, n = random_class(g, rng), int(rng.integers(-5, 6))
            A = core_relation_witness(B, C, v, n)
            assert verify_core_relation(A, B, C, v, n)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_perturbed_witnesses_fail(self, g, rng):
        for _ in range(10):
            B, C = random_symplectic(g, rng), random_symplectic(g, rng)
            v, n = random_class(g, rng), int(rng.integers(1, 6))
            A = core_relation_witness(B, C, v, n)
            assert not verify_core_relation(A, B, C, v, n + 1)

    @pytest.mark.parametrize("g", [1, 2, 3])
    def test_invariant_under_common_conjugation(self, g, rng):
        for _ in range(5):
            B, C, D = (random_symplectic(g, rng) for _ in range(3))
            v, n = random_class(g, rng), int(rng.integers(-5, 6))
            A = core_relation_witness(B, C, v, n)
            D_inv = symplectic_inverse(D)
            moved = [D.dot(M).dot(D_inv) for M in (A, B, C)]
            Dv = D.dot(curve_class(v))
            assert verify_core_relation(*moved, Dv, n)
            assert not verify_core_relation(*moved, Dv, n + 1)

    def test_not_symplectic(self):
        bad = [[2, 0], [0, 1]]
        with pytest.raises(NotSymplectic):
            verify_core_relation(bad, identity(1), identity(1), [1, 0], 1)

    def test_genus_mismatch(self):
        with pytest.raises(DimensionMismatch):
            verify_core_relation(identity(1), identity(2), identity(1), [1, 0], 1)
        with pytest.raises(DimensionMismatch):
            verify_core_relation(identity(2), identity(2), identity(2), [1, 0], 1)


class TestCommutators:
    """Commutator witnesses."""

    def test_commutator(self, rng):
        G, H = random_symplectic(2, rng), random_symplectic(2, rng)
        M = G.dot(H).dot(symplectic_inverse(G)).dot(symplectic_inverse(H))
        assert is_commutator_witness(M, G, H)
        assert not is_commutator_witness(M.dot(transvection([1, 0, 0, 0], 1)), G, H)

    def test_trivial(self):
        assert is_commutator_witness(identity(1), FIGURE_EIGHT_MONODROMY, identity(1))


class TestConjugacyResidue:
    """Conjugacy invariants and the knot fixtures."""

    def test_fixture_matrices(self):
        assert to_json(FIGURE_EIGHT_MONODROMY) == [[2, 1], [1, 1]]
        assert to_json(TREFOIL_MONODROMY) == [[0, -1], [1, 1]]

    def test_determinants(self):
        assert monodromy_determinant(FIGURE_EIGHT_MONODROMY) == 5
        assert monodromy_determinant(TREFOIL_MONODROMY) == 3

    def test_distinct_by_trace(self):
        residue = conjugacy_residue(FIGURE_EIGHT_MONODROMY, TREFOIL_MONODROMY)
        assert residue.distinct
        assert residue.invariant == "trace"
        assert str(residue) == "DistinctByInvariant(trace: 3 vs 1)"

    def test_conjugates_undetermined(self, rng):
        C = random_symplectic(1, rng)
        conj = C.dot(FIGURE_EIGHT_MONODROMY).dot(symplectic_inverse(C))
        residue = conjugacy_residue(FIGURE_EIGHT_MONODROMY, conj)
        assert not residue.distinct
        assert str(residue) == "Undetermined"

    def test_same_trace_different_cokernel(self):
        # both trace 2; the shears differ by the cokernel of M - I
        residue = conjugacy_residue(transvection([1, 0], 1), transvection([1, 0], 3))
        assert residue.distinct
        assert residue.invariant == "coker(M-I)"
