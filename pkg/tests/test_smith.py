"""
Test Suite for Smith Normal Form
================================
"""

import numpy as np
import pytest

from strandtwist.invariants import AbelianGroup, SmithNormalForm, smith_normal_form


class TestSmithNormalForm:
    """Diagonalization over the integers."""

    def test_small_matrix(self):
        assert smith_normal_form([[2, 4], [6, 8]]) == (2, 4)

    def test_coprime_diagonal_merges(self):
        assert smith_normal_form([[2, 0], [0, 3]]) == (1, 6)

    def test_zero_matrix(self):
        assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)

    def test_textbook_example(self):
        assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)

    def test_transforms(self, rng):
        for _ in range(20):
            A = rng.integers(-9, 10, size=(4, 3)).tolist()
            snf = SmithNormalForm(A).compute()
            D = snf.left.dot(np.array(A, dtype=object)).dot(snf.right)
            diag = snf.diagonal()
            for i in range(4):
                for j in range(3):
                    assert D[i, j] == (diag[i] if i == j else 0)
            nonzero = [d for d in diag if d]
            assert all(d > 0 for d in nonzero)
            assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))

    def test_unimodular_transforms(self):
        snf = SmithNormalForm([[4, 6], [2, 8]]).compute()
        for M in (snf.left, snf.right):
            assert abs(int(np.linalg.det(M.astype(float)).round())) == 1


class TestAbelianGroup:
    """Groups presented by relation matrices."""

    def test_cyclic(self):
        assert str(AbelianGroup.presented_by([[3]])) == "Z/3"

    def test_free(self):
        g = AbelianGroup.presented_by([[0]])
        assert str(g) == "Z"
        assert g.order() == 0

    def test_product(self):
        g = AbelianGroup.presented_by([[3, 0], [0, 3]])
        assert str(g) == "Z/3 + Z/3"
        assert g.order() == 9

    def test_trivial(self):
        g = AbelianGroup.presented_by([[1, 0], [0, -1]])
        assert g.is_trivial()
        assert str(g) == "0"

    def test_no_relations(self):
        assert AbelianGroup.presented_by([], 2).free_rank == 2

    def test_divisor_chain_enforced(self):
        with pytest.raises(AssertionError):
            AbelianGroup((3, 2))
