"""
Monodromy Homology
==================

Homology actions of surface homeomorphisms as integer symplectic matrices.

Basis convention: (a1, b1, ..., ag, bg) with <a_i, b_i> = 1, so the form
is J = diag([[0, 1], [-1, 0]], ...) and <x, y> = x^T J y. Everything here
lives at the level of homology: a verified witness is consistent with a
mapping class relation but does not prove it.

This module defines:
- curve_class, symplectic_form, is_symplectic, symplectic_inverse
- transvection: homology action of a Dehn twist power
- verify_core_relation: T_v^n A == C B C^-1
- is_commutator_witness: M == G H G^-1 H^-1
- conjugacy_residue: conjugacy invariants that tell two actions apart
- random_symplectic, core_relation_witness
- FIGURE_EIGHT_MONODROMY, TREFOIL_MONODROMY, monodromy_determinant
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import sympy

from strandtwist.errors import DimensionMismatch, NotSymplectic
from strandtwist.invariants.smith import AbelianGroup

logger = logging.getLogger(__name__)


def _matrix(M) -> np.ndarray:
    A = np.array(M, dtype=object)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] % 2:
        raise DimensionMismatch(f"expected a square matrix of even size, got shape {A.shape}")
    return A


def curve_class(values: Sequence[int]) -> np.ndarray:
    """Homology class of a curve as an integer vector of even length."""
    v = np.array(list(values), dtype=object)
    if v.ndim != 1 or len(v) % 2:
        raise DimensionMismatch(f"a curve class needs even length, got {len(v)}")
    return v


def identity(g: int) -> np.ndarray:
    return np.identity(2 * g, dtype=object)


def symplectic_form(g: int) -> np.ndarray:
    J = np.zeros((2 * g, 2 * g), dtype=object)
    for i in range(g):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    return J


def is_symplectic(M) -> bool:
    """M^T J M == J."""
    M = _matrix(M)
    J = symplectic_form(M.shape[0] // 2)
    return bool(np.array_equal(M.T.dot(J).dot(M), J))


def symplectic_inverse(M) -> np.ndarray:
    """Exact inverse of a symplectic matrix: -J M^T J."""
    M = _matrix(M)
    J = symplectic_form(M.shape[0] // 2)
    return -J.dot(M.T).dot(J)


def transvection(v, n: int) -> np.ndarray:
    """
    x -> x + n <x, v> v.

    Args:
        v: curve class of length 2g
        n: twist power (negative for the inverse twist)

    Returns:
        2g x 2g symplectic matrix

    Example:
        >>> transvection([1, 0], 1).tolist()
        [[1, -1], [0, 1]]
    """
    v = curve_class(v)
    g = len(v) // 2
    J = symplectic_form(g)
    return identity(g) + n * np.outer(v, J.dot(v))


def _same_genus(*matrices) -> List[np.ndarray]:
    out = [_matrix(M) for M in matrices]
    if len({M.shape for M in out}) != 1:
        raise DimensionMismatch("matrices have different genus: "
                                + ", ".join(str(M.shape) for M in out))
    return out


def verify_core_relation(A, B, C, v, n: int) -> bool:
    """
    True iff transvection(v, n) @ A == C @ B @ C^-1, the homology form of
    "twisting the square of one monodromy gives a conjugate of the square
    of the other".

    Raises:
        DimensionMismatch: shapes disagree with each other or with ``v``
        NotSymplectic: one of A, B, C is not symplectic
    """
    A, B, C = _same_genus(A, B, C)
    v = curve_class(v)
    if len(v) != A.shape[0]:
        raise DimensionMismatch(f"curve class of length {len(v)} for genus {A.shape[0] // 2}")
    for name, M in (("A", A), ("B", B), ("C", C)):
        if not is_symplectic(M):
            raise NotSymplectic(f"{name} is not symplectic")
    lhs = transvection(v, n).dot(A)
    rhs = C.dot(B).dot(symplectic_inverse(C))
    return bool(np.array_equal(lhs, rhs))


def is_commutator_witness(M, G, H) -> bool:
    """True iff M == G H G^-1 H^-1."""
    M, G, H = _same_genus(M, G, H)
    rhs = G.dot(H).dot(symplectic_inverse(G)).dot(symplectic_inverse(H))
    return bool(np.array_equal(M, rhs))


@dataclass(frozen=True)
class ConjugacyResidue:
    """
    ``distinct`` with the first invariant that differs, or Undetermined.
    Undetermined never means conjugate.
    """

    distinct: bool
    invariant: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None

    def __str__(self) -> str:
        if not self.distinct:
            return "Undetermined"
        return f"DistinctByInvariant({self.invariant}: {self.left} vs {self.right})"


def _charpoly(M: np.ndarray) -> str:
    t = sympy.Symbol("t")
    return str(sympy.Matrix(M.tolist()).charpoly(t).as_expr())


def _cokernel(M: np.ndarray) -> str:
    return str(AbelianGroup.presented_by(M.tolist()))


def conjugacy_residue(A, B) -> ConjugacyResidue:
    """
    Compare trace, characteristic polynomial and the cokernels of M - I and
    M + I.
    """
    A, B = _same_genus(A, B)
    I = identity(A.shape[0] // 2)
    checks = (
        ("trace", lambda M: str(M.trace())),
        ("charpoly", _charpoly),
        ("coker(M-I)", lambda M: _cokernel(M - I)),
        ("coker(M+I)", lambda M: _cokernel(M + I)),
    )
    for name, invariant in checks:
        left, right = invariant(A), invariant(B)
        if left != right:
            return ConjugacyResidue(True, name, left, right)
    return ConjugacyResidue(False)


# ============================================================================
# Witnesses and fixtures
# ============================================================================

def random_symplectic(g: int, rng: np.random.Generator, steps: int = 6) -> np.ndarray:
    """Product of ``steps`` random transvections along small curve classes."""
    M = identity(g)
    for _ in range(steps):
        v = [int(x) for x in rng.integers(-1, 2, size=2 * g)]
        if not any(v):
            v[int(rng.integers(2 * g))] = 1
        n = int(rng.choice([-2, -1, 1, 2]))
        M = transvection(v, n).dot(M)
    return M


def core_relation_witness(B, C, v, n: int) -> np.ndarray:
    """The A making (A, B, C, v, n) satisfy ``verify_core_relation``."""
    B, C = _same_genus(B, C)
    return transvection(v, -n).dot(C).dot(B).dot(symplectic_inverse(C))


def _shear(index: int, n: int) -> np.ndarray:
    v = [0, 0]
    v[index] = 1
    return transvection(v, n)


# genus one fibre; a, b the standard curves
FIGURE_EIGHT_MONODROMY = _shear(0, -1).dot(_shear(1, 1))
TREFOIL_MONODROMY = _shear(0, 1).dot(_shear(1, 1))


def monodromy_determinant(M) -> int:
    """
    |det(M + I)|: the Alexander polynomial at -1, hence the knot
    determinant of a fibred knot with monodromy action M.
    """
    M = _matrix(M)
    value = sympy.Matrix((M + identity(M.shape[0] // 2)).tolist()).det(method="bareiss")
    return abs(int(value))


def to_json(M) -> List[List[int]]:
    return [[int(x) for x in row] for row in _matrix(M)]


if __name__ == "__main__":
    print("figure-eight", to_json(FIGURE_EIGHT_MONODROMY),
          "det", monodromy_determinant(FIGURE_EIGHT_MONODROMY))
    print("trefoil", to_json(TREFOIL_MONODROMY),
          "det", monodromy_determinant(TREFOIL_MONODROMY))
