"""
Laurent Polynomials
===================

Exact one-variable integer Laurent polynomials.

This module defines:
- LaurentPoly: immutable exponent -> coefficient map with ring operations
"""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

import sympy


class LaurentPoly:
    """
    Integer Laurent polynomial. Zero coefficients are never stored and
    equality is coefficient-wise.

    Example:
        >>> A = LaurentPoly.monomial(1)
        >>> str(-(A ** 2) - A ** -2)
        '-1*x^-2 + -1*x^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, int] = {}
        for exp, coeff in items:
            acc[int(exp)] = acc.get(int(exp), 0) + int(coeff)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def span(self) -> int:
        return self.max_exp() - self.min_exp()

    def __add__(self, other):
        other = _coerce(other)
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({e * k: c ** (-k) if k % 2 == 0 else c})
        result = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def invert(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def rescale(self, factor: int) -> "LaurentPoly":
        """Substitute x -> x^factor for a nonzero integer factor."""
        return LaurentPoly({e * factor: c for e, c in self._terms.items()})

    def divide_exponents(self, divisor: int) -> "LaurentPoly":
        """Substitute x^divisor -> x; every exponent must be divisible."""
        if any(e % divisor for e in self._terms):
            raise ValueError(f"exponents not divisible by {divisor}")
        return LaurentPoly({e // divisor: c for e, c in self._terms.items()})

    def evaluate(self, value) -> Union[int, Fraction]:
        """Exact value at a nonzero integer or Fraction."""
        value = Fraction(value)
        total = sum((Fraction(c) * value ** e for e, c in self._terms.items()), Fraction(0))
        return int(total) if total.denominator == 1 else total

    def as_expr(self, symbol: str = "t"):
        """The polynomial as a sympy expression."""
        x = sympy.Symbol(symbol)
        return sympy.Add(*(c * x ** e for e, c in self._terms.items()))

    def format(self, var: str = "x") -> str:
        """Ascending "c*x^k" terms joined by " + "; "0" for zero."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{var}^{e}" for e, c in self._terms.items())

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"LaurentPoly({self._terms})"


def _coerce(value) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    raise TypeError(f"cannot combine LaurentPoly with {type(value).__name__}")
