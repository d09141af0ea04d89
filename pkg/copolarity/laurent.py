"""
Laurent Polynomial Module - Sparse multivariate Laurent polynomials over the integers

Exponent-vector to coefficient maps with exact ring operations and exact
division. Used by the Weyl character formula, where the alternating sum is
divided by the Weyl denominator.

Author: Copolarity-Verify
"""

from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from .errors import ComputationError, InputError
from .weights import checked

Exponent = Tuple[int, ...]


class LaurentPolynomial:
    """
    Immutable sparse Laurent polynomial with integer coefficients.

    Attributes:
        nvars: Number of variables
        terms: Mapping exponent vector -> nonzero coefficient
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponent, int]] = None) -> None:
        if nvars < 0:
            raise InputError(f"Invalid variable count: {nvars}")
        self.nvars = nvars
        cleaned: Dict[Exponent, int] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != nvars:
                raise InputError(f"Exponent {exponent} does not have {nvars} entries")
            if coefficient:
                cleaned[exponent] = checked(int(coefficient))
        self._terms = cleaned

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exponent: Iterable[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(sorted(self._terms.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.nvars}, {dict(sorted(self._terms.items()))})"

    def _check_compatible(self, other: "LaurentPolynomial") -> None:
        if self.nvars != other.nvars:
            raise InputError(f"Variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check_compatible(other)
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            result[exponent] = checked(result.get(exponent, 0) + coefficient)
        return LaurentPolynomial(self.nvars, result)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._check_compatible(other)
        result: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                result[exponent] = checked(result.get(exponent, 0) + checked(c1 * c2))
        return LaurentPolynomial(self.nvars, result)

    def shifted(self, exponent: Iterable[int]) -> "LaurentPolynomial":
        """Multiply by the monomial x^exponent."""
        shift = tuple(exponent)
        if len(shift) != self.nvars:
            raise InputError(f"Shift {shift} does not have {self.nvars} entries")
        return LaurentPolynomial(
            self.nvars, {tuple(a + b for a, b in zip(e, shift)): c for e, c in self._terms.items()}
        )

    def extended(self, exponent: int) -> "LaurentPolynomial":
        """Append one variable, every term carrying the given power of it."""
        return LaurentPolynomial(self.nvars + 1, {e + (exponent,): c for e, c in self._terms.items()})

    def leading_exponent(self) -> Exponent:
        """Lexicographically largest exponent."""
        if not self._terms:
            raise InputError("The zero polynomial has no leading term")
        return max(self._terms)

    def exponent_box(self) -> Tuple[Exponent, Exponent]:
        """Componentwise minimum and maximum exponents."""
        if not self._terms:
            raise InputError("The zero polynomial has no exponent box")
        exponents = list(self._terms)
        lows = tuple(min(e[i] for e in exponents) for i in range(self.nvars))
        highs = tuple(max(e[i] for e in exponents) for i in range(self.nvars))
        return lows, highs

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """
        Exact division by repeated cancellation of the lexicographic leading term.

        Args:
            divisor: Nonzero Laurent polynomial

        Returns:
            Quotient q with q * divisor == self

        Raises:
            InputError: If divisor is zero
            ComputationError: If the division is not exact

        Note:
            For an exact division every quotient exponent lies in the box
            [min(self) - min(divisor), max(self) - max(divisor)] per variable;
            a candidate term outside that box proves a nonzero remainder.
        """
        self._check_compatible(divisor)
        if divisor.is_zero():
            raise InputError("Division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial(self.nvars)

        lead = divisor.leading_exponent()
        lead_coefficient = divisor._terms[lead]
        (num_low, num_high), (div_low, div_high) = self.exponent_box(), divisor.exponent_box()
        low = tuple(a - b for a, b in zip(num_low, div_low))
        high = tuple(a - b for a, b in zip(num_high, div_high))

        remainder = dict(self._terms)
        quotient: Dict[Exponent, int] = {}
        while remainder:
            top = max(remainder)
            coefficient = remainder[top]
            step = tuple(a - b for a, b in zip(top, lead))
            if coefficient % lead_coefficient or any(s < lo or s > hi for s, lo, hi in zip(step, low, high)):
                raise ComputationError(
                    "Laurent division left a nonzero remainder",
                    detail={"term": top, "coefficient": coefficient},
                )
            factor = coefficient // lead_coefficient
            quotient[step] = checked(quotient.get(step, 0) + factor)
            for exponent, c in divisor._terms.items():
                target = tuple(a + b for a, b in zip(step, exponent))
                value = checked(remainder.get(target, 0) - checked(factor * c))
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return LaurentPolynomial(self.nvars, quotient)
