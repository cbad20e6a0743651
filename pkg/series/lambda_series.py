import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from errors import SeriesError

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int]

# The potential's worst pole is lambda^-2.
MIN_EXPONENT = -2


class LambdaSeries:
    """
    Truncated Laurent series sum_{e=min_exp}^{max_exp} a_e x^e with exact rational coefficients.

    Coefficients above max_exp are unknown (O(x^(max_exp+1))), not zero, so equality is
    only meaningful up to the common truncation of both operands.
    - 1. Construction
        def from_dict: build from {exponent: coefficient}.
        def zero / one: exact constants at a given truncation.
    - 2. Ring operations
        +, -, * (with Laurent precision tracking), scalar *, invert.
    - 3. Substitutions
        def rescale: x -> c x.
        def shift: multiplication by x^k.
    """

    __slots__ = ("min_exp", "coeffs", "variable")

    def __init__(self, min_exp: int, coeffs: Sequence[Scalar], variable: str = "λ"):
        if min_exp < MIN_EXPONENT:
            raise SeriesError(
                f"series starting at {variable}^{min_exp} is below the allowed pole {variable}^{MIN_EXPONENT}"
            )
        if not coeffs:
            raise SeriesError("a truncated series needs at least one known coefficient")
        self.min_exp = min_exp
        self.coeffs: Tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        self.variable = variable

    @classmethod
    def from_dict(cls, terms: Dict[int, Scalar], max_exp: int, min_exp: Optional[int] = None,
                  variable: str = "λ") -> "LambdaSeries":
        nonzero = [e for e, c in terms.items() if c != 0 and e <= max_exp]
        if min_exp is None:
            min_exp = min(nonzero) if nonzero else min(0, max_exp)
        elif nonzero and min(nonzero) < min_exp:
            raise SeriesError(f"term at exponent {min(nonzero)} lies below min_exp {min_exp}")
        if max_exp < min_exp:
            min_exp = max_exp
        coeffs = [Fraction(terms.get(e, 0)) for e in range(min_exp, max_exp + 1)]
        return cls(min_exp, coeffs, variable)

    @classmethod
    def zero(cls, max_exp: int, variable: str = "λ") -> "LambdaSeries":
        return cls.from_dict({}, max_exp, variable=variable)

    @classmethod
    def one(cls, max_exp: int, variable: str = "λ") -> "LambdaSeries":
        return cls.from_dict({0: 1}, max_exp, variable=variable)

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient; max_exp + 1 for a series known to be zero"""
        for offset, c in enumerate(self.coeffs):
            if c != 0:
                return self.min_exp + offset
        return self.max_exp + 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coefficient(self, exp: int) -> Fraction:
        if exp > self.max_exp:
            raise SeriesError(
                f"coefficient of {self.variable}^{exp} is beyond the truncation {self.variable}^{self.max_exp}"
            )
        if exp < self.min_exp:
            return Fraction(0)
        return self.coeffs[exp - self.min_exp]

    def __getitem__(self, exp: int) -> Fraction:
        return self.coefficient(exp)

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order"""
        for offset, c in enumerate(self.coeffs):
            if c != 0:
                yield self.min_exp + offset, c

    def to_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms())

    def truncate(self, max_exp: int) -> "LambdaSeries":
        if max_exp > self.max_exp:
            raise SeriesError(
                f"cannot extend precision from {self.variable}^{self.max_exp} to {self.variable}^{max_exp}"
            )
        return LambdaSeries.from_dict(self.to_dict(), max_exp, variable=self.variable)

    def _common_max(self, other: "LambdaSeries") -> int:
        if self.max_exp != other.max_exp:
            logger.debug(
                f"operands truncated at {self.max_exp} and {other.max_exp}; result kept to {min(self.max_exp, other.max_exp)}"
            )
        return min(self.max_exp, other.max_exp)

    def __add__(self, other: Union["LambdaSeries", Scalar]) -> "LambdaSeries":
        if not isinstance(other, LambdaSeries):
            other = LambdaSeries.from_dict({0: other}, self.max_exp, variable=self.variable)
        max_exp = self._common_max(other)
        terms: Dict[int, Fraction] = {}
        for e, c in list(self.terms()) + list(other.terms()):
            if e <= max_exp:
                terms[e] = terms.get(e, Fraction(0)) + c
        return LambdaSeries.from_dict(terms, max_exp, variable=self.variable)

    __radd__ = __add__

    def __neg__(self) -> "LambdaSeries":
        return LambdaSeries(self.min_exp, [-c for c in self.coeffs], self.variable)

    def __sub__(self, other: Union["LambdaSeries", Scalar]) -> "LambdaSeries":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LambdaSeries":
        return (-self) + other

    def scale(self, factor: Scalar) -> "LambdaSeries":
        factor = Fraction(factor)
        return LambdaSeries(self.min_exp, [factor * c for c in self.coeffs], self.variable)

    def __mul__(self, other: Union["LambdaSeries", Scalar]) -> "LambdaSeries":
        if not isinstance(other, LambdaSeries):
            return self.scale(other)
        v1, v2 = self.valuation, other.valuation
        # an unknown tail of one factor pollutes the product from (its truncation + the other's valuation)
        max_exp = min(self.max_exp + v2, other.max_exp + v1)
        if self.is_zero() or other.is_zero() or max_exp < v1 + v2:
            return LambdaSeries.zero(max(max_exp, MIN_EXPONENT), self.variable)
        if v1 + v2 < MIN_EXPONENT:
            raise SeriesError(
                f"product has a pole {self.variable}^{v1 + v2} below {self.variable}^{MIN_EXPONENT}"
            )
        terms: Dict[int, Fraction] = {}
        right = list(other.terms())
        for e1, c1 in self.terms():
            if e1 + v2 > max_exp:
                break
            for e2, c2 in right:
                e = e1 + e2
                if e > max_exp:
                    break
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return LambdaSeries.from_dict(terms, max_exp, min_exp=v1 + v2, variable=self.variable)

    def __rmul__(self, other: Scalar) -> "LambdaSeries":
        return self.scale(other)

    def invert(self) -> "LambdaSeries":
        """Multiplicative inverse; the relative precision max_exp - valuation is preserved"""
        if self.is_zero():
            raise SeriesError("cannot invert a series that is zero to its truncation")
        v = self.valuation
        unit = [self.coefficient(e) for e in range(v, self.max_exp + 1)]
        rel = len(unit)
        a0_inv = 1 / unit[0]
        inverse = [a0_inv]
        for k in range(1, rel):
            acc = sum((unit[j] * inverse[k - j] for j in range(1, k + 1)), Fraction(0))
            inverse.append(-a0_inv * acc)
        if -v < MIN_EXPONENT:
            raise SeriesError(
                f"inverse has a pole {self.variable}^{-v} below {self.variable}^{MIN_EXPONENT}"
            )
        return LambdaSeries(-v, inverse, self.variable)

    def rescale(self, factor: Scalar) -> "LambdaSeries":
        """Substitute x -> factor * x"""
        factor = Fraction(factor)
        if factor == 0:
            raise SeriesError("rescaling by zero is not a substitution")
        return LambdaSeries(
            self.min_exp,
            [c * factor ** (self.min_exp + i) for i, c in enumerate(self.coeffs)],
            self.variable,
        )

    def shift(self, k: int) -> "LambdaSeries":
        """Multiply by x^k"""
        return LambdaSeries(self.min_exp + k, self.coeffs, self.variable)

    def with_variable(self, variable: str) -> "LambdaSeries":
        return LambdaSeries(self.min_exp, self.coeffs, variable)

    def agrees_with(self, other: "LambdaSeries", through: Optional[int] = None) -> bool:
        limit = min(self.max_exp, other.max_exp) if through is None else through
        low = min(self.min_exp, other.min_exp)
        return all(self.coefficient(e) == other.coefficient(e) for e in range(low, limit + 1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LambdaSeries.from_dict({0: other}, self.max_exp, variable=self.variable)
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return self.agrees_with(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"LambdaSeries({self.render()})"

    def render(self) -> str:
        parts = [f"{c}·{self.variable}^{e}" for e, c in self.terms()]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.variable}^{self.max_exp + 1})"


def lambda_series(terms: Iterable[Tuple[int, Scalar]], max_exp: int, variable: str = "λ") -> LambdaSeries:
    """Shorthand: lambda_series([(-2, 1), (0, Fraction(1, 12))], 2)"""
    collected: Dict[int, Fraction] = {}
    for e, c in terms:
        collected[e] = collected.get(e, Fraction(0)) + Fraction(c)
    return LambdaSeries.from_dict(collected, max_exp, variable=variable)
