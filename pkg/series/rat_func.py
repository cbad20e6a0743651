from fractions import Fraction
from typing import List, Sequence, Union

import sympy as sp

from errors import SeriesError
from series.q_series import QSeries

Q = sp.Symbol("q")


def _poly(coeffs_low_first: Sequence[Union[Fraction, int]]) -> sp.Poly:
    rationals = [sp.Rational(Fraction(c).numerator, Fraction(c).denominator) for c in coeffs_low_first]
    return sp.Poly(list(reversed(rationals)) or [0], Q, domain=sp.QQ)


def _fractions(poly: sp.Poly) -> List[Fraction]:
    """Coefficients of poly as Fractions, lowest degree first"""
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    return coeffs or [Fraction(0)]


class RatFunc:
    """
    Quotient of two polynomials in q over QQ, kept in normal form:
    common factors removed and the lowest-degree nonzero coefficient of the
    denominator equal to 1 (so (1 - q)^k is stored as is).
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: sp.Poly, denominator: sp.Poly):
        if denominator.is_zero:
            raise SeriesError("rational function with zero denominator")
        if numerator.is_zero:
            self.numerator = sp.Poly(0, Q, domain=sp.QQ)
            self.denominator = sp.Poly(1, Q, domain=sp.QQ)
            return
        common = numerator.gcd(denominator)
        numerator = numerator.exquo(common)
        denominator = denominator.exquo(common)
        lowest = next(c for c in reversed(denominator.all_coeffs()) if c != 0)
        self.numerator = sp.Poly(numerator.as_expr() / lowest, Q, domain=sp.QQ)
        self.denominator = sp.Poly(denominator.as_expr() / lowest, Q, domain=sp.QQ)

    @classmethod
    def from_coeffs(cls, numerator: Sequence[Union[Fraction, int]],
                    denominator: Sequence[Union[Fraction, int]]) -> "RatFunc":
        """Coefficient lists are lowest degree first"""
        return cls(_poly(numerator), _poly(denominator))

    @classmethod
    def from_expr(cls, expr) -> "RatFunc":
        num, den = sp.fraction(sp.together(sp.sympify(expr)))
        return cls(sp.Poly(num, Q, domain=sp.QQ), sp.Poly(den, Q, domain=sp.QQ))

    def numerator_coeffs(self) -> List[Fraction]:
        return _fractions(self.numerator)

    def denominator_coeffs(self) -> List[Fraction]:
        return _fractions(self.denominator)

    def theta_q(self) -> "RatFunc":
        """q d/dq by the quotient rule, reduced"""
        num, den = self.numerator, self.denominator
        derivative = num.diff(Q) * den - num * den.diff(Q)
        return RatFunc(derivative * sp.Poly(Q, Q, domain=sp.QQ), den * den)

    def expand(self, trunc: int) -> QSeries:
        """Power series of the rational function through q^trunc"""
        den = self.denominator_coeffs()
        if den[0] == 0:
            raise SeriesError("denominator vanishes at q = 0; the expansion is not a power series")
        num = QSeries(trunc, dict(enumerate(self.numerator_coeffs())))
        return num * QSeries(trunc, dict(enumerate(den))).invert()

    def as_expr(self):
        return self.numerator.as_expr() / self.denominator.as_expr()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    __hash__ = None

    def render(self) -> str:
        num = sp.factor(self.numerator.as_expr())
        den = sp.factor(self.denominator.as_expr())
        return f"({num}) / ({den})"

    def __repr__(self) -> str:
        return f"RatFunc({self.render()})"
