"""
Operator symbols acting on truncated series.

Both the shift t -> t +- lambda/(2 pi) and the derivative (1/(2 pi)) d/dt are diagonal on q^n:
the central second difference multiplies q^n by 2cos(n lambda) - 2, and
((1/(2 pi)) d/dt)^(2m) multiplies it by (-1)^m n^(2m). Only these even combinations are
ever formed, so every coefficient stays rational.
"""
from fractions import Fraction
from typing import Union

from arith.exact_arith import factorial
from errors import SeriesError
from series.lambda_series import LambdaSeries
from series.q_series import QSeries
from series.rat_func import RatFunc

Series = Union[LambdaSeries, QSeries]


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_neg(a: Series) -> Series:
    return -a


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_scale(a: Series, factor) -> Series:
    return a.scale(factor)


def series_invert(s: Series) -> Series:
    return s.invert()


def theta_q(s: QSeries, power: int = 1) -> QSeries:
    """theta_q^power with theta_q = q d/dq: the degree-n coefficient is multiplied by n^power"""
    if power < 0:
        return theta_q_inverse(s, -power)
    return QSeries(s.trunc, {n: c * n ** power for n, c in s.coeffs.items()})


def theta_q_inverse(s: QSeries, power: int = 1) -> QSeries:
    """Anti-derivative theta_q^-power normalized to a vanishing constant term"""
    if power == 0:
        return s
    if 0 in s.coeffs:
        raise SeriesError("theta_q^-1 is undefined on a nonzero constant term")
    return QSeries(s.trunc, {n: c * Fraction(1, n ** power) for n, c in s.coeffs.items()})


def theta_q_rat(f: RatFunc) -> RatFunc:
    return f.theta_q()


def real_derivative_power(s: QSeries, power: int) -> QSeries:
    """((1/(2 pi)) d/dt)^power for even power, i.e. (-1)^(power/2) theta_q^power"""
    if power % 2:
        raise SeriesError(f"only even powers of the t-derivative are rational, got {power}")
    sign = -1 if (power // 2) % 2 else 1
    return theta_q(s, power).scale(sign)


def central_difference_symbol(n: int, max_exp: int, variable: str = "λ") -> LambdaSeries:
    """2cos(n x) - 2 = sum_{k>=1} 2 (-1)^k (n x)^(2k) / (2k)!, truncated at x^max_exp"""
    if n < 1:
        raise SeriesError(f"q-degree must be >= 1, got {n}")
    terms = {}
    for k in range(1, max_exp // 2 + 1):
        sign = -1 if k % 2 else 1
        terms[2 * k] = Fraction(2 * sign * n ** (2 * k), factorial(2 * k))
    return LambdaSeries.from_dict(terms, max_exp, variable=variable)
