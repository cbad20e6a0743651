import logging
from fractions import Fraction

from arith.exact_arith import eulerian_polynomial
from errors import DomainError
from series.operators import theta_q
from series.q_series import QSeries
from series.rat_func import RatFunc

logger = logging.getLogger(__name__)


def polylog_series(s: int, trunc: int) -> QSeries:
    """Li_s(q) = sum_{n=1}^{trunc} q^n / n^s for any integer order s"""
    if trunc < 1:
        raise DomainError(f"q-truncation must be >= 1, got {trunc}")
    if s >= 0:
        coeffs = {n: Fraction(1, n ** s) for n in range(1, trunc + 1)}
    else:
        coeffs = {n: Fraction(n ** -s) for n in range(1, trunc + 1)}
    return QSeries(trunc, coeffs)


def li1_series(trunc: int) -> QSeries:
    """-log(1 - q) = sum q^n / n"""
    return polylog_series(1, trunc)


def li1_ladder(steps: int, trunc: int) -> QSeries:
    """theta_q^steps Li_1(q), which equals Li_{1-steps}(q)"""
    if steps < 0:
        raise DomainError(f"ladder steps must be >= 0, got {steps}")
    return theta_q(li1_series(trunc), steps)


def polylog_negative_closed(m: int) -> RatFunc:
    """Li_{-m}(q) as a reduced rational function, built as theta_q^m [q/(1-q)]"""
    if m < 0:
        raise DomainError(f"closed forms exist for non-positive orders only, got Li_{-m}")
    result = RatFunc.from_coeffs([0, 1], [1, -1])
    for _ in range(m):
        result = result.theta_q()
    logger.debug(f"closed form of Li_{-m}: {result.render()}")
    return result


def polylog_negative_eulerian(m: int) -> RatFunc:
    """Li_{-m}(q) = q A_m(q) / (1 - q)^(m+1) with A_m the Eulerian polynomial"""
    if m < 0:
        raise DomainError(f"closed forms exist for non-positive orders only, got Li_{-m}")
    numerator = [0] + eulerian_polynomial(m)
    denominator = [1]
    for _ in range(m + 1):
        # multiply by (1 - q)
        denominator = [a - b for a, b in zip(denominator + [0], [0] + denominator)]
    return RatFunc.from_coeffs(numerator, denominator)
