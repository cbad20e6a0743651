import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional

from arith.exact_arith import bernoulli, factorial, gw_genus_coeff
from checks.check_report import CheckFailure, CheckReport, first_mismatch
from conifold.gw_conifold import potential
from errors import DomainError
from polylog.polylog_series import polylog_series
from series.lambda_series import LambdaSeries
from series.operators import central_difference_symbol, real_derivative_power, theta_q_inverse
from series.q_series import QSeries

logger = logging.getLogger(__name__)

GENERATING_IDENTITY = "generating_identity"
DIFFERENCE_EQUATION = "theorem_3_1"
GENUS_RECURSION = "genus_recursion"


class DifferenceChecker:
    """
    Exact verification of the conifold difference equation and its consequences.
    - 1. Checks
        def check_generating_identity: (e^w - 2 + e^-w)(w^-2 - sum B_2g w^(2g-2)/(2g (2g-2)!)) = 1.
        def check_theorem: second difference of F~ in t equals ((1/2pi) d/dt)^2 F~^0, per q-degree.
        def check_recursion: the lambda^(2g) part of the difference equation, a relation among F~^0..F~^g.
        def check_recursion_range: check_recursion for g = 1..G.
    - 2. Derivation
        def solve_recursion: rebuild F~^1..F~^G from F~^0 = Li_3 alone.

    genus_coeffs overrides c_g for selected genera so that corrupted data can be fed to the checks.
    """

    def __init__(self, genus_coeffs: Optional[Mapping[int, Fraction]] = None):
        self.overrides: Dict[int, Fraction] = {g: Fraction(c) for g, c in (genus_coeffs or {}).items()}

    def genus_coeff(self, g: int) -> Fraction:
        if g in self.overrides:
            return self.overrides[g]
        return Fraction(1) if g == 0 else gw_genus_coeff(g)

    def genus_coeffs(self, genus_cut: int) -> List[Fraction]:
        return [self.genus_coeff(g) for g in range(genus_cut + 1)]

    def genus_series(self, g: int, trunc: int) -> QSeries:
        return polylog_series(3 - 2 * g, trunc).scale(self.genus_coeff(g))

    def check_generating_identity(self, max_exp: int) -> CheckReport:
        if max_exp < 0:
            raise DomainError(f"max_exp must be >= 0, got {max_exp}")
        w = "w"
        exp_plus = LambdaSeries.from_dict({k: Fraction(1, factorial(k)) for k in range(max_exp + 3)},
                                          max_exp + 2, variable=w)
        exp_minus = exp_plus.rescale(-1)
        shift_symbol = exp_plus + exp_minus - 2

        bracket_terms = {-2: Fraction(1)}
        for g in range(1, max_exp // 2 + 1):
            bracket_terms[2 * g - 2] = -bernoulli(2 * g) / (2 * g * factorial(2 * g - 2))
        bracket = LambdaSeries.from_dict(bracket_terms, max_exp - 2, variable=w)

        product = shift_symbol * bracket
        one = LambdaSeries.one(max_exp, variable=w)
        failure = first_mismatch(one, product, -2, max_exp, label="product")

        if failure is None:
            # w^2 e^w / (e^w - 1)^2 = 1 - sum_{n>=2} B_n w^n / (n (n-2)!), odd n included
            exp_w = exp_plus.truncate(max_exp + 1)
            denominator = (exp_w - 1) * (exp_w - 1)
            lhs = (exp_w.truncate(max_exp) * denominator.invert()).shift(2)
            rhs_terms = {0: Fraction(1)}
            for n in range(2, max_exp + 1):
                rhs_terms[n] = -bernoulli(n) / (n * factorial(n - 2))
            rhs = LambdaSeries.from_dict(rhs_terms, max_exp, variable=w)
            failure = first_mismatch(rhs, lhs, 0, max_exp, label="intermediate")

        report = CheckReport.from_failure(GENERATING_IDENTITY, max_exp, 0, failure, variable=w)
        logger.info(report.render())
        return report

    def theorem_residuals(self, genus_cut: int, q_cut: int) -> Dict[int, LambdaSeries]:
        """
        LHS_n - RHS_n for every q-degree n, known through lambda^(2G).
        LHS_n = (2cos(n lambda) - 2) f_n(lambda); RHS_n = -n^2 n^-3 = -1/n.
        """
        pot = potential(genus_cut, q_cut, self.genus_coeffs(genus_cut))
        residuals = {}
        for n, f_n in pot.per_degree.items():
            lhs = central_difference_symbol(n, 2 * genus_cut + 2) * f_n
            residuals[n] = lhs + Fraction(1, n)
        return residuals

    def check_theorem(self, genus_cut: int, q_cut: int) -> CheckReport:
        if genus_cut < 1 or q_cut < 1:
            raise DomainError(f"check_theorem needs G >= 1 and N >= 1, got ({genus_cut}, {q_cut})")
        top = 2 * genus_cut
        failure = None
        for n, residual in sorted(self.theorem_residuals(genus_cut, q_cut).items()):
            rhs = LambdaSeries.from_dict({0: Fraction(-1, n)}, top)
            failure = first_mismatch(rhs, rhs + residual, -2, top, q_degree=n)
            if failure is not None:
                logger.warning(f"difference equation fails at q^{n}, λ^{failure.lambda_exp}")
                break
        report = CheckReport.from_failure(DIFFERENCE_EQUATION, top, q_cut, failure)
        logger.info(report.render())
        return report

    @staticmethod
    def scalar_recursion_residual(g: int, coeffs: List[Fraction]) -> Fraction:
        """sum_{k=0}^{g} (-1)^(g-k+1) c_k / (2g-2k+2)!, zero for every g >= 1"""
        total = Fraction(0)
        for k in range(g + 1):
            sign = -1 if (g - k + 1) % 2 else 1
            total += sign * coeffs[k] / factorial(2 * g - 2 * k + 2)
        return total

    def recursion_series(self, g: int, trunc: int) -> QSeries:
        """sum_{k=0}^{g} ((1/2pi) d/dt)^(2g-2k+2) F~^k / (2g-2k+2)!"""
        total = QSeries(trunc)
        for k in range(g + 1):
            order = 2 * g - 2 * k + 2
            term = real_derivative_power(self.genus_series(k, trunc), order)
            total = total + term.scale(Fraction(1, factorial(order)))
        return total

    def check_recursion(self, g: int, trunc: int) -> CheckReport:
        if g < 1 or trunc < 1:
            raise DomainError(f"check_recursion needs g >= 1 and N >= 1, got ({g}, {trunc})")
        residual = self.recursion_series(g, trunc)
        failure = None
        for n, c in residual.items():
            failure = CheckFailure(n, 2 * g, Fraction(0), c)
            break
        report = CheckReport.from_failure(GENUS_RECURSION, 2 * g, trunc, failure)
        logger.info(report.render())
        return report

    def check_recursion_range(self, genus_cut: int, trunc: int) -> CheckReport:
        for g in range(1, genus_cut + 1):
            report = self.check_recursion(g, trunc)
            if not report.passed:
                return report
        return CheckReport(GENUS_RECURSION, True, 2 * genus_cut, trunc)

    def solve_recursion(self, genus_cut: int, trunc: int) -> Dict[int, QSeries]:
        """
        F~^g for g = 1..G from F~^0 = Li_3 only. The k = g term of the recursion is
        -theta_q^2 F~^g / 2, so theta_q^2 F~^g = 2 sum_{k<g} (...) and F~^g follows by
        dividing the degree-n coefficient by n^2.
        """
        if genus_cut < 1:
            raise DomainError(f"genus_cut must be >= 1, got {genus_cut}")
        solved: Dict[int, QSeries] = {0: polylog_series(3, trunc)}
        for g in range(1, genus_cut + 1):
            lower = QSeries(trunc)
            for k in range(g):
                order = 2 * g - 2 * k + 2
                lower = lower + real_derivative_power(solved[k], order).scale(Fraction(1, factorial(order)))
            solved[g] = theta_q_inverse(lower.scale(2), 2)
            logger.debug(f"solved genus {g} from the recursion")
        del solved[0]
        return solved
