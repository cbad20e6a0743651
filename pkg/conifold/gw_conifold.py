import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

from arith.exact_arith import (
    constant_map_coeff,
    factorial,
    format_rational,
    genus_coeff_table,
    gw_genus_coeff,
)
from errors import DomainError
from polylog.polylog_series import li1_ladder, polylog_series
from series.lambda_series import LambdaSeries
from series.q_series import QSeries

logger = logging.getLogger(__name__)


@dataclass
class PotentialSeries:
    """
    Non-constant-map potential of the resolved conifold, stored per q-degree:
    per_degree[n] = f_n(lambda) = sum_{g=0}^{G} c_g n^(2g-3) lambda^(2g-2).
    """

    genus_cut: int
    q_cut: int
    per_degree: Dict[int, LambdaSeries] = field(default_factory=dict)

    @property
    def lambda_exponents(self):
        return list(range(-2, 2 * self.genus_cut - 1, 2))

    def genus_view(self, g: int) -> QSeries:
        """F~^g as a q-series: the lambda^(2g-2) coefficient of every f_n"""
        if not 0 <= g <= self.genus_cut:
            raise DomainError(f"genus {g} outside 0..{self.genus_cut}")
        return QSeries(self.q_cut, {n: f[2 * g - 2] for n, f in self.per_degree.items()})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "genus_cut": self.genus_cut,
            "q_cut": self.q_cut,
            "coeffs": {
                str(n): {str(e): format_rational(c) for e, c in f.terms()}
                for n, f in sorted(self.per_degree.items())
            },
        }

    def render_table(self) -> str:
        exps = self.lambda_exponents
        header = ["n"] + [f"λ^{e}" for e in exps]
        rows = [[str(n)] + [format_rational(f[e]) for e in exps] for n, f in sorted(self.per_degree.items())]
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in [header] + rows]
        return "\n".join(lines)


def free_energy_genus(g: int, trunc: int) -> QSeries:
    """F~^0 = Li_3(q), F~^g = c_g Li_{3-2g}(q)"""
    if g < 0:
        raise DomainError(f"genus must be >= 0, got {g}")
    if g == 0:
        return polylog_series(3, trunc)
    return polylog_series(3 - 2 * g, trunc).scale(gw_genus_coeff(g))


def free_energy_from_li1(g: int, trunc: int) -> QSeries:
    """F~^g = c_g theta_q^(2g-2) Li_1(q) for g >= 1"""
    if g < 1:
        raise DomainError(f"the Li_1 form holds for g >= 1, got {g}")
    return li1_ladder(2 * g - 2, trunc).scale(gw_genus_coeff(g))


def potential(genus_cut: int, q_cut: int, genus_coeffs: Optional[Sequence[Fraction]] = None) -> PotentialSeries:
    """
    Double-truncated potential, genera 0..genus_cut and q-degrees 1..q_cut.
    genus_coeffs replaces [c_0, ..., c_G] (used to check that the verifiers notice corrupted data).
    """
    if genus_cut < 1 or q_cut < 1:
        raise DomainError(f"potential needs genus_cut >= 1 and q_cut >= 1, got ({genus_cut}, {q_cut})")
    coeffs = list(genus_coeffs) if genus_coeffs is not None else genus_coeff_table(genus_cut)
    if len(coeffs) != genus_cut + 1:
        raise DomainError(f"expected {genus_cut + 1} genus coefficients, got {len(coeffs)}")
    max_exp = 2 * genus_cut - 2
    per_degree = {}
    for n in range(1, q_cut + 1):
        terms = {2 * g - 2: Fraction(c) * Fraction(n) ** (2 * g - 3) for g, c in enumerate(coeffs)}
        per_degree[n] = LambdaSeries.from_dict(terms, max_exp, min_exp=-2)
    logger.debug(f"built potential with genus_cut={genus_cut}, q_cut={q_cut}")
    return PotentialSeries(genus_cut, q_cut, per_degree)


def sin_expansion(max_exp: int, variable: str = "s") -> LambdaSeries:
    """
    Laurent expansion of (2 sin(s/2))^-2 through s^max_exp, computed by inverting the
    square of the Taylor series of 2 sin(s/2) (no Bernoulli numbers involved).
    """
    if max_exp < 0 or max_exp % 2:
        raise DomainError(f"max_exp must be even and >= 0, got {max_exp}")
    top = max_exp + 3
    # 2 sin(s/2) = sum_k 2 (-1)^k (s/2)^(2k+1) / (2k+1)!
    terms = {}
    for k in range(0, top // 2 + 1):
        sign = -1 if k % 2 else 1
        terms[2 * k + 1] = Fraction(2 * sign, 2 ** (2 * k + 1) * factorial(2 * k + 1))
    chord = LambdaSeries.from_dict(terms, top, variable=variable)
    return (chord * chord).invert().truncate(max_exp)


def coefficient_closed_form(n: int, genus_cut: int) -> LambdaSeries:
    """f_n(lambda) = (1/n) (2 sin(n lambda/2))^-2 through lambda^(2G-2)"""
    if n < 1:
        raise DomainError(f"q-degree must be >= 1, got {n}")
    if genus_cut < 1:
        raise DomainError(f"genus_cut must be >= 1, got {genus_cut}")
    return sin_expansion(2 * genus_cut - 2).rescale(n).scale(Fraction(1, n)).with_variable("λ")


def constant_map_series(genus_cut: int, euler_char: int) -> LambdaSeries:
    """sum_{g=2}^{G} F_{beta=0}^g lambda^(2g-2); kept apart from the potential of non-constant maps"""
    if genus_cut < 2:
        raise DomainError(f"constant-map series starts at genus 2, got genus_cut={genus_cut}")
    terms = {2 * g - 2: constant_map_coeff(g, euler_char) for g in range(2, genus_cut + 1)}
    return LambdaSeries.from_dict(terms, 2 * genus_cut - 2, min_exp=2)
