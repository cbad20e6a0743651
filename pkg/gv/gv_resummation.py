import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import IO, Any, Dict, List, Tuple, Union

from arith.exact_arith import format_rational, gw_genus_coeff
from checks.check_report import CheckReport, first_mismatch
from conifold.gw_conifold import sin_expansion
from errors import ConsistencyError, DatasetError, DomainError
from polylog.polylog_series import polylog_series
from series.lambda_series import LambdaSeries
from series.operators import central_difference_symbol, real_derivative_power
from series.q_series import QSeries

logger = logging.getLogger(__name__)

GV_DIFFERENCE_EQUATION = "gv_difference_equation"


@dataclass(frozen=True)
class CurveClass:
    label: str
    n0: int


@dataclass
class GVDataset:
    """Genus-zero GV invariants, one independent formal variable t^beta per curve class"""

    classes: List[CurveClass]

    def __post_init__(self):
        seen = set()
        for curve in self.classes:
            if not isinstance(curve.label, str) or not curve.label:
                raise DatasetError(f"class label must be a non-empty string, got {curve.label!r}")
            if curve.label in seen:
                raise DatasetError(f"duplicate class label {curve.label!r}")
            seen.add(curve.label)
            if isinstance(curve.n0, bool) or not isinstance(curve.n0, int):
                raise DatasetError(f"n0 of class {curve.label!r} must be an integer, got {curve.n0!r}")

    @property
    def labels(self) -> List[str]:
        return [curve.label for curve in self.classes]

    def n0(self, label: str) -> int:
        for curve in self.classes:
            if curve.label == label:
                return curve.n0
        raise DatasetError(f"unknown class label {label!r}; known labels: {self.labels}")

    def to_dict(self) -> Dict[str, Any]:
        return {"classes": [{"label": c.label, "n0": c.n0} for c in self.classes]}


def load_gv_dataset(source: Union[IO[bytes], IO[str]]) -> GVDataset:
    """Parse {"classes": [{"label": str, "n0": int}, ...]} from a byte or text stream"""
    try:
        payload = json.loads(source.read())
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise DatasetError(f"GV dataset is not valid JSON: {e}") from e
    if not isinstance(payload, dict) or not isinstance(payload.get("classes"), list):
        raise DatasetError('GV dataset must be an object with a "classes" list')
    classes = []
    for position, entry in enumerate(payload["classes"]):
        if not isinstance(entry, dict) or "label" not in entry or "n0" not in entry:
            raise DatasetError(f'class #{position} needs "label" and "n0" fields, got {entry!r}')
        classes.append(CurveClass(entry["label"], entry["n0"]))
    dataset = GVDataset(classes)
    logger.debug(f"loaded GV dataset with {len(classes)} classes")
    return dataset


def load_gv_dataset_file(path: str) -> GVDataset:
    try:
        with open(path, "rb") as handle:
            return load_gv_dataset(handle)
    except OSError as e:
        raise DatasetError(f"cannot read GV dataset {path}: {e}") from e


@dataclass
class MultiClassSeries:
    """Per class beta, a q-series in q^beta whose degree-k coefficient is a lambda-series"""

    genus_cut: int
    k_cut: int
    per_class: Dict[str, QSeries] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            label: {
                str(k): {str(e): format_rational(c) for e, c in coeff.terms()}
                for k, coeff in series.items()
            }
            for label, series in self.per_class.items()
        }

    def render(self) -> str:
        blocks = [f"[{label}]\n{series.render()}" for label, series in self.per_class.items()]
        return "\n".join(blocks)


class GVResummation:
    """
    Genus-zero Gopakumar-Vafa resummation for a user-supplied dataset.
    - 1. Resummation
        def resum_genus0: sum_beta n0_beta sum_k (1/k)(2 sin(k lambda/2))^-2 (q^beta)^k.
        def genus_expansion: the same data per genus, n0_beta c_g Li_{3-2g}(q^beta).
    - 2. Verification
        def corollary_sides: both sides of the difference equation in t^alpha, per class.
        def check_corollary: second difference in t^alpha against ((1/2pi) d/dt^alpha)^2 F~^0.
    """

    def __init__(self, dataset: GVDataset):
        self.dataset = dataset

    def genus_expansion(self, genus_cut: int, k_cut: int) -> Dict[str, Dict[int, QSeries]]:
        expansion = {}
        for curve in self.dataset.classes:
            per_genus = {0: polylog_series(3, k_cut).scale(curve.n0)}
            for g in range(1, genus_cut + 1):
                per_genus[g] = polylog_series(3 - 2 * g, k_cut).scale(curve.n0 * gw_genus_coeff(g))
            expansion[curve.label] = per_genus
        return expansion

    def resum_genus0(self, genus_cut: int, k_cut: int) -> MultiClassSeries:
        if genus_cut < 1 or k_cut < 1:
            raise DomainError(f"resummation needs G >= 1 and K >= 1, got ({genus_cut}, {k_cut})")
        chord = sin_expansion(2 * genus_cut - 2).with_variable("λ")
        multicover = {k: chord.rescale(k).scale(Fraction(1, k)) for k in range(1, k_cut + 1)}
        result = MultiClassSeries(genus_cut, k_cut)
        for curve in self.dataset.classes:
            result.per_class[curve.label] = QSeries(
                k_cut, {k: f_k.scale(curve.n0) for k, f_k in multicover.items()}
            )
        self._compare_with_genus_expansion(result)
        return result

    def _compare_with_genus_expansion(self, resummed: MultiClassSeries) -> None:
        expansion = self.genus_expansion(resummed.genus_cut, resummed.k_cut)
        for label, series in resummed.per_class.items():
            for g, genus_series in expansion[label].items():
                view = QSeries(resummed.k_cut, {k: c[2 * g - 2] for k, c in series.items()})
                if view != genus_series:
                    raise ConsistencyError(
                        f"class {label!r}: multicover and per-genus forms differ at genus {g}"
                    )

    def genus_zero_potential(self, k_cut: int) -> Dict[str, QSeries]:
        """F~^0(t) = sum_beta n0_beta Li_3(q^beta), one q-series per class variable"""
        return {c.label: polylog_series(3, k_cut).scale(c.n0) for c in self.dataset.classes}

    def corollary_sides(self, alpha: str, genus_cut: int, k_cut: int) -> Dict[str, Tuple[QSeries, QSeries]]:
        """
        Both sides of the difference equation in t^alpha, per class variable q^beta.

        Left: (e^{lambda d/dt^alpha} - 2 + e^{-lambda d/dt^alpha}) applied to the resummed potential.
        Right: ((1/2pi) d/dt^alpha)^2 applied to the genus-zero potential.
        A class beta depends on t^alpha with weight 1 when beta == alpha and 0 otherwise.
        """
        self.dataset.n0(alpha)
        top = 2 * genus_cut
        resummed = self.resum_genus0(genus_cut, k_cut)
        genus_zero = self.genus_zero_potential(k_cut)
        sides = {}
        for label in self.dataset.labels:
            weight = 1 if label == alpha else 0
            lhs = QSeries(
                k_cut,
                {k: _shift_symbol(weight * k, top + 2) * c for k, c in resummed.per_class[label].items()},
            )
            rhs = real_derivative_power(genus_zero[label], 2).scale(weight ** 2)
            sides[label] = (lhs, rhs)
        return sides

    def check_corollary(self, alpha: str, genus_cut: int, k_cut: int) -> CheckReport:
        top = 2 * genus_cut
        sides = self.corollary_sides(alpha, genus_cut, k_cut)
        failure = None
        for label, (lhs, rhs) in sides.items():
            for k in range(1, k_cut + 1):
                actual = lhs.coefficient(k)
                if not isinstance(actual, LambdaSeries):
                    actual = LambdaSeries.from_dict({0: actual}, top)
                expected = LambdaSeries.from_dict({0: rhs.coefficient(k)}, top)
                failure = first_mismatch(expected, actual, -2, top, q_degree=k, label=label)
                if failure is not None:
                    break
            if failure is not None:
                logger.warning(f"GV difference equation fails for class {label!r} at k={failure.q_degree}")
                break
        report = CheckReport.from_failure(GV_DIFFERENCE_EQUATION, top, k_cut, failure)
        logger.info(report.render())
        return report


def _shift_symbol(n: int, max_exp: int) -> LambdaSeries:
    """2cos(n lambda) - 2, which vanishes for a class that does not see the shift"""
    if n == 0:
        return LambdaSeries.zero(max_exp)
    return central_difference_symbol(n, max_exp)


def resum_genus0(data: GVDataset, genus_cut: int, k_cut: int) -> MultiClassSeries:
    return GVResummation(data).resum_genus0(genus_cut, k_cut)


def check_gv_corollary(data: GVDataset, alpha: str, genus_cut: int, k_cut: int) -> CheckReport:
    return GVResummation(data).check_corollary(alpha, genus_cut, k_cut)
