import logging
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from errors import SeriesError
from series.lambda_series import LambdaSeries

logger = logging.getLogger(__name__)

Coefficient = Union[Fraction, LambdaSeries]


def _is_zero(c) -> bool:
    if isinstance(c, LambdaSeries):
        return c.is_zero()
    return c == 0


class QSeries:
    """
    Truncated power series sum_{n=0}^{trunc} c_n q^n.

    Coefficients are Fractions or LambdaSeries; an absent degree is an exact zero.
    Operations never extend precision: a binary result keeps the smaller trunc.
    """

    __slots__ = ("trunc", "coeffs")

    def __init__(self, trunc: int, coeffs: Dict[int, Coefficient] = None):
        if trunc < 0:
            raise SeriesError(f"q-truncation must be >= 0, got {trunc}")
        self.trunc = trunc
        self.coeffs: Dict[int, Coefficient] = {}
        for n, c in (coeffs or {}).items():
            if n < 0:
                raise SeriesError(f"negative q-degree {n} in a power series")
            if n > trunc or _is_zero(c):
                continue
            self.coeffs[n] = Fraction(c) if isinstance(c, int) else c

    def coefficient(self, n: int) -> Coefficient:
        if n > self.trunc:
            raise SeriesError(f"q^{n} is beyond the truncation q^{self.trunc}")
        return self.coeffs.get(n, Fraction(0))

    def __getitem__(self, n: int) -> Coefficient:
        return self.coefficient(n)

    def degrees(self) -> Iterator[int]:
        return iter(sorted(self.coeffs))

    def items(self) -> Iterator[Tuple[int, Coefficient]]:
        for n in sorted(self.coeffs):
            yield n, self.coeffs[n]

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, trunc: int) -> "QSeries":
        if trunc > self.trunc:
            raise SeriesError(f"cannot extend q-precision from {self.trunc} to {trunc}")
        return QSeries(trunc, self.coeffs)

    def _common_trunc(self, other: "QSeries") -> int:
        if self.trunc != other.trunc:
            logger.debug(
                f"q-truncations {self.trunc} and {other.trunc} differ; result kept to {min(self.trunc, other.trunc)}"
            )
        return min(self.trunc, other.trunc)

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = self._common_trunc(other)
        result: Dict[int, Coefficient] = {}
        for source in (self.coeffs, other.coeffs):
            for n, c in source.items():
                if n <= trunc:
                    result[n] = result[n] + c if n in result else c
        return QSeries(trunc, result)

    def __neg__(self) -> "QSeries":
        return QSeries(self.trunc, {n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def scale(self, factor: Union[Fraction, int, LambdaSeries]) -> "QSeries":
        return QSeries(self.trunc, {n: c * factor for n, c in self.coeffs.items()})

    def __mul__(self, other: Union["QSeries", Fraction, int]) -> "QSeries":
        if not isinstance(other, QSeries):
            return self.scale(other)
        trunc = self._common_trunc(other)
        result: Dict[int, Coefficient] = {}
        for n1, c1 in self.items():
            for n2, c2 in other.items():
                n = n1 + n2
                if n > trunc:
                    break
                term = c1 * c2
                result[n] = result[n] + term if n in result else term
        return QSeries(trunc, result)

    def __rmul__(self, other: Union[Fraction, int]) -> "QSeries":
        return self.scale(other)

    def invert(self) -> "QSeries":
        """Inverse of a series with rational coefficients and nonzero constant term"""
        c0 = self.coefficient(0)
        if isinstance(c0, LambdaSeries) or any(isinstance(c, LambdaSeries) for c in self.coeffs.values()):
            raise SeriesError("q-series inversion is defined for rational coefficients only")
        if c0 == 0:
            raise SeriesError("cannot invert a q-series without constant term")
        inv0 = 1 / c0
        inverse = [inv0]
        for k in range(1, self.trunc + 1):
            acc = sum(
                (self.coeffs[j] * inverse[k - j] for j in range(1, k + 1) if j in self.coeffs),
                Fraction(0),
            )
            inverse.append(-inv0 * acc)
        return QSeries(self.trunc, dict(enumerate(inverse)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        for n in range(trunc + 1):
            a, b = self.coefficient(n), other.coefficient(n)
            if isinstance(a, LambdaSeries) or isinstance(b, LambdaSeries):
                if _is_zero(a) and _is_zero(b):
                    continue
                if not isinstance(a, LambdaSeries):
                    a, b = b, a
                if not a == b:
                    return False
            elif a != b:
                return False
        return True

    __hash__ = None

    def __repr__(self) -> str:
        return f"QSeries(trunc={self.trunc}, {len(self.coeffs)} terms)"

    def render(self) -> str:
        """Sparse 'c_n · q^n' lines"""
        lines = []
        for n, c in self.items():
            text = c.render() if isinstance(c, LambdaSeries) else str(c)
            lines.append(f"{text} · q^{n}")
        lines.append(f"+ O(q^{self.trunc + 1})")
        return "\n".join(lines)


def q_series(terms: Dict[int, Union[Fraction, int]], trunc: int) -> QSeries:
    return QSeries(trunc, {n: Fraction(c) for n, c in terms.items()})
