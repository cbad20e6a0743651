import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from arith.exact_arith import format_rational
from series.lambda_series import LambdaSeries


@dataclass(frozen=True)
class CheckFailure:
    """First coefficient at which two sides of an identity differ"""

    q_degree: Optional[int]
    lambda_exp: Optional[int]
    expected: Fraction
    actual: Fraction
    label: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "q_degree": self.q_degree,
            "lambda_exp": self.lambda_exp,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
        }
        if self.label is not None:
            data["label"] = self.label
        return data


@dataclass(frozen=True)
class CheckReport:
    check_name: str
    passed: bool
    trunc_lambda: int
    trunc_q: int
    first_failure: Optional[CheckFailure] = None
    variable: str = "λ"

    def __post_init__(self):
        if self.passed != (self.first_failure is None):
            raise ValueError("a report passes exactly when it records no failure")

    @classmethod
    def from_failure(cls, check_name: str, trunc_lambda: int, trunc_q: int,
                     failure: Optional[CheckFailure], variable: str = "λ") -> "CheckReport":
        return cls(check_name, failure is None, trunc_lambda, trunc_q, failure, variable)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.check_name,
            "passed": self.passed,
            "lambda_order": self.trunc_lambda,
            "q_order": self.trunc_q,
            "first_failure": self.first_failure.to_dict() if self.first_failure else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self) -> str:
        status = "✅ passed" if self.passed else "❌ FAILED"
        text = f"{status}: {self.check_name} ({self.variable} through {self.trunc_lambda}, q through {self.trunc_q})"
        failure = self.first_failure
        if failure is not None:
            where = []
            if failure.label is not None:
                where.append(f"class {failure.label}")
            if failure.q_degree is not None:
                where.append(f"q^{failure.q_degree}")
            if failure.lambda_exp is not None:
                where.append(f"{self.variable}^{failure.lambda_exp}")
            text += (
                f"\n   first mismatch at {', '.join(where)}: "
                f"expected {format_rational(failure.expected)}, got {format_rational(failure.actual)}"
            )
        return text


def first_mismatch(expected: LambdaSeries, actual: LambdaSeries, low: int, high: int,
                   q_degree: Optional[int] = None, label: Optional[str] = None) -> Optional[CheckFailure]:
    """Compare two lambda-series coefficient by coefficient over [low, high]"""
    for e in range(low, high + 1):
        a, b = expected.coefficient(e), actual.coefficient(e)
        if a != b:
            return CheckFailure(q_degree, e, a, b, label)
    return None
