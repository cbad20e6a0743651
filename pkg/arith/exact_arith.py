import logging
import threading
from fractions import Fraction
from math import comb
from typing import List, Union

from errors import DomainError

logger = logging.getLogger(__name__)

Rational = Fraction


class ScalarSequenceCache:
    """
    Growable memo tables for the scalar sequences every series module consumes.
    - 1. Tables
        def bernoulli: B_n under w/(e^w - 1) = sum B_n w^n/n!, so B_1 = -1/2.
        def eulerian_row: row n of the Eulerian triangle, A(n, k) for 0 <= k < n (row 0 is [1]).
        def factorial: n!

    Rows are only ever appended under the lock; readers index into fully built rows.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._bernoulli: List[Fraction] = [Fraction(1)]
        self._eulerian: List[List[int]] = [[1], [1]]
        self._factorials: List[int] = [1]

    def bernoulli(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"bernoulli index must be >= 0, got {n}")
        if n >= len(self._bernoulli):
            with self._lock:
                self._extend_bernoulli(n)
        return self._bernoulli[n]

    def _extend_bernoulli(self, n: int) -> None:
        table = self._bernoulli
        for m in range(len(table), n + 1):
            if m > 1 and m % 2 == 1:
                table.append(Fraction(0))
                continue
            # sum_{k=0}^{m} C(m+1, k) B_k = 0
            total = sum(comb(m + 1, k) * table[k] for k in range(m))
            table.append(-total / (m + 1))
        logger.debug(f"Bernoulli table extended to B_{n}")

    def eulerian_row(self, n: int) -> List[int]:
        if n < 0:
            raise DomainError(f"Eulerian row index must be >= 0, got {n}")
        if n >= len(self._eulerian):
            with self._lock:
                rows = self._eulerian
                for m in range(len(rows), n + 1):
                    prev = rows[m - 1]
                    row = []
                    for k in range(m):
                        left = (k + 1) * prev[k] if k < len(prev) else 0
                        right = (m - k) * prev[k - 1] if k >= 1 else 0
                        row.append(left + right)
                    rows.append(row)
        return self._eulerian[n]

    def factorial(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"factorial argument must be >= 0, got {n}")
        if n >= len(self._factorials):
            with self._lock:
                table = self._factorials
                for m in range(len(table), n + 1):
                    table.append(table[-1] * m)
        return self._factorials[n]


_cache = ScalarSequenceCache()


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2 (only even indices enter any potential formula)"""
    return _cache.bernoulli(n)


def factorial(n: int) -> int:
    return _cache.factorial(n)


def eulerian(n: int, k: int) -> int:
    """Eulerian number A(n, k): permutations of n letters with exactly k descents"""
    if n < 1:
        raise DomainError(f"eulerian requires n >= 1, got n={n}")
    if not 0 <= k < n:
        raise DomainError(f"eulerian requires 0 <= k < n, got n={n}, k={k}")
    return _cache.eulerian_row(n)[k]


def eulerian_polynomial(m: int) -> List[int]:
    """Coefficients (lowest degree first) of A_m(q) = sum_k A(m, k) q^k, with A_0 = 1"""
    return list(_cache.eulerian_row(m))


def gw_genus_coeff(g: int) -> Fraction:
    """c_g = (-1)^(g-1) B_2g / (2g (2g-2)!), the prefactor of Li_{3-2g} at genus g >= 1"""
    if g < 1:
        raise DomainError(
            f"gw_genus_coeff is defined for g >= 1, got {g} (the genus-zero prefactor is 1)"
        )
    sign = 1 if g % 2 == 1 else -1
    return sign * bernoulli(2 * g) / (2 * g * factorial(2 * g - 2))


def genus_coeff_table(genus_cut: int) -> List[Fraction]:
    """[c_0, c_1, ..., c_G] with c_0 = 1"""
    if genus_cut < 0:
        raise DomainError(f"genus cut must be >= 0, got {genus_cut}")
    return [Fraction(1)] + [gw_genus_coeff(g) for g in range(1, genus_cut + 1)]


def constant_map_coeff(g: int, euler_char: int) -> Fraction:
    """Constant-map contribution chi (-1)^(g-1) B_2g B_{2g-2} / (4g (2g-2) (2g-2)!) for g >= 2"""
    if g < 2:
        raise DomainError(
            f"constant-map coefficients have a universal form only for g >= 2, got {g}"
        )
    sign = 1 if g % 2 == 1 else -1
    numerator = euler_char * sign * bernoulli(2 * g) * bernoulli(2 * g - 2)
    return numerator / (4 * g * (2 * g - 2) * factorial(2 * g - 2))


def format_rational(value: Union[Fraction, int]) -> str:
    """'p/q', or 'p' when the denominator is 1"""
    return str(Fraction(value))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"not an exact rational: {text!r}") from e
