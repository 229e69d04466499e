"""Exact scalars and the Sylvester sequence.

Python ``int`` is arbitrary precision and :class:`fractions.Fraction` keeps
rationals in lowest terms with a positive denominator, so both serve directly
as the Nat/Int/Rat types of this package.  This module adds the Sylvester
table, its identities, JSON encodings and display-only decimal rendering.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import gcd, prod

DEFAULT_TABLE_DEPTH = 12


class SylvesterTable:
    """Cached prefix ``s_0, ..., s_N`` of the Sylvester sequence.

    Readers only ever see a list that was fully built before it was published,
    so concurrent callers observe a consistent prefix.
    """

    def __init__(self, depth: int = DEFAULT_TABLE_DEPTH):
        self._lock = threading.Lock()
        self._values: tuple[int, ...] = (2,)
        self.extend_to(depth)

    def extend_to(self, i: int) -> None:
        if i < len(self._values):
            return
        with self._lock:
            values = list(self._values)
            while len(values) <= i:
                s = values[-1]
                values.append(s * (s - 1) + 1)
            self._values = tuple(values)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("Sylvester index must be non-negative")
        values = self._values
        if i >= len(values):
            self.extend_to(i)
            values = self._values
        return values[i]

    def __len__(self) -> int:
        return len(self._values)

    def prefix(self, n: int) -> tuple[int, ...]:
        """``(s_0, ..., s_{n-1})``."""
        if n > 0:
            self.extend_to(n - 1)
        return self._values[:n]


TABLE = SylvesterTable()


def sylvester(i: int) -> int:
    """Return ``s_i``; ``s_0 = 2`` and ``s_{i+1} = s_i (s_i - 1) + 1``."""
    return TABLE[i]


@dataclass(frozen=True)
class IdentityReport:
    n: int
    product_plus_one: bool
    reciprocal_gap: bool
    doubly_exponential_lower_bound: bool

    @property
    def ok(self) -> bool:
        return self.product_plus_one and self.reciprocal_gap and self.doubly_exponential_lower_bound


def sylvester_identities(n: int) -> IdentityReport:
    if n < 1:
        raise ValueError("n must be at least 1")
    s = TABLE.prefix(n + 2)
    product_ok = s[n + 1] == prod(s[: n + 1]) + 1
    gap_ok = sum(Fraction(1, si) for si in s[:n]) == 1 - Fraction(1, s[n] - 1)
    # for i = 0 the bound reads s_0 > 2^(1/2)
    bound_ok = s[0] ** 2 > 2 and all(s[i] > 2 ** (2 ** (i - 1)) for i in range(1, n + 1))
    return IdentityReport(n, product_ok, gap_ok, bound_ok)


def pairwise_coprime(values) -> bool:
    values = list(values)
    return all(gcd(values[i], values[j]) == 1
               for i in range(len(values)) for j in range(i + 1, len(values)))


def exact_div(num: int, den: int, what: str = "value") -> int:
    """Integer quotient, raising :class:`ArithmeticError` unless exact."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what} is not integral: {num}/{den}")
    return q


def to_decimal(x, digits: int = 6) -> Decimal:
    """Round an exact rational to ``digits`` significant digits (half-even).

    Display only: nothing in the package feeds the result back into exact
    computation.
    """
    x = Fraction(x)
    if x == 0:
        return Decimal(0)
    mag = abs(x)
    # k with 10^(digits-1) <= mag * 10^k < 10^digits
    k = digits - (len(str(mag.numerator)) - len(str(mag.denominator)))
    while mag * Fraction(10) ** k >= 10 ** digits:
        k -= 1
    while mag * Fraction(10) ** k < 10 ** (digits - 1):
        k += 1
    q = round(mag * Fraction(10) ** k)  # Fraction.__round__ is half-even
    if q == 10 ** digits:
        q //= 10
        k -= 1
    d = Decimal(q).scaleb(-k)
    return -d if x < 0 else d


def display(x, digits: int = 6) -> str:
    d = to_decimal(x, digits)
    return f"{d:.{digits - 1}E}" if d != 0 else "0"


def int_to_json(n: int) -> str:
    return str(int(n))


def int_from_json(s) -> int:
    if isinstance(s, bool):
        raise ValueError("boolean is not an integer")
    if isinstance(s, int):
        return s
    return int(str(s), 10)


def rat_to_json(x) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rat_from_json(obj) -> Fraction:
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj["den"]))
    if isinstance(obj, str):
        return Fraction(obj)
    return Fraction(obj)
