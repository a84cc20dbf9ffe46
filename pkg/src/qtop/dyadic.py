"""Exact dyadic rationals in [0,1], sequential expansions, and balanced products.

Values are integer pairs ``num / 2**exp`` in normal form (num odd, or the
endpoints 0 and 1), never floats: the infima computed downstream are exact
dyadics and golden tests compare them bitwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence

from .relalg import Entourage, SizeMismatch

MAX_EXP = 62


class OutOfRange(ValueError):
    """Raised for dyadics outside the required interval."""


class NotIncreasing(ValueError):
    """Raised when a sequential expansion is not strictly increasing."""


class EmptyList(ValueError):
    """Raised when a balanced product is requested for no entourages."""


@total_ordering
@dataclass(frozen=True)
class Dyadic:
    """A dyadic rational ``num / 2**exp`` in [0,1], normalized."""

    num: int
    exp: int

    def __post_init__(self) -> None:
        num, exp = self.num, self.exp
        if exp < 0 or num < 0 or num > (1 << exp):
            raise OutOfRange(f"{num}/2^{exp} is not in [0,1]")
        while num and num % 2 == 0:
            num //= 2
            exp -= 1
        if num == 0:
            exp = 0
        if exp > MAX_EXP:
            raise OutOfRange(f"exponent cap is {MAX_EXP}")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def zero(cls) -> "Dyadic":
        return cls(0, 0)

    @classmethod
    def one(cls) -> "Dyadic":
        return cls(1, 0)

    @classmethod
    def of(cls, num: int, exp: int) -> "Dyadic":
        return cls(num, exp)

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_one(self) -> bool:
        return self.num == 1 and self.exp == 0

    @property
    def in_q2(self) -> bool:
        """Strictly between 0 and 1."""
        return not self.is_zero and not self.is_one

    @property
    def in_q2_1(self) -> bool:
        """In (0,1]."""
        return not self.is_zero

    def _scaled(self, exp: int) -> int:
        return self.num << (exp - self.exp)

    # normal form is unique, so the generated field equality is value equality
    def __lt__(self, other: "Dyadic") -> bool:
        e = max(self.exp, other.exp)
        return self._scaled(e) < other._scaled(e)

    def plus(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        total = self._scaled(e) + other._scaled(e)
        if total > (1 << e):
            raise OutOfRange("sum exceeds 1")
        return Dyadic(total, e)

    def minus(self, other: "Dyadic") -> "Dyadic":
        e = max(self.exp, other.exp)
        diff = self._scaled(e) - other._scaled(e)
        if diff < 0:
            raise OutOfRange("difference below 0")
        return Dyadic(diff, e)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __str__(self) -> str:
        return f"{self.num}/2^{self.exp}"


def le_sum(a: Dyadic, b: Dyadic, c: Dyadic) -> bool:
    """Exact test of ``a <= b + c`` (the sum may leave [0,1])."""
    e = max(a.exp, b.exp, c.exp)
    return a._scaled(e) <= b._scaled(e) + c._scaled(e)


def sum_lt(a: Dyadic, b: Dyadic, c: Dyadic) -> bool:
    """Exact test of ``a + b < c``."""
    e = max(a.exp, b.exp, c.exp)
    return a._scaled(e) + b._scaled(e) < c._scaled(e)


def sum_lt_one(a: Dyadic, b: Dyadic) -> bool:
    """Exact test of ``a + b < 1``."""
    e = max(a.exp, b.exp)
    return a._scaled(e) + b._scaled(e) < (1 << e)


def expansion(r: Dyadic) -> tuple[int, ...]:
    """Strictly increasing positions ix with ``r = sum(2**-i for i in ix)``."""
    if not r.in_q2:
        raise OutOfRange(f"{r} is not strictly between 0 and 1")
    return tuple(i for i in range(1, r.exp + 1) if (r.num >> (r.exp - i)) & 1)


def from_expansion(ix: Sequence[int]) -> Dyadic:
    """Inverse of ``expansion``."""
    if not ix:
        raise NotIncreasing("expansion must be non-empty")
    prev = 0
    for i in ix:
        if i <= prev:
            raise NotIncreasing(f"positions must strictly increase, got {tuple(ix)}")
        prev = i
    exp = ix[-1]
    if exp > MAX_EXP:
        raise OutOfRange(f"exponent cap is {MAX_EXP}")
    num = sum(1 << (exp - i) for i in ix)
    return Dyadic(num, exp)


def concat(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Concatenation of two index sequences."""
    return tuple(a) + tuple(b)


def balanced_product(us: Sequence[Entourage]) -> Entourage:
    """Recursive balanced product P(U1,...,Un) = P(rest) o U1 o P(rest)."""
    if not us:
        raise EmptyList("balanced product needs at least one entourage")
    n = us[0].n
    for u in us:
        if u.n != n:
            raise SizeMismatch("entourages must share a carrier")
    if len(us) == 1:
        return us[0]
    rest = balanced_product(us[1:])
    return rest.compose(us[0]).compose(rest)
