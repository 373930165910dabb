"""The Sharkovskii total order on positive integers.

Writing n = 2^a * b with b odd, the order runs

    1 < 2 < 4 < 8 < ... < 2^2*5 < 2^2*3 < ... < 2*5 < 2*3 < ... < 9 < 7 < 5 < 3

i.e. powers of two ascend by exponent and precede everything else; among the
rest, larger exponent comes earlier, and for equal exponents larger odd part
comes earlier.  A map with a period-n orbit has orbits of every period that
precedes n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import EmptySet, NonPositive

__all__ = ["SharkovskiiKey", "Order", "compare", "forces", "generator_of", "sort_key"]


@dataclass(frozen=True)
class SharkovskiiKey:
    """Decomposition n = 2^a * b with b odd."""

    a: int
    b: int

    @classmethod
    def of(cls, n: int) -> "SharkovskiiKey":
        if n < 1:
            raise NonPositive(f"positive integer required, got {n}")
        a = 0
        while n % 2 == 0:
            n //= 2
            a += 1
        return cls(a, n)

    def to_int(self) -> int:
        return (1 << self.a) * self.b


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def sort_key(n: int) -> tuple[int, int, int]:
    """A key realizing the order: sorting integers by it sorts them by <|."""
    key = SharkovskiiKey.of(n)
    if key.b == 1:
        return (0, key.a, 0)
    return (1, -key.a, -key.b)


def compare(m: int, n: int) -> Order:
    if m < 1 or n < 1:
        raise NonPositive(f"positive integers required, got {m}, {n}")
    km, kn = sort_key(m), sort_key(n)
    if km < kn:
        return Order.LESS
    if km > kn:
        return Order.GREATER
    return Order.EQUAL


def forces(n: int, m: int) -> bool:
    """True iff a period-n orbit forces a period-m orbit (m equal to or before n)."""
    return compare(m, n) is not Order.GREATER


def generator_of(periods: Iterable[int]) -> int:
    """The order-maximum of a nonempty period set; it forces all the others."""
    best = None
    for n in periods:
        if best is None or compare(best, n) is Order.LESS:
            best = n
    if best is None:
        raise EmptySet("generator of an empty period set")
    return best
