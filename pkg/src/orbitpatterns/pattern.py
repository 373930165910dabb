"""Combinatorial patterns of periodic orbits.

A periodic orbit ``beta_1 < beta_2 < ... < beta_m`` of a continuous interval
map is described, up to the actual coordinates, by the cyclic permutation
``pi`` of ``{1..m}`` with ``f(beta_i) = beta_{pi(i)}``.  This module holds
that combinatorial type (:class:`Pattern`) together with its purely
order-theoretic predicates:

* the canonical minimal odd pattern (:func:`stefan`), period ``2k+1``, whose
  image list is ``(k+1, 2k+1, 2k, ..., k+2, k, k-1, ..., 2, 1)``;
* the inverse pattern obtained by conjugating with the order-reversing
  permutation, ``pi'(i) = m+1 - pi(m+1-i)``;
* the max/min profile of the connect-the-dots realization
  (:func:`topological_structure`);
* the half-interval simplicity test for odd periods (:func:`simplicity`).

Patterns are immutable value objects; all functions here are pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BadToken, EvenPeriod, NotABijection, NotASingleCycle

__all__ = [
    "Pattern",
    "Extremum",
    "TopStructure",
    "SimplicityTag",
    "StefanCheck",
    "parse_pattern",
    "render",
    "stefan",
    "inverse",
    "is_stefan",
    "simplicity",
    "simplicity_conditions",
    "topological_structure",
]


@dataclass(frozen=True)
class Pattern:
    """A single m-cycle on {1..m}, stored as its 1-based image list.

    ``images[i-1] = pi(i)``.  Equality is exact equality of image lists.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.images)
        if m < 2:
            raise NotASingleCycle(f"period must be >= 2, got {m}")
        seen = [False] * (m + 1)
        for idx, img in enumerate(self.images, start=1):
            if not isinstance(img, int) or not 1 <= img <= m:
                raise NotABijection(f"image {img!r} at index {idx} is outside 1..{m}")
            if seen[img]:
                raise NotABijection(f"image {img} at index {idx} repeats")
            seen[img] = True
        # Single m-cycle: iterating pi from 1 must visit all m points.
        count, point = 0, 1
        while True:
            point = self.images[point - 1]
            count += 1
            if point == 1:
                break
        if count != m:
            raise NotASingleCycle(f"orbit of 1 closes after {count} steps, period is {m}")

    @property
    def m(self) -> int:
        return len(self.images)

    @property
    def k(self) -> int:
        """Half-period k for odd periods m = 2k+1."""
        if self.m % 2 == 0:
            raise EvenPeriod(f"period {self.m} has no half-period k")
        return (self.m - 1) // 2

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def cycle_of_one(self) -> tuple[int, ...]:
        """The forward orbit of 1: (1, pi(1), pi(pi(1)), ...)."""
        out = [1]
        point = self.images[0]
        while point != 1:
            out.append(point)
            point = self.images[point - 1]
        return tuple(out)

    def __str__(self) -> str:
        return render(self)


class Extremum(enum.Enum):
    MAX = "max"
    MIN = "min"

    def flipped(self) -> "Extremum":
        return Extremum.MIN if self is Extremum.MAX else Extremum.MAX


@dataclass(frozen=True)
class TopStructure:
    """Alternating sequence of interior maxima/minima of the P-linearization."""

    extrema: tuple[Extremum, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.extrema, self.extrema[1:]):
            if a is b:
                raise ValueError(f"extrema do not alternate: {self.label()}")

    def label(self) -> str:
        return "-".join(e.value for e in self.extrema)

    def flipped(self) -> "TopStructure":
        return TopStructure(tuple(e.flipped() for e in self.extrema))

    def mirrored(self) -> "TopStructure":
        """Structure of the inverse pattern: spatial reversal plus max/min flip.

        For alternating sequences this equals flipped() at odd length and the
        identity at even length (e.g. the inverse of a min-max pattern is
        again min-max).
        """
        return TopStructure(tuple(e.flipped() for e in reversed(self.extrema)))


class SimplicityTag(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NOT_SIMPLE = "NotSimple"

    def flipped(self) -> "SimplicityTag":
        if self is SimplicityTag.POSITIVE:
            return SimplicityTag.NEGATIVE
        if self is SimplicityTag.NEGATIVE:
            return SimplicityTag.POSITIVE
        return self


class StefanCheck(enum.Enum):
    YES = "Yes"
    YES_INVERSE = "YesInverse"
    NO = "No"


def parse_pattern(text: str) -> Pattern:
    """Parse either an image list ``"a1 a2 ... am"`` or ``"cycle: 1 c2 ... cm"``.

    Cycle notation lists the forward orbit of 1; both forms describing the
    same permutation parse to equal Patterns.
    """
    stripped = text.strip()
    as_cycle = False
    if stripped.lower().startswith("cycle:"):
        as_cycle = True
        stripped = stripped[len("cycle:"):]
    tokens = stripped.split()
    if not tokens:
        raise BadToken("empty pattern text")
    numbers = []
    for pos, tok in enumerate(tokens, start=1):
        try:
            numbers.append(int(tok))
        except ValueError:
            raise BadToken(f"token {tok!r} at position {pos} is not an integer") from None
    if not as_cycle:
        return Pattern(tuple(numbers))
    m = len(numbers)
    if numbers[0] != 1:
        raise BadToken(f"cycle notation must start with the orbit of 1, got {numbers[0]}")
    images = [0] * (m + 1)
    for cur, nxt in zip(numbers, numbers[1:] + [1]):
        if not 1 <= cur <= m:
            raise NotABijection(f"cycle entry {cur} is outside 1..{m}")
        if images[cur]:
            raise NotABijection(f"cycle entry {cur} repeats")
        images[cur] = nxt
    return Pattern(tuple(images[1:]))


def render(p: Pattern) -> str:
    """Image-list text form, single spaces: ``"4 7 6 5 3 2 1"``."""
    return " ".join(str(v) for v in p.images)


def stefan(k: int) -> Pattern:
    """The minimal (Stefan) pattern of period 2k+1."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    images = [k + 1]
    images += [2 * k + 3 - i for i in range(2, k + 2)]      # 2k+1, 2k, ..., k+2
    images += [2 * k + 2 - i for i in range(k + 2, 2 * k + 2)]  # k, k-1, ..., 1
    return Pattern(tuple(images))


def inverse(p: Pattern) -> Pattern:
    """Conjugate by the order-reversing permutation: pi'(i) = m+1 - pi(m+1-i)."""
    m = p.m
    return Pattern(tuple(m + 1 - p.images[m - i] for i in range(1, m + 1)))


def is_stefan(p: Pattern) -> StefanCheck:
    """Is p the minimal odd pattern, its inverse, or neither?"""
    if p.m % 2 == 0:
        raise EvenPeriod(f"Stefan recognition needs odd period, got {p.m}")
    reference = stefan(p.k)
    if p == reference:
        return StefanCheck.YES
    if p == inverse(reference):
        return StefanCheck.YES_INVERSE
    return StefanCheck.NO


def simplicity_conditions(p: Pattern) -> tuple[bool, bool]:
    """The two half-interval containments of the simplicity definition.

    positive: the upper k points {k+2..2k+1} all map into {1..k+1} (the lower
    half then maps up with exactly one exception, automatically).
    negative: the lower k points {1..k} all map into {k+1..2k+1}.
    """
    if p.m % 2 == 0:
        raise EvenPeriod(f"simplicity needs odd period, got {p.m}")
    k = p.k
    pos = all(p(i) <= k + 1 for i in range(k + 2, 2 * k + 2))
    neg = all(p(i) >= k + 1 for i in range(1, k + 1))
    return pos, neg


def simplicity(p: Pattern) -> SimplicityTag:
    """Classify an odd-period pattern as simple of type +/-, or not simple.

    The two containment conditions are not mutually exclusive (many simple
    patterns satisfy both); the orientation of the loop interval breaks the
    tie: pi(k+1) > k+1 means the larger half sits left of the loop, type +.
    This tie-break is what makes the sign flip under inversion.
    """
    pos, neg = simplicity_conditions(p)
    if not pos and not neg:
        return SimplicityTag.NOT_SIMPLE
    if pos and not neg:
        return SimplicityTag.POSITIVE
    if neg and not pos:
        return SimplicityTag.NEGATIVE
    return SimplicityTag.POSITIVE if p(p.k + 1) > p.k + 1 else SimplicityTag.NEGATIVE


def topological_structure(p: Pattern) -> TopStructure:
    """Interior max/min profile of the image sequence, in breakpoint order."""
    out = []
    for i in range(2, p.m):
        left, mid, right = p(i - 1), p(i), p(i + 1)
        if left < mid > right:
            out.append(Extremum.MAX)
        elif left > mid < right:
            out.append(Extremum.MIN)
    return TopStructure(tuple(out))
