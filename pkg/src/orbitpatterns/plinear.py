"""Exact piecewise-linear realizations and the periodic-point oracle.

The connect-the-dots map of a pattern (breakpoints 1..m, value pi(i) at i,
affine in between) realizes exactly the periods the pattern forces, so it
serves as an independent oracle for the digraph computations.  Everything
here is exact rational arithmetic: a reported period-n point x satisfies
f^n(x) = x literally, not within a tolerance.

Periodic points are found by itinerary search.  An itinerary is a sequence
of pieces; composing their affine maps while narrowing the admissible
start-domain prunes impossible sequences early, and at full depth the
fixed-point equation of the composed map is a single affine equation.  When
the composition degenerates to the identity, the surviving domain is a whole
interval of n-periodic points and explicit points are sampled away from the
finitely many lower-period points.

The witness construction plants a rescaled copy of the period-(2k-1)
minimal map inside a small invariant neighborhood of the unique fixed point
of the period-(2k+1) minimal map, glued affinely to the original outside a
twice-larger neighborhood.  The resulting map keeps the big orbit and its
digraph but acquires a (2k-1)-orbit, so the big orbit is second minimal for
the new map while keeping its original structure.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .errors import FlatSegment, OutOfDomain, PeriodBoundTooLarge
from .pattern import Pattern, stefan

__all__ = [
    "PiecewiseLinearMap",
    "p_linearize",
    "evaluate",
    "find_periods",
    "realizes_period",
    "embed_stefan_witness",
    "witness_report",
    "WitnessReport",
    "to_json_dict",
]

DEFAULT_PERIOD_BOUND = 12


@dataclass(frozen=True)
class PiecewiseLinearMap:
    """Affine interpolation through (breakpoints[i], values[i]), exact rationals."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.breakpoints) < 2 or len(self.breakpoints) != len(self.values):
            raise ValueError("need matching breakpoints/values, at least two")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if a >= b:
                raise ValueError(f"breakpoints must strictly increase: {a} >= {b}")
        lo, hi = self.breakpoints[0], self.breakpoints[-1]
        if min(self.values) < lo or max(self.values) > hi:
            raise ValueError("map does not send its interval into itself")

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.breakpoints[0], self.breakpoints[-1]

    def n_pieces(self) -> int:
        return len(self.breakpoints) - 1

    def piece_affine(self, j: int) -> tuple[Fraction, Fraction]:
        """(slope, intercept) of piece j on [breakpoints[j], breakpoints[j+1]]."""
        x0, x1 = self.breakpoints[j], self.breakpoints[j + 1]
        y0, y1 = self.values[j], self.values[j + 1]
        slope = (y1 - y0) / (x1 - x0)
        return slope, y0 - slope * x0


def p_linearize(p: Pattern) -> PiecewiseLinearMap:
    """Connect-the-dots realization: breakpoints 1..m, value pi(i) at i."""
    xs = tuple(Fraction(i) for i in range(1, p.m + 1))
    ys = tuple(Fraction(v) for v in p.images)
    return PiecewiseLinearMap(xs, ys)


def evaluate(f: PiecewiseLinearMap, x: Fraction) -> Fraction:
    """Exact value at x; breakpoints return their stored values."""
    x = Fraction(x)
    lo, hi = f.domain
    if x < lo or x > hi:
        raise OutOfDomain(f"{x} outside [{lo}, {hi}]")
    j = bisect_right(f.breakpoints, x) - 1
    if j >= f.n_pieces():
        j = f.n_pieces() - 1
    if x == f.breakpoints[j]:
        return f.values[j]
    slope, intercept = f.piece_affine(j)
    return slope * x + intercept


def _first_return_time(f: PiecewiseLinearMap, x: Fraction, up_to: int) -> int | None:
    y = x
    for step in range(1, up_to + 1):
        y = evaluate(f, y)
        if y == x:
            return step
    return None


def _proper_divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def _realizes_least_period(f: PiecewiseLinearMap, n: int) -> bool:
    """Is there a point whose least period under f is exactly n?"""
    pieces = [f.piece_affine(j) for j in range(f.n_pieces())]
    bounds = f.breakpoints
    rejected: set[Fraction] = set()

    def admit(x: Fraction) -> bool:
        if x in rejected:
            return False
        rejected.add(x)
        return _first_return_time(f, x, n) == n

    def search(depth: int, a: Fraction, b: Fraction, lo: Fraction, hi: Fraction,
               prefixes: list[tuple[Fraction, Fraction]]) -> bool:
        if depth == n:
            if a == 1:
                if b != 0:
                    return False
                return _sample_interval(lo, hi, prefixes)
            x = b / (1 - a)
            return lo <= x <= hi and admit(x)
        # only pieces meeting the image interval of the current domain can
        # continue the itinerary
        img_a, img_b = a * lo + b, a * hi + b
        if img_a > img_b:
            img_a, img_b = img_b, img_a
        first = max(0, bisect_right(bounds, img_a) - 1)
        last = min(len(pieces) - 1, bisect_left(bounds, img_b, lo=first))
        for j in range(first, last + 1):
            slope, intercept = pieces[j]
            qlo, qhi = bounds[j], bounds[j + 1]
            # clip start-domain so the composed image stays inside piece j
            if a > 0:
                nlo, nhi = (qlo - b) / a, (qhi - b) / a
            else:
                nlo, nhi = (qhi - b) / a, (qlo - b) / a
            nlo, nhi = max(lo, nlo), min(hi, nhi)
            if nlo > nhi:
                continue
            na, nb = slope * a, slope * b + intercept
            prefixes.append((na, nb))
            hit = search(depth + 1, na, nb, nlo, nhi, prefixes)
            prefixes.pop()
            if hit:
                return True
        return False

    def _sample_interval(lo: Fraction, hi: Fraction,
                         prefixes: list[tuple[Fraction, Fraction]]) -> bool:
        # Whole [lo, hi] satisfies f^n(x) = x along this itinerary.  Points of
        # lower period are fixed points of the proper-divisor prefixes.
        if lo == hi:
            return admit(lo)
        bad = set()
        for d in _proper_divisors(n):
            ad, bd = prefixes[d]
            if ad == 1:
                if bd == 0:
                    return False  # f^d is the identity here: least period < n
                continue
            x = bd / (1 - ad)
            if lo <= x <= hi:
                bad.add(x)
        denom = len(bad) + 2
        for p in range(1, denom):
            x = lo + (hi - lo) * Fraction(p, denom)
            if x not in bad and admit(x):
                return True
        return False

    identity = (Fraction(1), Fraction(0))
    lo, hi = f.domain
    return search(0, identity[0], identity[1], lo, hi, [identity])


def find_periods(f: PiecewiseLinearMap, up_to: int, *, allow_large: bool = False) -> set[int]:
    """All n <= up_to realized as an exact least period of f.

    Requires strictly monotone pieces (no flat segments).  The default bound
    guards against the exponential itinerary space; pass allow_large=True to
    exceed it deliberately.
    """
    if up_to < 1:
        raise ValueError(f"up_to must be >= 1, got {up_to}")
    if up_to > DEFAULT_PERIOD_BOUND and not allow_large:
        raise PeriodBoundTooLarge(
            f"up_to={up_to} exceeds the default guard {DEFAULT_PERIOD_BOUND}")
    for j in range(f.n_pieces()):
        if f.values[j] == f.values[j + 1]:
            raise FlatSegment(f"flat piece at [{f.breakpoints[j]}, {f.breakpoints[j + 1]}]")
    return {n for n in range(1, up_to + 1) if _realizes_least_period(f, n)}


def realizes_period(f: PiecewiseLinearMap, n: int) -> bool:
    """Exact least-period-n test for a single n (same engine as find_periods)."""
    for j in range(f.n_pieces()):
        if f.values[j] == f.values[j + 1]:
            raise FlatSegment(f"flat piece at [{f.breakpoints[j]}, {f.breakpoints[j + 1]}]")
    return _realizes_least_period(f, n)


def embed_stefan_witness(k: int) -> PiecewiseLinearMap:
    """Minimal (2k+1)-map with a rescaled minimal (2k-1)-map planted at its fixed point.

    The loop piece of the period-(2k+1) minimal map crosses the diagonal at
    x* = k + 4/3.  With eps = 1/24 (one eighth of the distance from x* to the
    nearest breakpoint), F = [x*-eps, x*+eps] carries an affinely conjugated
    copy of the period-(2k-1) minimal map, and the original map is rejoined
    affinely at x* +- 2 eps.  Breakpoint values at 1..2k+1 are untouched.
    """
    if k < 3:
        raise ValueError(f"witness construction needs k >= 3, got {k}")
    outer = p_linearize(stefan(k))
    xstar = Fraction(3 * k + 4, 3)
    eps = Fraction(1, 24)
    inner = p_linearize(stefan(k - 1))
    inner_lo, inner_hi = inner.domain

    def embed(t: Fraction) -> Fraction:
        return xstar - eps + (t - inner_lo) * (2 * eps) / (inner_hi - inner_lo)

    points = {Fraction(i): Fraction(v) for i, v in enumerate(stefan(k).images, start=1)}
    for x in (xstar - 2 * eps, xstar + 2 * eps):
        points[x] = evaluate(outer, x)
    for bp, val in zip(inner.breakpoints, inner.values):
        points[embed(bp)] = embed(val)
    xs = sorted(points)
    return PiecewiseLinearMap(tuple(xs), tuple(points[x] for x in xs))


def to_json_dict(f: PiecewiseLinearMap) -> dict:
    """JSON form with canonical reduced fractions as strings."""
    return {
        "breakpoints": [str(x) for x in f.breakpoints],
        "values": [str(y) for y in f.values],
    }


@dataclass(frozen=True)
class WitnessReport:
    k: int
    map: PiecewiseLinearMap
    breakpoints_preserved: bool
    digraph_unchanged: bool
    embedded_orbit: tuple[Fraction, ...]
    embedded_orbit_ok: bool
    lower_odd_periods: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return (self.breakpoints_preserved and self.digraph_unchanged
                and self.embedded_orbit_ok and not self.lower_odd_periods)

    def checks_json(self) -> dict:
        return {
            "breakpoints_preserved": self.breakpoints_preserved,
            "digraph_unchanged": self.digraph_unchanged,
            "embedded_orbit_period": 2 * self.k - 1 if self.embedded_orbit_ok else None,
            "lower_odd_periods": list(self.lower_odd_periods),
            "ok": self.ok,
        }


def witness_report(k: int) -> WitnessReport:
    """Verify the witness map: big orbit and digraph intact, (2k-1)-orbit in F,
    and no odd period in [3, 2k-3]."""
    from . import digraph  # local import keeps the module graph acyclic

    g = embed_stefan_witness(k)
    big = stefan(k)
    preserved = all(evaluate(g, Fraction(i)) == v for i, v in enumerate(big.images, start=1))

    # Same covering digraph, and the planted wiggle stays strictly inside the
    # loop gap (k+1, k+2) so no gap gains a covering it did not have.
    unchanged = preserved and digraph.build(big) == digraph.build(
        Pattern(tuple(int(evaluate(g, Fraction(i))) for i in range(1, 2 * k + 2))))
    lo_gap, hi_gap = Fraction(k + 1), Fraction(k + 2)
    for x, y in zip(g.breakpoints, g.values):
        if lo_gap < x < hi_gap and not lo_gap < y < hi_gap:
            unchanged = False

    xstar = Fraction(3 * k + 4, 3)
    eps = Fraction(1, 24)
    start = xstar - eps  # image of breakpoint 1 of the planted copy
    orbit = [start]
    for _ in range(2 * k - 2):
        orbit.append(evaluate(g, orbit[-1]))
    orbit_ok = (evaluate(g, orbit[-1]) == start
                and len(set(orbit)) == 2 * k - 1
                and all(xstar - eps <= x <= xstar + eps for x in orbit))

    lower = tuple(n for n in range(3, 2 * k - 2, 2) if _realizes_least_period(g, n))
    return WitnessReport(k, g, preserved, unchanged, tuple(orbit), orbit_ok, lower)
