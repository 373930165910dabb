"""Pattern classification and exhaustive second-minimal enumeration.

An odd-period pattern is classified by the Sharkovskii generator of its
connect-the-dots map, read off the transition digraph: the smallest odd edge
length >= 3 carrying a primitive cycle.  Generator 2k+1 means the orbit is
minimal, generator 2k-1 second minimal, anything smaller is tagged with the
generator it does force.

Enumeration sweeps every single (2k+1)-cycle.  The space is (2k)! so the
k = 4, 5 sweeps run through a vectorized trace filter (int64 is exact at
these sizes: walk counts are below (2k)^(2k-1) < 2^63) and every surviving
candidate is re-checked with the exact arbitrary-precision path before it is
reported.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from . import digraph, plinear
from .errors import EvenPeriod, KTooLarge
from .pattern import Pattern, SimplicityTag, TopStructure, simplicity, topological_structure

__all__ = [
    "Kind",
    "Classification",
    "classify_pattern",
    "enumerate_second_minimal",
    "verify_simplicity",
    "structure_histogram",
    "expected_structure_histogram",
    "plinear_odd_generator",
    "iter_single_cycle_images",
    "SimplicityReport",
]

ENUMERATION_MAX_K = 5
_BATCH = 50_000


class Kind(Enum):
    MINIMAL = "Minimal"
    SECOND_MINIMAL = "SecondMinimal"
    LOWER = "Lower"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    generator: int
    sign: SimplicityTag | None = None
    structure: TopStructure | None = None
    stefan_like: bool = False

    def to_json_dict(self) -> dict:
        if self.kind is Kind.MINIMAL:
            return {"class": "Minimal"}
        if self.kind is Kind.SECOND_MINIMAL:
            return {
                "class": "SecondMinimal",
                "sign": self.sign.value,
                "structure": self.structure.label(),
                "stefan_like": self.stefan_like,
            }
        return {"class": "Lower", "generator": self.generator}


def classify_pattern(p: Pattern) -> Classification:
    """Minimal / SecondMinimal / Lower by the digraph generator."""
    if p.m % 2 == 0:
        raise EvenPeriod(f"classification needs odd period, got {p.m}")
    gen = digraph.odd_generator(p)
    if gen == p.m:
        return Classification(Kind.MINIMAL, gen)
    if gen == p.m - 2:
        # Patterns are never simultaneously Stefan and second minimal; the
        # stefan_like flag only ever fires for maps, not patterns.
        return Classification(
            Kind.SECOND_MINIMAL, gen,
            sign=simplicity(p), structure=topological_structure(p),
        )
    return Classification(Kind.LOWER, gen)


def iter_single_cycle_images(m: int):
    """Image tuples of all single m-cycles ((m-1)! of them), one per cycle."""
    for rest in itertools.permutations(range(2, m + 1)):
        images = [0] * m
        prev = 1
        for c in rest:
            images[prev - 1] = c
            prev = c
        images[prev - 1] = 1
        yield tuple(images)


def enumerate_second_minimal(k: int) -> list[Pattern]:
    """Every single (2k+1)-cycle classified SecondMinimal, lexicographic order."""
    if not 3 <= k <= ENUMERATION_MAX_K:
        raise KTooLarge(f"exhaustive enumeration supports 3 <= k <= {ENUMERATION_MAX_K}, got {k}")
    return list(_enumerate_cached(k))


@functools.lru_cache(maxsize=None)
def _enumerate_cached(k: int) -> tuple[Pattern, ...]:
    if k == 3:
        hits = [img for img in iter_single_cycle_images(7) if _is_second_minimal_images(img, k)]
    else:
        hits = _batched_sweep(k)
    patterns = tuple(Pattern(img) for img in sorted(hits))
    for p in patterns:  # exact re-verification of every candidate
        assert digraph.odd_generator(p) == 2 * k - 1
    return patterns


def _is_second_minimal_images(images: tuple[int, ...], k: int) -> bool:
    return digraph.odd_generator(Pattern(images)) == 2 * k - 1


def _batched_sweep(k: int) -> list[tuple[int, ...]]:
    """Vectorized filter: no odd primitive cycle below 2k-1, one at 2k-1."""
    m = 2 * k + 1
    n_v = m - 1
    vertex = np.arange(n_v)
    hits: list[tuple[int, ...]] = []

    perms = itertools.permutations(range(2, m + 1))
    while True:
        block = list(itertools.islice(perms, _BATCH))
        if not block:
            break
        cyc = np.array(block, dtype=np.int64) - 1
        n = len(cyc)
        img = np.empty((n, m), dtype=np.int64)
        rows = np.arange(n)[:, None]
        img[:, 0] = cyc[:, 0]
        img[rows, cyc[:, :-1]] = cyc[:, 1:]
        img[np.arange(n), cyc[:, -1]] = 0
        lo = np.minimum(img[:, :-1], img[:, 1:])
        hi = np.maximum(img[:, :-1], img[:, 1:]) - 1
        adj = ((lo[:, :, None] <= vertex) & (vertex <= hi[:, :, None])).astype(np.int64)

        # Moebius inversion at the odd lengths needed here collapses to
        # A(3) = tr3 - tr1, A(5) = tr5 - tr1, A(7) = tr7 - tr1, A(9) = tr9 - tr3.
        tr1 = np.einsum("bii->b", adj)
        sq = adj @ adj
        cube = sq @ adj
        tr3 = np.einsum("bii->b", cube)
        keep = tr3 - tr1 == 0
        if not keep.any():
            continue
        img, adj, sq, odd_pow = img[keep], adj[keep], sq[keep], cube[keep]
        tr1, tr3 = tr1[keep], tr3[keep]
        length = 3
        targets = list(range(5, 2 * k, 2))  # 5, ..., 2k-1
        for target in targets:
            odd_pow = odd_pow @ sq
            length += 2
            tr_t = np.einsum("bii->b", odd_pow)
            aperiodic = tr_t - (tr3 if target == 9 else tr1)
            if target < 2 * k - 1:
                keep = aperiodic == 0
            else:
                keep = aperiodic > 0
            img, adj, sq, odd_pow = img[keep], adj[keep], sq[keep], odd_pow[keep]
            tr1, tr3 = tr1[keep], tr3[keep]
            if not len(img):
                break
        hits.extend(tuple(int(v) + 1 for v in row) for row in img)
    return hits


@dataclass(frozen=True)
class SimplicityReport:
    k: int
    checked: int
    counterexamples: tuple[Pattern, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.counterexamples


def verify_simplicity(k: int) -> SimplicityReport:
    """Every enumerated second-minimal pattern must be simple (type + or -)."""
    bad = []
    patterns = enumerate_second_minimal(k)
    for p in patterns:
        if simplicity(p) is SimplicityTag.NOT_SIMPLE:
            bad.append(p)
    return SimplicityReport(k, len(patterns), tuple(bad))


def structure_histogram(k: int) -> dict[str, int]:
    """Counts of max/min profiles over positive-type second-minimal patterns."""
    counts = Counter(
        topological_structure(p).label()
        for p in enumerate_second_minimal(k)
        if simplicity(p) is SimplicityTag.POSITIVE
    )
    return dict(counts)


def expected_structure_histogram(k: int) -> dict[str, int]:
    """The published structure counts for the 4k-3 positive types."""
    return {
        "max": 1,
        "min-max": 1,
        "min-max-min": 1,
        "max-min": 2,
        "max-min-max": 2 * k - 3,
        "max-min-max-min-max": 2 * k - 5,
    }


def plinear_odd_generator(p: Pattern) -> int:
    """Independent oracle: least odd period >= 3 of the exact P-linearization.

    The breakpoint orbit itself realizes the full period m, so the scan over
    odd n < m falls back to m (verified by exact iteration) when empty.
    """
    if p.m % 2 == 0:
        raise EvenPeriod(f"oracle needs odd period, got {p.m}")
    f = plinear.p_linearize(p)
    for n in range(3, p.m, 2):
        if plinear.realizes_period(f, n):
            return n
    assert plinear._first_return_time(f, Fraction(1), p.m) == p.m
    return p.m
