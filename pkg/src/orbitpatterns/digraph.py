"""Transition digraphs of orbit patterns and primitive-cycle analysis.

For an m-orbit the vertices are the gaps J_1..J_{m-1} between consecutive
orbit points (J_i spans points i and i+1).  There is an edge J_i -> J_s
exactly when J_s lies inside the interval spanned by the endpoint images
<pi(i), pi(i+1)>; because that image is itself an interval, every
out-neighborhood is a contiguous range of gap indices.  The edge is *red*
when the endpoint images span exactly one gap (|pi(i+1) - pi(i)| = 1), which
also forces out-degree 1.

A closed walk is *primitive* (aperiodic) if it is not a shorter closed walk
traversed several times.  An edge-length-n primitive cycle certifies a
period-n point of any map realizing the pattern, and the count of rooted
aperiodic closed n-walks is obtained from walk counts by Moebius inversion:

    aperiodic(n) = sum over d | n of mu(n/d) * trace(A^d)

with A the 0/1 adjacency matrix.  Traces are computed in exact
arbitrary-precision integers; they overflow 64 bits already around
period 21 and walk length 19.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenPeriod, NoLoop, NoOddCycle
from .pattern import Pattern

__all__ = [
    "TransitionDigraph",
    "build",
    "relabel_inverse",
    "loop_vertices",
    "adjacency_matrix",
    "closed_walk_count",
    "primitive_cycle_exists",
    "odd_generator",
    "to_dot",
]


@dataclass(frozen=True)
class TransitionDigraph:
    """Covering digraph on gaps J_1..J_{m-1}, out-neighborhoods as ranges.

    ``out_lo[i-1]..out_hi[i-1]`` (inclusive) are the targets of vertex i;
    ``red[i-1]`` is the unique target when the edge from i is red, else None.
    """

    m: int
    out_lo: tuple[int, ...]
    out_hi: tuple[int, ...]
    red: tuple[int | None, ...]

    @property
    def n_vertices(self) -> int:
        return self.m - 1

    def vertices(self) -> range:
        return range(1, self.m)

    def targets(self, v: int) -> range:
        return range(self.out_lo[v - 1], self.out_hi[v - 1] + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return self.out_lo[u - 1] <= v <= self.out_hi[u - 1]

    def red_target(self, v: int) -> int | None:
        return self.red[v - 1]

    def edges(self) -> list[tuple[int, int, bool]]:
        """(source, target, is_red) triples in ascending order."""
        out = []
        for u in self.vertices():
            for v in self.targets(u):
                out.append((u, v, self.red[u - 1] == v))
        return out


def build(p: Pattern) -> TransitionDigraph:
    """Digraph of a pattern: J_i -> J_s iff J_s lies in <pi(i), pi(i+1)>."""
    lo, hi, red = [], [], []
    for i in range(1, p.m):
        a, b = p(i), p(i + 1)
        lo.append(min(a, b))
        hi.append(max(a, b) - 1)
        red.append(min(a, b) if abs(a - b) == 1 else None)
    return TransitionDigraph(p.m, tuple(lo), tuple(hi), tuple(red))


def relabel_inverse(d: TransitionDigraph) -> TransitionDigraph:
    """Replace each J_i by J_{m-i}; equals build(inverse(p)) for d = build(p)."""
    m = d.m
    order = range(d.n_vertices, 0, -1)  # new vertex i is old vertex m-i
    lo = tuple(m - d.out_hi[old - 1] for old in order)
    hi = tuple(m - d.out_lo[old - 1] for old in order)
    red = tuple(None if d.red[old - 1] is None else m - d.red[old - 1] for old in order)
    return TransitionDigraph(m, lo, hi, red)


def loop_vertices(d: TransitionDigraph) -> set[int]:
    """Vertices carrying a loop; never empty for m > 2."""
    loops = {v for v in d.vertices() if d.has_edge(v, v)}
    if not loops and d.m > 2:
        raise NoLoop(f"digraph of an {d.m}-orbit has no loop; theorem violated")
    return loops


def adjacency_matrix(d: TransitionDigraph) -> list[list[int]]:
    n = d.n_vertices
    mat = [[0] * n for _ in range(n)]
    for u in d.vertices():
        for v in d.targets(u):
            mat[u - 1][v - 1] = 1
    return mat


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _walk_traces(d: TransitionDigraph, up_to: int) -> list[int]:
    """trace(A^n) for n = 1..up_to, exact integers."""
    adj = adjacency_matrix(d)
    traces = []
    power = adj
    for _ in range(up_to):
        traces.append(sum(power[i][i] for i in range(len(power))))
        power = _matmul(power, adj)
    return traces


def closed_walk_count(d: TransitionDigraph, length: int) -> int:
    """Number of rooted closed walks of the given edge length: trace(A^length)."""
    if length < 1:
        raise ValueError(f"walk length must be >= 1, got {length}")
    return _walk_traces(d, length)[length - 1]


def _mobius(n: int) -> int:
    result = 1
    q = 2
    while q * q <= n:
        if n % q == 0:
            n //= q
            if n % q == 0:
                return 0
            result = -result
        q += 1
    if n > 1:
        result = -result
    return result


def aperiodic_closed_walk_count(d: TransitionDigraph, length: int) -> int:
    """Rooted closed walks of this edge length that are not a repeated shorter walk."""
    if length < 1:
        raise ValueError(f"walk length must be >= 1, got {length}")
    traces = _walk_traces(d, length)
    return sum(
        _mobius(length // div) * traces[div - 1]
        for div in range(1, length + 1)
        if length % div == 0
    )


def primitive_cycle_exists(d: TransitionDigraph, length: int) -> bool:
    """True iff some closed walk of this edge length is aperiodic."""
    return aperiodic_closed_walk_count(d, length) > 0


def odd_generator(p: Pattern) -> int:
    """Smallest odd edge length in [3, m] carrying a primitive cycle.

    For odd-period patterns this is the Sharkovskii generator of the
    realized period set of the connect-the-dots map.
    """
    if p.m % 2 == 0:
        raise EvenPeriod(f"odd generator needs odd period, got {p.m}")
    d = build(p)
    traces = _walk_traces(d, p.m)
    for length in range(3, p.m + 1, 2):
        aperiodic = sum(
            _mobius(length // div) * traces[div - 1]
            for div in range(1, length + 1)
            if length % div == 0
        )
        if aperiodic > 0:
            return length
    raise NoOddCycle(f"no odd primitive cycle up to {p.m}; theorem violated")


def to_dot(d: TransitionDigraph) -> str:
    """Deterministic DOT rendering; red edges carry color="red"."""
    lines = ["digraph transitions {"]
    for v in d.vertices():
        lines.append(f"  J{v};")
    for u, v, is_red in d.edges():
        attr = ' [color="red"]' if is_red else ""
        lines.append(f"  J{u} -> J{v}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
