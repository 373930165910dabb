"""Periodic-orbit patterns of continuous interval maps.

Combinatorial machinery for orbit patterns (cyclic permutations), their
transition digraphs and primitive cycles, the Sharkovskii order, exact
rational piecewise-linear realizations, and the complete catalog of
second-minimal odd patterns with its exhaustive verification.
"""

from .catalog import FamilyTag, catalog, catalog_members, family, verify_sharing
from .classify import (
    Classification,
    Kind,
    classify_pattern,
    enumerate_second_minimal,
    expected_structure_histogram,
    plinear_odd_generator,
    structure_histogram,
    verify_simplicity,
)
from .digraph import (
    TransitionDigraph,
    build,
    closed_walk_count,
    loop_vertices,
    odd_generator,
    primitive_cycle_exists,
    relabel_inverse,
    to_dot,
)
from .pattern import (
    Extremum,
    Pattern,
    SimplicityTag,
    StefanCheck,
    TopStructure,
    inverse,
    is_stefan,
    parse_pattern,
    render,
    simplicity,
    stefan,
    topological_structure,
)
from .plinear import (
    PiecewiseLinearMap,
    embed_stefan_witness,
    evaluate,
    find_periods,
    p_linearize,
    witness_report,
)
from .sharkovskii import Order, SharkovskiiKey, compare, forces, generator_of

__version__ = "0.1.0"

__all__ = [
    "Pattern", "Extremum", "TopStructure", "SimplicityTag", "StefanCheck",
    "parse_pattern", "render", "stefan", "inverse", "is_stefan", "simplicity",
    "topological_structure",
    "SharkovskiiKey", "Order", "compare", "forces", "generator_of",
    "TransitionDigraph", "build", "relabel_inverse", "loop_vertices",
    "closed_walk_count", "primitive_cycle_exists", "odd_generator", "to_dot",
    "PiecewiseLinearMap", "p_linearize", "evaluate", "find_periods",
    "embed_stefan_witness", "witness_report",
    "Classification", "Kind", "classify_pattern", "enumerate_second_minimal",
    "verify_simplicity", "structure_histogram", "expected_structure_histogram",
    "plinear_odd_generator",
    "FamilyTag", "family", "catalog", "catalog_members", "verify_sharing",
    "__version__",
]
