"""Exact computations around wave-front sets and derivatives of GL(n) representations.

Archimedean side: unitary representations of GL(n, R) in the Vogan
classification, their associated partitions, adduction and infinitesimal
characters. Non-archimedean side: the segment polynomial ring with
Bernstein-Zelevinsky derivatives. Both are checked against nilpotent orbit
combinatorics and exact matrix oracles.
"""

from .infchar import InfChar, casselman_osborne_check, inf_char, symmetric_submultiset_search
from .matrices import RationalMatrix, dominance_oracle, jordan_matrix, partition_of_nilpotent
from .orbits import NilpotentOrbit, dimension, dimension_gap, induce
from .partitions import Composition, Partition, dominates, orbit_sum, transpose
from .reps import (
    Character,
    Speh,
    SpehCS,
    Stein,
    UnitaryRep,
    adduce,
    associated_partition,
    depth_composition,
    parse_rep,
    whittaker_nonvanishing,
)
from .zelevinsky import SegmentPoly, derivative_word, parse_poly, seg, total_derivative, wf_partition

__all__ = [
    "Character",
    "Composition",
    "InfChar",
    "NilpotentOrbit",
    "Partition",
    "RationalMatrix",
    "SegmentPoly",
    "Speh",
    "SpehCS",
    "Stein",
    "UnitaryRep",
    "adduce",
    "associated_partition",
    "casselman_osborne_check",
    "depth_composition",
    "derivative_word",
    "dimension",
    "dimension_gap",
    "dominance_oracle",
    "dominates",
    "induce",
    "inf_char",
    "jordan_matrix",
    "orbit_sum",
    "parse_poly",
    "parse_rep",
    "partition_of_nilpotent",
    "seg",
    "symmetric_submultiset_search",
    "total_derivative",
    "transpose",
    "wf_partition",
    "whittaker_nonvanishing",
]

__version__ = "0.1.0"
