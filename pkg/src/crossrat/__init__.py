"""Orbit-parity rationality criterion for fields of cross-ratios.

Decides, for a subgroup S of Sym(n) given by generators, whether S has an
orbit of odd size, and backs either answer with a certificate: the odd
orbit, or a fixed-point-free 2-Sylow subgroup together with index-2
subgroups over each of its point stabilizers.
"""

from .crossratio import (
    INF,
    CrossRatioTuple,
    Mobius,
    ProjPoint,
    check_descended_action,
    check_invariance,
    cross_ratio,
    kn_coordinates,
    mobius_apply,
)
from .errors import CapExceeded, CycleParseError, PreconditionError
from .group import (
    OrbitDecomposition,
    PermGroup,
    contains,
    elements,
    is_conjugate_subgroup,
    orbits,
    order,
    stabilizer,
)
from .perm import Permutation, compose, format_cycles, parse_cycles
from .rationality import Verdict, VerdictKind, decide, reduce_to_sylow, witness_nonrational
from .twogroup import (
    Index2Witness,
    SylowWitness,
    fixed_points,
    frattini_2group,
    index2_over,
    sylow_2,
)

__all__ = [
    "INF", "CapExceeded", "CrossRatioTuple", "CycleParseError", "Index2Witness", "Mobius",
    "OrbitDecomposition", "PermGroup", "Permutation", "PreconditionError", "ProjPoint",
    "SylowWitness", "Verdict", "VerdictKind", "check_descended_action", "check_invariance",
    "compose", "contains", "cross_ratio", "decide", "elements", "fixed_points", "format_cycles",
    "frattini_2group", "index2_over", "is_conjugate_subgroup", "kn_coordinates", "mobius_apply",
    "orbits", "order", "parse_cycles", "reduce_to_sylow", "stabilizer", "sylow_2",
    "witness_nonrational",
]
