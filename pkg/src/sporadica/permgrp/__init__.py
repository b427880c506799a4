"""Permutation groups: Schreier-Sims chains, actions, classes, isomorphism."""
from .bsgs import (
    ActionReport, GroupBSGS, brute_force_closure, bsgs, commutator, derived_subgroup,
    normal_closure, orbit_stabilizer, transitivity_degree,
)
from .classes import ConjugacyClass, SimplicityResult, conjugacy_classes, is_simple
from .iso import Isomorphism, is_isomorphic, recognize_small, verify_isomorphism
from .named import (
    alternating, coset_action, cyclic, dicyclic, dihedral, direct_product,
    icosahedral_vertices, klein, quaternion, symmetric,
)
from .perm import Permutation, format_generators, parse_generators, parse_perm, read_generators, write_generators

__all__ = [
    "ActionReport", "ConjugacyClass", "GroupBSGS", "Isomorphism", "Permutation", "SimplicityResult",
    "alternating", "brute_force_closure", "bsgs", "commutator", "conjugacy_classes", "coset_action",
    "cyclic", "derived_subgroup", "dicyclic", "dihedral", "direct_product", "format_generators",
    "icosahedral_vertices", "is_isomorphic", "is_simple", "klein", "normal_closure",
    "orbit_stabilizer", "parse_generators", "parse_perm", "quaternion", "read_generators",
    "recognize_small", "symmetric", "transitivity_degree", "verify_isomorphism", "write_generators",
]
