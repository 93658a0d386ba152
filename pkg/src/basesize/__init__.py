"""Base sizes of permutation groups, base size sets of small groups, and
determining numbers of graphs."""

from .bases import Base, greedy_base, is_base, min_base_size, minimum_base
from .groups import (
    Abelian,
    Dihedral,
    base_size_set,
    coset_action,
    dpq_representation,
    faithful_actions,
    parse_group,
    regular_representation,
)
from .perm import BudgetExceeded, ParseError, Permutation, PermutationGroup

__version__ = "0.1.0"

__all__ = [
    "Abelian",
    "Base",
    "BudgetExceeded",
    "Dihedral",
    "ParseError",
    "Permutation",
    "PermutationGroup",
    "base_size_set",
    "coset_action",
    "dpq_representation",
    "faithful_actions",
    "greedy_base",
    "is_base",
    "min_base_size",
    "minimum_base",
    "parse_group",
    "regular_representation",
]
