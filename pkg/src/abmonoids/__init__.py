"""Forbidden-sum set problems solved through numerical semigroups.

The package finds every g-element set C of integers >= r+1 such that

* whenever two integers >= r+1 sum to an element of C, at least one of
  them is in C;
* whenever c is in C and (c - b_i) / a_i is an integer >= r+1, that
  quotient is in C as well;
* C avoids a finite forbidden set X.

Complements of such sets inside {0, r+1, ->} are numerical semigroups
closed under the affine maps m -> a_i*m + b_i, which makes the search
space a finitely-branching tree that can be walked level by level.
"""

from .closure import (
    Feasibility,
    ProblemInstance,
    SubmonoidRep,
    TrivialMonoid,
    closure,
    feasible,
    instance_closure,
    is_ab_monoid,
    one_solution,
)
from .errors import (
    EmptyGeneratorsError,
    EmptyXError,
    InfeasibleError,
    Int64OverflowError,
    InvalidInstanceError,
    NonCoprimeError,
    NotAboveFrobeniusError,
    NotMinimalGeneratorError,
    ResourceLimitError,
    ScaleTooLargeError,
    ZeroGeneratorError,
)
from .oracle import check_conditions, oracle_solve
from .semigroup import NumericalSemigroup, from_generators, intersect, remove_generator
from .tree import (
    DEFAULT_NODE_BUDGET,
    SolutionSet,
    VarietyNode,
    children,
    enumerate_levels,
    export_tree,
    solve,
    variety_root,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "EmptyGeneratorsError",
    "EmptyXError",
    "Feasibility",
    "InfeasibleError",
    "Int64OverflowError",
    "InvalidInstanceError",
    "NonCoprimeError",
    "NotAboveFrobeniusError",
    "NotMinimalGeneratorError",
    "NumericalSemigroup",
    "ProblemInstance",
    "ResourceLimitError",
    "ScaleTooLargeError",
    "SolutionSet",
    "SubmonoidRep",
    "TrivialMonoid",
    "VarietyNode",
    "ZeroGeneratorError",
    "check_conditions",
    "children",
    "closure",
    "enumerate_levels",
    "export_tree",
    "feasible",
    "from_generators",
    "instance_closure",
    "intersect",
    "is_ab_monoid",
    "one_solution",
    "oracle_solve",
    "remove_generator",
    "solve",
    "variety_root",
]
