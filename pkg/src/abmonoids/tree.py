"""Level-by-level enumeration of the admissible semigroup tree.

The semigroups containing the seed set, closed under the affine
conditions and contained in {0, r+1, ->} form a tree: the root is
{0, r+1, ->} itself (all of the non-negative integers when r = 0) and
the children of a vertex S are the sets S \\ {m} where m is a minimal
generator above the Frobenius number such that the removal stays
admissible.  Removal of m is admissible iff m is not a seed value and no
coordinate has (m - b_i) / a_i equal to a positive member of S, since
that member's affine image would then be lost.

Each removal adds exactly one gap, so the vertices at breadth-first
depth k are exactly the admissible semigroups with r + k gaps, and the
solutions of the size-g problem are the complements of the depth-g
vertices inside {0, r+1, ->}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import ProblemInstance, is_ab_monoid
from .errors import ResourceLimitError
from .semigroup import NumericalSemigroup, from_generators, remove_generator

DEFAULT_NODE_BUDGET = 10**6


@dataclass(frozen=True)
class VarietyNode:
    """A tree vertex: its semigroup plus breadth-first bookkeeping.

    ``parent`` is an index into the level-ordered arena (the flattened
    level lists); ``removed`` is the generator whose removal produced the
    node and equals its Frobenius number.  Both are None at the root.
    """

    semigroup: NumericalSemigroup
    depth: int
    removed: int | None
    parent: int | None


@dataclass(frozen=True)
class SolutionSet:
    """All solutions, lexicographically sorted, plus enumeration stats."""

    solutions: tuple[tuple[int, ...], ...]
    node_count: int
    truncated: bool


def variety_root(r: int) -> NumericalSemigroup:
    """The maximum admissible semigroup {0, r+1, ->} (all integers when r=0)."""
    return from_generators(range(r + 1, 2 * r + 2))


def children(s: NumericalSemigroup, inst: ProblemInstance) -> list[NumericalSemigroup]:
    """Admissible single-generator removals, ascending by removed generator."""
    out = []
    for m in s.min_generators:
        if m <= s.frobenius or m in inst.x:
            continue
        if any(_affine_preimage_in(s, m, ai, bi) for ai, bi in zip(inst.a, inst.b)):
            continue
        out.append(remove_generator(s, m))
    return out


def _affine_preimage_in(s: NumericalSemigroup, m: int, ai: int, bi: int) -> bool:
    q = m - bi
    return q > 0 and q % ai == 0 and s.contains(q // ai)


def enumerate_levels(
    inst: ProblemInstance, depth_limit: int, *, max_nodes: int = DEFAULT_NODE_BUDGET
) -> list[list[VarietyNode]]:
    """Breadth-first levels 0..depth_limit of the tree.

    Stops early once a level is empty (the tree is exhausted).  Raises
    ResourceLimitError when the total node count would exceed the budget,
    since a truncated enumeration cannot certify a complete answer.
    """
    if depth_limit < 0:
        raise ValueError("depth_limit must be non-negative")
    root = variety_root(inst.r)
    assert is_ab_monoid(root.min_generators, inst.a, inst.b)
    levels = [[VarietyNode(root, 0, None, None)]]
    total = 1
    parent_start = 0
    for depth in range(1, depth_limit + 1):
        level = []
        for offset, parent in enumerate(levels[-1]):
            for child in children(parent.semigroup, inst):
                level.append(VarietyNode(child, depth, child.frobenius, parent_start + offset))
        if not level:
            break
        total += len(level)
        if total > max_nodes:
            raise ResourceLimitError(
                f"tree enumeration exceeded {max_nodes} nodes at depth {depth}",
                node_count=total,
                depth=depth,
            )
        parent_start += len(levels[-1])
        levels.append(level)
    return levels


def solve(inst: ProblemInstance, *, max_nodes: int = DEFAULT_NODE_BUDGET) -> SolutionSet:
    """All solutions of the instance, via depth-g tree enumeration.

    On hitting the node budget no partial answer is kept: the result has
    an empty solution list and the truncated flag set.
    """
    try:
        levels = enumerate_levels(inst, inst.g, max_nodes=max_nodes)
    except ResourceLimitError as err:
        return SolutionSet((), err.node_count, True)
    node_count = sum(len(level) for level in levels)
    if len(levels) <= inst.g:
        return SolutionSet((), node_count, False)
    sols = sorted(node.semigroup.gaps_within(inst.r) for node in levels[inst.g])
    return SolutionSet(tuple(sols), node_count, False)


def export_tree(
    inst: ProblemInstance, depth_limit: int, *, max_nodes: int = DEFAULT_NODE_BUDGET
) -> str:
    """DOT rendering of the tree down to depth_limit.

    Nodes are labelled by their minimal generators and emitted in
    breadth-first order; edges follow in breadth-first order of the
    child.  The text is byte-stable for identical inputs.
    """
    levels = enumerate_levels(inst, depth_limit, max_nodes=max_nodes)
    arena = [node for level in levels for node in level]
    lines = ["digraph variety {"]
    for node in arena:
        lines.append(f'  "{_label(node.semigroup)}";')
    for node in arena:
        if node.parent is not None:
            lines.append(f'  "{_label(arena[node.parent].semigroup)}" -> "{_label(node.semigroup)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _label(s: NumericalSemigroup) -> str:
    return "<" + ",".join(map(str, s.min_generators)) + ">"
