"""Shared brute-force oracles and invariant checkers for the test suite.

The helpers here deliberately avoid the package's membership tables and
incremental updates: monoids are saturated by repeated addition, minimal
generators recomputed from scratch, so that golden values and property
tests rest on an independent code path.
"""

from __future__ import annotations

import math
import random

from abmonoids import ProblemInstance, is_ab_monoid
from abmonoids.semigroup import NumericalSemigroup


def saturated_members(gens, limit: int) -> set[int]:
    """Members of the monoid generated by ``gens`` up to ``limit``, by saturation."""
    members = {0} | {g for g in gens if g <= limit}
    frontier = list(members)
    while frontier:
        s = frontier.pop()
        for g in gens:
            v = s + g
            if v <= limit and v not in members:
                members.add(v)
                frontier.append(v)
    return members


def recomputed_min_generators(s: NumericalSemigroup) -> tuple[int, ...]:
    """Minimal generators recomputed from the membership table alone.

    Uses the defining identity: the nonzero members minus all pairwise
    sums of nonzero members, scanned on a window wide enough to contain
    every minimal generator.
    """
    hi = max(2 * s.frobenius + 2, 2)
    nonzero = [v for v in range(1, hi + 1) if s.contains(v)]
    nzset = set(nonzero)
    sums = {u + v for u in nonzero for v in nonzero if u + v <= hi}
    return tuple(v for v in nonzero if v not in sums)


def assert_semigroup_consistent(s: NumericalSemigroup) -> None:
    """Field-level consistency: gaps/genus/frobenius/table/msg all agree."""
    assert s.genus == len(s.gaps)
    assert len(s.small_elements) == s.frobenius + 2
    assert s.small_elements[0] is True or s.small_elements[0]
    assert s.gaps == tuple(i for i in range(s.frobenius + 2) if not s.small_elements[i])
    if s.gaps:
        assert s.gaps[-1] == s.frobenius
    else:
        assert s.frobenius == -1
    assert math.gcd(*s.min_generators) == 1
    assert recomputed_min_generators(s) == s.min_generators
    # closure under addition, exhaustively on the table range
    members = [v for v in range(s.frobenius + 2) if s.contains(v)]
    for u in members:
        for v in members:
            assert s.contains(u + v), (s, u, v)


def assert_tree_invariants(levels, inst: ProblemInstance) -> None:
    arena = [node for level in levels for node in level]
    seen = set()
    for depth, level in enumerate(levels):
        for node in level:
            s = node.semigroup
            assert node.depth == depth
            assert s.genus == depth + inst.r, (s, depth, inst)
            assert s.min_generators not in seen
            seen.add(s.min_generators)
            # contained in {0, r+1, ->} and containing the forbidden-set seed
            assert all(not s.contains(v) for v in range(1, inst.r + 1))
            assert all(s.contains(v) for v in inst.x)
            assert is_ab_monoid(s.min_generators, inst.a, inst.b)
            assert_semigroup_consistent(s)
            if depth == 0:
                assert node.removed is None and node.parent is None
            else:
                parent = arena[node.parent]
                assert parent.depth == depth - 1
                assert node.removed == s.frobenius
                assert node.removed > parent.semigroup.frobenius
                assert node.removed in parent.semigroup.min_generators


def random_instance(rng: random.Random) -> ProblemInstance:
    """One random instance within the small-scale cross-check bounds."""
    n = rng.randint(0, 3)
    a = tuple(rng.randint(1, 5) for _ in range(n))
    b = tuple(rng.randint(1, 5) for _ in range(n))
    r = rng.randint(0, 3)
    x_size = rng.randint(0, 3)
    pool = list(range(r + 1, 13))
    x = frozenset(rng.sample(pool, x_size))
    g = rng.randint(0, 5)
    return ProblemInstance(a=a, b=b, x=x, g=g, r=r)


def instance_corpus(count: int, seed: int = 20260809) -> list[ProblemInstance]:
    rng = random.Random(seed)
    return [random_instance(rng) for _ in range(count)]
