"""Numerical semigroups as canonical immutable values.

A numerical semigroup is a subset of the non-negative integers that
contains 0, is closed under addition, and misses only finitely many
integers (its *gaps*).  Values are canonicalized on construction:

* ``min_generators`` is the unique minimal generating set, ascending;
* ``frobenius`` is the largest gap, with the convention -1 when there
  are no gaps (the semigroup is all of the non-negative integers);
* ``genus`` is the number of gaps;
* ``small_elements[i]`` records membership of ``i`` for
  ``0 <= i <= frobenius + 1``; every larger integer is a member, so
  membership queries never need more than this table.

Two values are equal exactly when their minimal generating sets are
equal; the remaining fields are derived data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    EmptyGeneratorsError,
    NonCoprimeError,
    NotAboveFrobeniusError,
    NotMinimalGeneratorError,
    ResourceLimitError,
    ZeroGeneratorError,
)

# Hard ceiling on membership tables.  Construction fails loudly instead of
# allocating unbounded memory when generator magnitudes are adversarial.
MAX_TABLE_SIZE = 1 << 24


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    min_generators: tuple[int, ...]
    frobenius: int
    genus: int
    gaps: tuple[int, ...]
    small_elements: tuple[bool, ...]

    def contains(self, x: int) -> bool:
        """Membership test; negative integers are never members."""
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return self.small_elements[x]

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def gaps_within(self, r: int) -> tuple[int, ...]:
        """Ascending gaps that are >= r + 1.

        Equivalently the complement of the semigroup inside the set
        consisting of 0 and every integer >= r + 1.
        """
        return tuple(g for g in self.gaps if g > r)

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero member."""
        return self.min_generators[0]

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_generators == other.min_generators

    def __hash__(self):
        return hash(self.min_generators)

    def __repr__(self):
        return "<" + ",".join(map(str, self.min_generators)) + ">"


def _canonicalize(member: Sequence) -> NumericalSemigroup:
    """Build the canonical value from a membership table.

    ``member[i]`` must give membership of ``i`` for every index of the
    table, and every integer >= len(member) must belong to the semigroup.
    """
    size = len(member)
    gaps = tuple(i for i in range(size) if not member[i])
    frobenius = gaps[-1] if gaps else -1
    small = tuple(bool(member[i]) if i < size else True for i in range(frobenius + 2))

    def is_member(v: int) -> bool:
        return v > frobenius or small[v]

    multiplicity = 1
    while not is_member(multiplicity):
        multiplicity += 1

    # Minimal generators are members not expressible as a sum of two nonzero
    # members; anything above frobenius + multiplicity splits off the
    # multiplicity, so the scan below is exhaustive.
    top = max(frobenius + multiplicity, multiplicity)
    min_gens = []
    for v in range(1, top + 1):
        if not is_member(v):
            continue
        if any(is_member(u) and is_member(v - u) for u in range(multiplicity, v - multiplicity + 1)):
            continue
        min_gens.append(v)

    return NumericalSemigroup(
        min_generators=tuple(min_gens),
        frobenius=frobenius,
        genus=len(gaps),
        gaps=gaps,
        small_elements=small,
    )


def _reachable_table(gen_list: list[int], bound: int) -> bytearray:
    """table[v] = 1 iff v < bound is a non-negative integer combination."""
    table = bytearray(bound)
    table[0] = 1
    for g in gen_list:
        for v in range(g, bound):
            if table[v - g]:
                table[v] = 1
    return table


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Canonical numerical semigroup generated by ``gens``.

    The generators must be a non-empty collection of positive integers
    with gcd 1 (otherwise the generated monoid has an infinite
    complement and is represented elsewhere as a scaled semigroup).
    """
    gen_list = sorted(set(gens))
    if not gen_list:
        raise EmptyGeneratorsError("at least one generator is required")
    if gen_list[0] < 1:
        raise ZeroGeneratorError(f"generators must be positive, got {gen_list[0]}")
    d = math.gcd(*gen_list)
    if d != 1:
        raise NonCoprimeError(f"gcd of generators is {d}, expected 1")
    if gen_list[0] == 1:
        return _canonicalize((True,))

    multiplicity = gen_list[0]
    # Start near the two-generator Frobenius bound and grow until the table
    # ends with `multiplicity` consecutive members, which certifies that every
    # larger integer is a member as well.
    bound = multiplicity * gen_list[-1] + 2
    while True:
        if bound > MAX_TABLE_SIZE:
            raise ResourceLimitError(
                f"membership table would exceed {MAX_TABLE_SIZE} entries for generators {gen_list}"
            )
        table = _reachable_table(gen_list, bound)
        last_gap = bound - 1
        while last_gap >= 0 and table[last_gap]:
            last_gap -= 1
        if bound - 1 - last_gap >= multiplicity:
            return _canonicalize(table[: last_gap + 2])
        bound *= 2


def remove_generator(s: NumericalSemigroup, m: int) -> NumericalSemigroup:
    """The semigroup ``s`` minus the minimal generator ``m``, for m > frobenius.

    The removal keeps every other element, so the result has Frobenius
    number ``m`` and one more gap.  Its minimal generators are updated
    incrementally instead of being recomputed from scratch: removing the
    multiplicity only happens when the semigroup is ``{0, m, m+1, ...}``
    and shifts the whole ray; otherwise either the remaining generators
    still generate, or ``m + multiplicity`` becomes the one new minimal
    generator, depending on whether some smaller generator ``n_j`` has
    ``m + multiplicity - n_j`` in ``s``.
    """
    gens = s.min_generators
    if m not in gens:
        raise NotMinimalGeneratorError(f"{m} is not a minimal generator of {s}")
    if m <= s.frobenius:
        raise NotAboveFrobeniusError(f"{m} is not above the Frobenius number {s.frobenius}")

    n1 = gens[0]
    if m == n1:
        # m > frobenius forces s == {0, m, ->}; dropping m leaves {0, m+1, ->}.
        new_gens = tuple(range(m + 1, 2 * m + 2))
    else:
        i = gens.index(m)
        if any(s.contains(m + n1 - gens[j]) for j in range(1, i)):
            new_gens = tuple(g for g in gens if g != m)
        else:
            new_gens = tuple(sorted(set(g for g in gens if g != m) | {m + n1}))

    table = list(s.small_elements) + [True] * (m + 2 - len(s.small_elements))
    table[m] = False
    return NumericalSemigroup(
        min_generators=new_gens,
        frobenius=m,
        genus=s.genus + 1,
        gaps=s.gaps + (m,),
        small_elements=tuple(table),
    )


def intersect(s: NumericalSemigroup, t: NumericalSemigroup) -> NumericalSemigroup:
    """Canonical value of the intersection (again a numerical semigroup)."""
    limit = max(s.frobenius, t.frobenius, -1) + 1
    table = [s.contains(i) and t.contains(i) for i in range(limit + 1)]
    return _canonicalize(table)
