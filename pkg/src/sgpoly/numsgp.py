"""Numerical semigroups: minimal generators, membership, Frobenius number, gaps.

A numerical semigroup here is a cofinite, additively closed subset of the
nonnegative integers containing 0, described by generators with gcd 1.
Construction sieves membership once; instances are immutable afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd


@dataclass(frozen=True)
class NumericalSemigroup:
    min_generators: tuple[int, ...]
    frobenius: int  # -1 when the semigroup is all of N
    genus: int
    gaps: tuple[int, ...]
    membership: tuple[bool, ...]  # indices 0 .. frobenius + max(min_generators)

    def contains(self, a):
        """Whether a belongs to the semigroup; a must be nonnegative."""
        if a < 0:
            raise ValueError("semigroup elements are nonnegative")
        if a > self.frobenius:
            return True
        return self.membership[a]

    def __repr__(self):
        gens = ",".join(str(g) for g in self.min_generators)
        return f"NumericalSemigroup<{gens}>"


def from_generators(gens):
    """Semigroup generated by the given positive integers (gcd must be 1).

    The input is deduplicated and reduced to the unique minimal generating
    set; Frobenius number, gaps, and a membership table are precomputed by
    an additive sieve bounded by the product of the two smallest generators.
    """
    gens = sorted(set(gens))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] < 1:
        raise ValueError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise ValueError("gcd of generators must be 1 (complement would be infinite)")

    if gens[0] == 1:
        return NumericalSemigroup((1,), -1, 0, (), (True,))

    # any Frobenius number is bounded by the two-generator case n1*n2 - n1 - n2
    bound = gens[0] * gens[1] + gens[-1]
    member = [False] * (bound + 1)
    member[0] = True
    for i in range(1, bound + 1):
        for g in gens:
            if i >= g and member[i - g]:
                member[i] = True
                break

    gaps = tuple(i for i in range(bound + 1) if not member[i])
    frobenius = gaps[-1]
    minimal = tuple(
        g for g in gens
        if not any(member[a] and member[g - a] for a in range(1, g))
    )
    table = tuple(member[: frobenius + minimal[-1] + 1])
    return NumericalSemigroup(minimal, frobenius, len(gaps), gaps, table)
