"""Finitely generated ideals of the semiring of nonnegative integers.

An ideal is the set of nonnegative integer combinations of its generators
(0 is always a member). Membership is decided by a coin-problem style
dynamic program; subtractive-closure membership by a bounded witness search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Optional

MAX_VALUE = 10**6


class RangeError(ValueError):
    pass


def _check(x: int, what: str = "value") -> int:
    if x < 0 or x > MAX_VALUE:
        raise RangeError(f"{what} {x} outside [0, {MAX_VALUE}]")
    return x


def _reachable(gens: Iterable[int], limit: int) -> bytearray:
    """reach[n] == 1 iff n is a nonnegative combination of gens, n <= limit."""
    reach = bytearray(limit + 1)
    reach[0] = 1
    for g in sorted(set(gens)):
        for n in range(g, limit + 1):
            if reach[n - g]:
                reach[n] = 1
    return reach


@dataclass(frozen=True)
class NatIdeal:
    """Ideal generated by positive integers, normalised to a minimal set."""

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = sorted({int(g) for g in self.generators})
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        if gens[0] <= 0:
            raise ValueError("generators must be positive")
        for g in gens:
            _check(g, "generator")
        minimal: list[int] = []
        for g in gens:
            if not _reachable(minimal, g)[g]:
                minimal.append(g)
        object.__setattr__(self, "generators", tuple(minimal))

    @property
    def gcd(self) -> int:
        return reduce(gcd, self.generators)

    def conductor(self) -> int:
        """Smallest c such that every multiple of gcd that is >= c is a member."""
        g = self.gcd
        reduced = [x // g for x in self.generators]
        if reduced[0] == 1:
            return 0
        # Schur: the largest gap of coprime generators is below (min-1)(max-1)
        limit = max(reduced) * min(reduced)
        reach = _reachable(reduced, limit)
        last_gap = max(n for n in range(limit + 1) if not reach[n])
        return (last_gap + 1) * g

    def __str__(self):
        return "(" + ")+(".join(str(g) for g in self.generators) + ")"


def nat_ideal(*gens: int) -> NatIdeal:
    return NatIdeal(tuple(gens))


def nat_contains(I: NatIdeal, x: int) -> bool:
    _check(x)
    return bool(_reachable(I.generators, x)[x])


def nat_sum(I: NatIdeal, J: NatIdeal) -> NatIdeal:
    return NatIdeal(I.generators + J.generators)


def nat_k_closure_witness(I: NatIdeal, x: int) -> Optional[int]:
    """Least a in I with x + a in I, or None if x is outside the closure."""
    _check(x)
    bound = x + I.conductor()
    reach = _reachable(I.generators, x + bound)
    for a in range(bound + 1):
        if reach[a] and reach[x + a]:
            return a
    return None


def nat_in_k_closure(I: NatIdeal, x: int) -> bool:
    return nat_k_closure_witness(I, x) is not None


def nat_is_k_closed_upto(I: NatIdeal, bound: int) -> Optional[int]:
    """Smallest x <= bound in the k-closure of I but not in I."""
    _check(bound, "bound")
    reach = _reachable(I.generators, bound)
    for x in range(bound + 1):
        if not reach[x] and nat_in_k_closure(I, x):
            return x
    return None
