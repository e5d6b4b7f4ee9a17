"""Slow, independent reference computations used to cross-check the fast paths."""

from __future__ import annotations

from math import gcd
from functools import reduce
from typing import Sequence


def combination_values(gens: Sequence[int], limit: int) -> set[int]:
    """Every sum c1*g1 + ... + cn*gn <= limit, by enumerating coefficient vectors."""
    out: set[int] = set()

    def walk(i: int, total: int):
        if i == len(gens):
            out.add(total)
            return
        g = gens[i]
        c = 0
        while total + c * g <= limit:
            walk(i + 1, total + c * g)
            c += 1

    walk(0, 0)
    return out


def in_closure_by_gcd(gens: Sequence[int], x: int) -> bool:
    """Subtractive closure of a finitely generated ideal of N: multiples of the gcd."""
    return x % reduce(gcd, gens) == 0
