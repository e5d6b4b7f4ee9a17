"""Ideals, subtractive (k-)closure and k-simplicity of finite semirings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

from .kernel import (
    FiniteSemiring,
    PreconditionError,
    ScanLimitError,
    extremal_elements,
    find_zero,
    is_incline,
    natural_leq,
)

MAX_IDEAL_SCAN = 16


@dataclass(frozen=True)
class ElementSubset:
    """Subset of a semiring's carrier stored as a bit mask (bit i = element i).

    Equality and hashing use the mask only.
    """

    owner: FiniteSemiring = field(compare=False, repr=False)
    bits: int

    @classmethod
    def of(cls, R: FiniteSemiring, items: Iterable[Union[int, str]]) -> "ElementSubset":
        bits = 0
        for it in items:
            i = R.index(it) if isinstance(it, str) else int(it)
            if not 0 <= i < R.order:
                raise IndexError(f"element {i} outside {R.name}")
            bits |= 1 << i
        return cls(R, bits)

    @classmethod
    def full(cls, R: FiniteSemiring) -> "ElementSubset":
        return cls(R, (1 << R.order) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.owner.order) if self.bits >> i & 1)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.owner.elements[i] for i in self.members)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __le__(self, other: "ElementSubset") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "ElementSubset") -> bool:
        return self <= other and self.bits != other.bits

    def __str__(self):
        return "{" + ", ".join(self.names) + "}"


def is_ideal(R: FiniteSemiring, S: ElementSubset) -> bool:
    if not S.bits:
        return False
    A, M = R.add, R.mul
    mem = S.members
    for a in mem:
        for b in mem:
            if not S.bits >> A[a][b] & 1:
                return False
        for r in range(R.order):
            if not (S.bits >> M[r][a] & 1 and S.bits >> M[a][r] & 1):
                return False
    return True


def _require_ideal(R, S):
    if not is_ideal(R, S):
        raise PreconditionError(f"{S} is not an ideal of {R.name}")


def k_closure(R: FiniteSemiring, A: ElementSubset) -> ElementSubset:
    """All x with x + a in A for some a in A."""
    _require_ideal(R, A)
    mem = A.members
    bits = 0
    for x in range(R.order):
        row = R.add[x]
        if any(A.bits >> row[a] & 1 for a in mem):
            bits |= 1 << x
    return ElementSubset(R, bits)


def is_k_ideal(R: FiniteSemiring, A: ElementSubset) -> bool:
    return is_ideal(R, A) and k_closure(R, A) == A


def _nonempty_subsets(R: FiniteSemiring) -> Iterator[ElementSubset]:
    for bits in range(1, 1 << R.order):
        yield ElementSubset(R, bits)


def enumerate_ideals(R: FiniteSemiring) -> list[ElementSubset]:
    """Every ideal, ordered by ascending bit pattern."""
    if R.order > MAX_IDEAL_SCAN:
        raise ScanLimitError(f"ideal scan supports order <= {MAX_IDEAL_SCAN}")
    return [S for S in _nonempty_subsets(R) if is_ideal(R, S)]


def enumerate_k_ideals(R: FiniteSemiring) -> list[ElementSubset]:
    return [A for A in enumerate_ideals(R) if k_closure(R, A) == A]


def ideal_sum(R: FiniteSemiring, A: ElementSubset, B: ElementSubset) -> ElementSubset:
    _require_ideal(R, A)
    _require_ideal(R, B)
    bits = 0
    for a in A.members:
        for b in B.members:
            bits |= 1 << R.add[a][b]
    out = ElementSubset(R, bits)
    assert is_ideal(R, out)
    return out


def generated_ideal(R: FiniteSemiring, S: ElementSubset) -> ElementSubset:
    """Least fixed point of S -> S u (S+S) u RS u SR."""
    if not S.bits:
        raise PreconditionError("generating set must be nonempty")
    bits = S.bits
    for _ in range(R.order + 1):
        mem = [i for i in range(R.order) if bits >> i & 1]
        new = bits
        for a in mem:
            for b in mem:
                new |= 1 << R.add[a][b]
            for r in range(R.order):
                new |= 1 << R.mul[r][a] | 1 << R.mul[a][r]
        if new == bits:
            return ElementSubset(R, bits)
        bits = new
    raise AssertionError("closure did not stabilise")  # pragma: no cover


def down_set(R: FiniteSemiring, r: int) -> ElementSubset:
    leq = natural_leq(R)
    out = ElementSubset.of(R, (x for x in range(R.order) if leq[x][r]))
    if is_incline(R):
        assert is_k_ideal(R, out), f"down-set of {R.elements[r]} is not a k-ideal"
    return out


def _is_trivial(R: FiniteSemiring, A: ElementSubset, zero: Optional[int]) -> bool:
    # {0} only counts as trivial when R actually has a zero
    return A.bits == (1 << R.order) - 1 or (zero is not None and A.bits == 1 << zero)


def find_nontrivial_k_ideal(R: FiniteSemiring) -> Optional[ElementSubset]:
    """Down-set of the lowest-index element that is neither maximal nor minimal."""
    if not is_incline(R):
        raise PreconditionError(f"{R.name} is not an incline")
    if R.order <= 2:
        return None
    ext = extremal_elements(R)
    r = next(x for x in range(R.order) if x not in ext.maximal and x not in ext.minimal)
    A = down_set(R, r)
    assert not _is_trivial(R, A, find_zero(R))
    return A


def is_k_simple(R: FiniteSemiring) -> bool:
    zero = find_zero(R)
    return all(_is_trivial(R, A, zero) for A in enumerate_k_ideals(R))


def is_ideal_free(R: FiniteSemiring) -> bool:
    zero = find_zero(R)
    return all(_is_trivial(R, A, zero) for A in enumerate_ideals(R))


def is_trivial_ideal(R: FiniteSemiring, A: ElementSubset) -> bool:
    return _is_trivial(R, A, find_zero(R))


__all__ = [
    "ElementSubset",
    "down_set",
    "enumerate_ideals",
    "enumerate_k_ideals",
    "find_nontrivial_k_ideal",
    "generated_ideal",
    "ideal_sum",
    "is_ideal",
    "is_ideal_free",
    "is_k_ideal",
    "is_k_simple",
    "is_trivial_ideal",
    "k_closure",
]
