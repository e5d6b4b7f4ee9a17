"""Congruences, Bourne relations and quotient semirings.

A partition is stored as a restricted-growth string: ``class_of[i]`` is the
class index of element i, with class indices first appearing in element
order. That form is unique, so comparing partitions is comparing tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

from .ideals import (
    ElementSubset,
    enumerate_ideals,
    enumerate_k_ideals,
    is_ideal,
    is_k_ideal,
    k_closure,
)
from .kernel import FiniteSemiring, PreconditionError, ScanLimitError, find_zero

MAX_PARTITION_SCAN = 9


def canonical_labels(labels: Sequence) -> tuple[int, ...]:
    seen: dict = {}
    return tuple(seen.setdefault(lab, len(seen)) for lab in labels)


class Partition:
    """An equivalence relation on the carrier of ``owner``."""

    __slots__ = ("owner", "class_of")

    def __init__(self, owner: FiniteSemiring, labels: Sequence):
        if len(labels) != owner.order:
            raise ValueError("one label per element is required")
        self.owner = owner
        self.class_of = canonical_labels(labels)

    @classmethod
    def from_classes(cls, R: FiniteSemiring, classes: Iterable[Iterable[Union[int, str]]]):
        labels: list[Optional[int]] = [None] * R.order
        for c, members in enumerate(classes):
            for m in members:
                i = R.index(m) if isinstance(m, str) else m
                if labels[i] is not None:
                    raise ValueError(f"element {R.elements[i]} listed twice")
                labels[i] = c
        if None in labels:
            missing = [R.elements[i] for i, lab in enumerate(labels) if lab is None]
            raise ValueError(f"elements {missing} are in no class")
        return cls(R, labels)

    @classmethod
    def identity(cls, R: FiniteSemiring):
        return cls(R, range(R.order))

    @classmethod
    def universal(cls, R: FiniteSemiring):
        return cls(R, [0] * R.order)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    def classes(self) -> list[ElementSubset]:
        bits = [0] * self.num_classes
        for i, c in enumerate(self.class_of):
            bits[c] |= 1 << i
        return [ElementSubset(self.owner, b) for b in bits]

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def refines(self, other: "Partition") -> bool:
        """True when this relation is contained in ``other`` as a set of pairs."""
        image: dict[int, int] = {}
        for mine, theirs in zip(self.class_of, other.class_of):
            if image.setdefault(mine, theirs) != theirs:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Partition) and self.class_of == other.class_of

    def __hash__(self):
        return hash(self.class_of)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.classes()) + "}"


class Congruence(Partition):
    """A partition already checked to be compatible with + and *."""

    __slots__ = ()


def _compatible(R: FiniteSemiring, class_of: Sequence[int]) -> bool:
    # comparing each element with the first member of its class suffices
    A, M = R.add, R.mul
    first: dict[int, int] = {}
    rng = range(R.order)
    for x, c in enumerate(class_of):
        y = first.setdefault(c, x)
        if y == x:
            continue
        ax, ay, mx, my = A[x], A[y], M[x], M[y]
        for z in rng:
            if (
                class_of[ax[z]] != class_of[ay[z]]
                or class_of[mx[z]] != class_of[my[z]]
                or class_of[M[z][x]] != class_of[M[z][y]]
            ):
                return False
    return True


def is_congruence(R: FiniteSemiring, p: Partition) -> bool:
    return _compatible(R, p.class_of)


def as_congruence(R: FiniteSemiring, p: Partition) -> Congruence:
    if not is_congruence(R, p):
        raise PreconditionError(f"{p} is not a congruence on {R.name}")
    return Congruence(R, p.class_of)


def _require_ideal(R, A):
    if not is_ideal(R, A):
        raise PreconditionError(f"{A} is not an ideal of {R.name}")


def kappa(R: FiniteSemiring, A: ElementSubset) -> Congruence:
    """The Bourne relation: x ~ y iff x + a = y + b for some a, b in A."""
    _require_ideal(R, A)
    k = R.order
    reach = [0] * k
    for x in range(k):
        for a in A.members:
            reach[x] |= 1 << R.add[x][a]
    rel = [[bool(reach[x] & reach[y]) for y in range(k)] for x in range(k)]
    labels = [min(y for y in range(k) if rel[x][y]) for x in range(k)]
    for x in range(k):
        for y in range(k):
            assert rel[x][y] == (labels[x] == labels[y]), "Bourne relation is not transitive"
    cls = canonical_labels(labels)
    assert _compatible(R, cls), "Bourne relation is not compatible"
    return Congruence(R, cls)


def kappa_single(R: FiniteSemiring, A: ElementSubset) -> Partition:
    """x ~ y iff x + c = y + c for some c in A (additively idempotent R only)."""
    k = R.order
    rel = [[any(R.add[x][c] == R.add[y][c] for c in A.members) for y in range(k)] for x in range(k)]
    labels = [min(y for y in range(k) if rel[x][y]) for x in range(k)]
    if any(rel[x][y] != (labels[x] == labels[y]) for x in range(k) for y in range(k)):
        raise ValueError("relation is not an equivalence")
    return Partition(R, labels)


@dataclass(frozen=True)
class QuotientSemiring:
    base: FiniteSemiring
    congruence: Congruence
    quotient: FiniteSemiring
    projection: tuple[int, ...]

    def cls(self, q: int) -> ElementSubset:
        return ElementSubset(self.base, sum(1 << i for i, c in enumerate(self.projection) if c == q))


def quotient(R: FiniteSemiring, theta: Partition) -> QuotientSemiring:
    """R/theta, each class represented by its lowest-index member."""
    theta = theta if isinstance(theta, Congruence) else as_congruence(R, theta)
    cls = theta.class_of
    n = theta.num_classes
    reps = [cls.index(c) for c in range(n)]
    add = [[cls[R.add[reps[i]][reps[j]]] for j in range(n)] for i in range(n)]
    mul = [[cls[R.mul[reps[i]][reps[j]]] for j in range(n)] for i in range(n)]
    for x in range(R.order):
        for y in range(R.order):
            assert add[cls[x]][cls[y]] == cls[R.add[x][y]]
            assert mul[cls[x]][cls[y]] == cls[R.mul[x][y]]
    names = tuple(f"[{R.elements[r]}]" for r in reps)
    Q = FiniteSemiring(f"{R.name}/~", names, add, mul)
    zero = find_zero(R)
    if zero is not None:
        assert find_zero(Q) == cls[zero]
    return QuotientSemiring(R, theta, Q, cls)


def zero_class(R: FiniteSemiring, theta: Partition) -> Optional[ElementSubset]:
    """The class acting as zero of R/theta, as a subset of R."""
    q = quotient(R, theta)
    z = find_zero(q.quotient)
    if z is None:
        return None
    out = q.cls(z)
    assert is_k_ideal(R, out), "zero class of a quotient must be a k-ideal"
    return out


def is_k_congruence(R: FiniteSemiring, theta: Partition) -> bool:
    """R/theta has a zero class Z and theta equals kappa(Z)."""
    Z = zero_class(R, theta)
    return Z is not None and kappa(R, Z) == theta


def k_congruence_by_inclusion(R: FiniteSemiring, theta: Partition) -> bool:
    """R/theta has a zero class Z and theta is contained in kappa(Z)."""
    Z = zero_class(R, theta)
    return Z is not None and theta.refines(kappa(R, Z))


def k_congruence_by_ideal_scan(R: FiniteSemiring, theta: Partition) -> bool:
    """Some ideal A of R has kappa(A) = theta. Exponential; an oracle only."""
    return any(kappa(R, A) == theta for A in enumerate_ideals(R))


def iota(R: FiniteSemiring, theta: Partition) -> ElementSubset:
    if not is_k_congruence(R, theta):
        raise PreconditionError(f"{theta} is not a k-congruence on {R.name}")
    Z = zero_class(R, theta)
    assert kappa(R, Z) == theta
    return Z


def restricted_growth_strings(k: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of range(k) in lexicographic order."""
    if k == 0:
        yield ()
        return
    s = [0] * k
    m = [0] * k  # m[i] = max(s[0..i])
    while True:
        yield tuple(s)
        i = k - 1
        while i > 0 and s[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        s[i] += 1
        m[i] = max(m[i - 1], s[i])
        for j in range(i + 1, k):
            s[j] = 0
            m[j] = m[i]


def enumerate_congruences(R: FiniteSemiring) -> list[Congruence]:
    if R.order > MAX_PARTITION_SCAN:
        raise ScanLimitError(f"congruence scan supports order <= {MAX_PARTITION_SCAN}")
    return [Congruence(R, s) for s in restricted_growth_strings(R.order) if _compatible(R, s)]


def enumerate_k_congruences(R: FiniteSemiring) -> list[Congruence]:
    return [t for t in enumerate_congruences(R) if is_k_congruence(R, t)]


@dataclass(frozen=True)
class BijectionReport:
    k_ideal_count: int
    k_congruence_count: int
    injective: bool
    surjective: bool
    inclusion_preserved: bool
    round_trips_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.k_ideal_count == self.k_congruence_count
            and self.injective
            and self.surjective
            and self.inclusion_preserved
            and self.round_trips_ok
        )


def verify_bijection(R: FiniteSemiring) -> BijectionReport:
    """Check that kappa maps k-ideals one-to-one onto k-congruences."""
    kis = enumerate_k_ideals(R)
    kcs = enumerate_k_congruences(R)
    images = [kappa(R, A) for A in kis]
    injective = len(set(images)) == len(images)
    surjective = set(images) == set(kcs)
    inclusion = all(
        (A <= B) == images[i].refines(images[j])
        for i, A in enumerate(kis)
        for j, B in enumerate(kis)
    )
    round_trips = all(iota(R, t) == A for A, t in zip(kis, images)) and all(
        kappa(R, iota(R, t)) == t for t in kcs
    )
    return BijectionReport(len(kis), len(kcs), injective, surjective, inclusion, round_trips)


def kappa_injectivity_probe(
    R: FiniteSemiring, family: Sequence[ElementSubset] | None = None
) -> Optional[tuple[ElementSubset, ElementSubset]]:
    """Two distinct ideals of ``family`` with the same Bourne congruence.

    A non-subtractive ideal A is paired with its closure when the closure
    is in the family; otherwise the first colliding pair is returned.
    """
    family = list(enumerate_ideals(R) if family is None else family)
    members = set(family)
    for A in family:
        closure = k_closure(R, A)
        if closure != A and closure in members:
            assert kappa(R, A) == kappa(R, closure)
            return A, closure
    seen: dict[Partition, ElementSubset] = {}
    for A in family:
        t = kappa(R, A)
        if t in seen and seen[t] != A:
            return seen[t], A
        seen.setdefault(t, A)
    return None


def has_zero_iff_identity_k(R: FiniteSemiring) -> bool:
    """Whether 'R has a zero' and 'id_R is a k-congruence' agree on R."""
    zero = find_zero(R)
    ident = Partition.identity(R)
    if zero is not None:
        assert kappa(R, ElementSubset(R, 1 << zero)) == ident
    return (zero is not None) == is_k_congruence(R, ident)


def is_congruence_simple(R: FiniteSemiring) -> bool:
    return len(enumerate_congruences(R)) == 2


def is_k_congruence_simple(R: FiniteSemiring) -> bool:
    # identity need not be a k-congruence, so only require inclusion in {R x R, id}
    allowed = {Partition.universal(R), Partition.identity(R)}
    return all(t in allowed for t in enumerate_k_congruences(R))
