"""Isomorphism, canonical forms and exhaustive enumeration of small semirings.

Enumeration fixes the addition table up to isomorphism first, then searches
multiplication tables row by row. Left distributivity says every row of the
multiplication table is an endomorphism of (R, +), so rows are drawn from
the precomputed additive endomorphisms; columns, associativity and the
requested constraints are checked as soon as the rows they touch are known.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Optional, Sequence

from .congruence import is_congruence_simple, is_k_congruence_simple
from .ideals import find_nontrivial_k_ideal, is_ideal_free, is_k_simple
from .kernel import (
    FiniteSemiring,
    OpTable,
    PreconditionError,
    ScanLimitError,
    extremal_elements,
    find_identity,
    find_zero,
    is_additively_idempotent,
    is_commutative_mul,
    is_incline,
)
from .specfmt import load_fixture

CONSTRAINTS = frozenset({"additively_idempotent", "commutative_mul", "incline", "with_zero", "ring"})
MAX_ISO_ORDER = 8


class UnsupportedBoundError(ScanLimitError):
    """Requested order/constraint combination is beyond the supported search."""


# -- isomorphism -----------------------------------------------------------------


def _colors(add: OpTable, mul: OpTable) -> list[tuple]:
    """Per-element invariants preserved by every isomorphism."""
    k = len(add)
    rng = range(k)

    def profile(values):
        return tuple(sorted(Counter(values).values()))

    base = []
    for x in rng:
        base.append(
            (
                add[x][x] == x,
                mul[x][x] == x,
                all(add[x][y] == y for y in rng),
                all(mul[x][y] == y == mul[y][x] for y in rng),
                all(mul[x][y] == x == mul[y][x] for y in rng),
                sum(add[x][y] == x for y in rng),
                sum(mul[x][y] == x for y in rng),
                sum(mul[y][x] == x for y in rng),
                profile(add[x]),
                profile(mul[x]),
                profile(mul[y][x] for y in rng),
            )
        )
    # one refinement round: what the neighbours look like
    ranks = {c: i for i, c in enumerate(sorted(set(base)))}
    col = [ranks[c] for c in base]
    return [
        (
            col[x],
            tuple(sorted((col[y], col[add[x][y]], col[mul[x][y]], col[mul[y][x]]) for y in rng)),
        )
        for x in rng
    ]


def _candidate_orders(add: OpTable, mul: OpTable) -> Iterator[tuple[int, ...]]:
    """Element orders sorted by colour, with every arrangement inside a colour class."""
    colors = _colors(add, mul)
    blocks = [[x for x in range(len(add)) if colors[x] == c] for c in sorted(set(colors))]
    for choice in product(*(permutations(b) for b in blocks)):
        yield tuple(x for part in choice for x in part)


def _encode(add: OpTable, mul: OpTable, order: Sequence[int]) -> bytes:
    """Tables after relabelling so that element order[p] becomes p."""
    k = len(add)
    pos = [0] * k
    for p, x in enumerate(order):
        pos[x] = p
    out = bytearray([k])
    for table in (add, mul):
        for x in order:
            row = table[x]
            out.extend(pos[row[y]] for y in order)
    return bytes(out)


def _canonical(add: OpTable, mul: OpTable) -> tuple[bytes, tuple[int, ...]]:
    best = None
    best_order: tuple[int, ...] = ()
    for order in _candidate_orders(add, mul):
        enc = _encode(add, mul, order)
        if best is None or enc < best:
            best, best_order = enc, order
    return best, best_order


def canonical_key(R: FiniteSemiring) -> bytes:
    """Equal for two semirings exactly when they are isomorphic.

    The minimum is taken over relabellings that sort elements by an
    isomorphism-invariant colour; ties are broken by brute force.
    """
    return _canonical(R.add, R.mul)[0]


def canonical_form(R: FiniteSemiring, name: str | None = None) -> FiniteSemiring:
    """The relabelled copy of R whose tables realise the canonical key."""
    _, order = _canonical(R.add, R.mul)
    perm = [0] * R.order
    for p, x in enumerate(order):
        perm[x] = p
    return R.relabel(perm, name)


def are_isomorphic(R: FiniteSemiring, S: FiniteSemiring) -> Optional[tuple[int, ...]]:
    """A bijection phi (phi[i] = image of element i) preserving + and *, or None."""
    k = R.order
    if S.order != k:
        return None
    if k > MAX_ISO_ORDER:
        raise UnsupportedBoundError(f"isomorphism search supports order <= {MAX_ISO_ORDER}")
    cr, cs = _colors(R.add, R.mul), _colors(S.add, S.mul)
    if sorted(cr) != sorted(cs):
        return None
    cands = [[y for y in range(k) if cs[y] == cr[x]] for x in range(k)]
    phi = [-1] * k
    used = [False] * k

    def consistent(x):
        for y in range(x + 1):
            for a, b in ((x, y), (y, x)):
                for T, U in ((R.add, S.add), (R.mul, S.mul)):
                    r = T[a][b]
                    if phi[r] >= 0 and phi[r] != U[phi[a]][phi[b]]:
                        return False
        return True

    def search(x):
        if x == k:
            return True
        for y in cands[x]:
            if used[y]:
                continue
            phi[x] = y
            used[y] = True
            if consistent(x) and search(x + 1):
                return True
            used[y] = False
        phi[x] = -1
        return False

    if not search(0):
        return None
    for a in range(k):
        for b in range(k):
            assert S.add[phi[a]][phi[b]] == phi[R.add[a][b]]
            assert S.mul[phi[a]][phi[b]] == phi[R.mul[a][b]]
    return tuple(phi)


# -- enumeration ---------------------------------------------------------------------


def _is_associative(T: Sequence[Sequence[int]], k: int) -> bool:
    rng = range(k)
    return all(T[T[x][y]][z] == T[x][T[y][z]] for x in rng for y in rng for z in rng)


def _addition_tables(k: int, idempotent: bool) -> list[OpTable]:
    """Commutative semigroup tables on range(k), one per isomorphism class."""
    cells = [(i, j) for i in range(k) for j in range(i, k) if not (idempotent and i == j)]
    seen: dict[bytes, OpTable] = {}
    for values in product(range(k), repeat=len(cells)):
        T = [[i if i == j else 0 for j in range(k)] for i in range(k)]
        for (i, j), v in zip(cells, values):
            T[i][j] = T[j][i] = v
        if not _is_associative(T, k):
            continue
        table = tuple(tuple(r) for r in T)
        best = min(_encode(table, table, p) for p in permutations(range(k)))
        seen.setdefault(best, table)
    return [seen[key] for key in sorted(seen)]


def _is_additive_group(A: OpTable, k: int) -> bool:
    rng = range(k)
    neutral = [e for e in rng if all(A[e][x] == x for x in rng)]
    return bool(neutral) and all(any(A[x][y] == neutral[0] for y in rng) for x in rng)


def _endomorphisms(A: OpTable, k: int) -> list[tuple[int, ...]]:
    rng = range(k)
    return [
        f
        for f in product(rng, repeat=k)
        if all(f[A[y][z]] == A[f[y]][f[z]] for y in rng for z in rng)
    ]


def _multiplication_tables(A: OpTable, k: int, constraints: frozenset) -> Iterator[list[tuple[int, ...]]]:
    rng = range(k)
    endos = _endomorphisms(A, k)
    incline = "incline" in constraints
    commutative = "commutative_mul" in constraints
    row_cands = []
    for x in rng:
        cands = endos
        if incline:  # x + xy = x
            cands = [f for f in cands if all(A[x][f[y]] == x for y in rng)]
        row_cands.append(cands)

    M: list[tuple[int, ...]] = []

    def ok(n):
        # rows 0..n-1 are known
        for a in range(n):
            Ma = M[a]
            for b in range(n):
                ab = Ma[b]
                if commutative and ab != M[b][a]:
                    return False
                if incline and A[a][M[b][a]] != a:
                    return False
                s = A[a][b]
                if s < n:  # column endomorphism: (a+b)z = az + bz
                    Ms, Mb = M[s], M[b]
                    for z in rng:
                        if Ms[z] != A[Ma[z]][Mb[z]]:
                            return False
                if ab < n:  # associativity: (ab)c = a(bc)
                    Mab, Mb = M[ab], M[b]
                    for c in rng:
                        if Mab[c] != Ma[Mb[c]]:
                            return False
        return True

    def search(x):
        if x == k:
            yield list(M)
            return
        for f in row_cands[x]:
            M.append(f)
            if ok(x + 1):
                yield from search(x + 1)
            M.pop()

    yield from search(0)


def _check_bounds(order: int, constraints: frozenset):
    unknown = constraints - CONSTRAINTS
    if unknown:
        raise ValueError(f"unknown constraints {sorted(unknown)}")
    if order < 1:
        raise UnsupportedBoundError("order must be positive")
    if order <= 3:
        return
    if order == 4 and constraints & {"additively_idempotent", "incline"}:
        return
    raise UnsupportedBoundError(
        f"order {order} with constraints {sorted(constraints) or 'none'} is beyond the "
        "supported search (order <= 3, or 4 with additive idempotence)"
    )


def _satisfies(R: FiniteSemiring, constraints: frozenset) -> bool:
    checks = {
        "additively_idempotent": is_additively_idempotent,
        "commutative_mul": is_commutative_mul,
        "incline": is_incline,
        "with_zero": lambda S: find_zero(S) is not None,
        "ring": lambda S: _is_additive_group(S.add, S.order),
    }
    return all(checks[c](R) for c in constraints)


def enumerate_semirings(order: int, constraints: Iterable[str] = ()) -> list[FiniteSemiring]:
    """All semirings of the given order satisfying ``constraints``, up to isomorphism.

    Results are canonical forms sorted by canonical key.
    """
    constraints = frozenset(constraints)
    _check_bounds(order, constraints)
    k = order
    idempotent = bool(constraints & {"additively_idempotent", "incline"})
    found: dict[bytes, FiniteSemiring] = {}
    names = tuple(str(i) for i in range(k))
    for A in _addition_tables(k, idempotent):
        if "ring" in constraints and not _is_additive_group(A, k):
            continue
        for M in _multiplication_tables(A, k, constraints):
            R = FiniteSemiring("candidate", names, A, M)
            if not _satisfies(R, constraints):
                continue
            key = canonical_key(R)
            if key not in found:
                found[key] = R
    out = []
    for i, key in enumerate(sorted(found)):
        out.append(canonical_form(found[key], f"S{k}_{i}"))
    return out


def enumerate_inclines(order: int) -> list[FiniteSemiring]:
    return enumerate_semirings(order, {"incline"})


# -- verification of the incline classification ----------------------------------------


@dataclass(frozen=True)
class InclineRecord:
    semiring: FiniteSemiring
    k_simple: bool
    matches_two_element: bool  # isomorphic to r0 or r1
    greatest: Optional[int]
    least: Optional[int]
    witness: Optional[tuple[int, ...]]  # nontrivial k-ideal for order >= 3


@dataclass(frozen=True)
class InclineReport:
    max_order: int
    counts: dict[int, int]
    k_simple_counts: dict[int, int]
    records: tuple[InclineRecord, ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_theorem_5_4(
    max_order: int, references: Sequence[FiniteSemiring] | None = None
) -> InclineReport:
    """Check on every incline of order 2..max_order that k-simple means r0 or r1.

    Also checks that each incline has a greatest and a least element and that
    from order 3 on the down-set witness is a nontrivial k-ideal.
    """
    if max_order > 4:
        raise UnsupportedBoundError("incline verification supports max_order <= 4")
    if references is None:
        references = (load_fixture("r0"), load_fixture("r1"))
    records = []
    failures = []
    counts, simple = {}, {}
    for k in range(2, max_order + 1):
        inclines = enumerate_inclines(k)
        counts[k] = len(inclines)
        simple[k] = 0
        for R in inclines:
            ks = is_k_simple(R)
            simple[k] += ks
            two = any(are_isomorphic(R, ref) is not None for ref in references)
            ext = extremal_elements(R)
            witness = find_nontrivial_k_ideal(R)
            rec = InclineRecord(R, ks, two, ext.greatest, ext.least, witness.members if witness else None)
            records.append(rec)
            if ks != two:
                failures.append(f"{R.name}: k-simple={ks} but two-element match={two}")
            if ext.greatest is None or ext.least is None:
                failures.append(f"{R.name}: missing greatest or least element")
            if k >= 3 and (witness is None or ks):
                failures.append(f"{R.name}: no nontrivial k-ideal witness")
    return InclineReport(max_order, counts, simple, tuple(records), tuple(failures))


# -- census ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusEntry:
    key: bytes
    flags: dict[str, bool]
    semiring: FiniteSemiring

    def to_dict(self) -> dict:
        R = self.semiring
        return {
            "key": self.key.hex(),
            "flags": dict(sorted(self.flags.items())),
            "elements": list(R.elements),
            "add": [list(r) for r in R.add],
            "mul": [list(r) for r in R.mul],
        }


@dataclass(frozen=True)
class CensusReport:
    order: int
    constraints: tuple[str, ...]
    total: int
    k_simple_count: int
    entries: tuple[CensusEntry, ...]
    k_simple_only: bool = False

    def to_dict(self) -> dict:
        return {
            "version": 1,
            "source": "exhaustive enumeration by this package",
            "order": self.order,
            "constraints": list(self.constraints),
            "total": self.total,
            "k_simple_count": self.k_simple_count,
            "k_simple_only": self.k_simple_only,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [
            f"census order={self.order} constraints={','.join(self.constraints) or 'none'}",
            f"total={self.total} k_simple={self.k_simple_count} listed={len(self.entries)}",
            "(counts computed by exhaustive search in this package)",
        ]
        for e in self.entries:
            R = e.semiring
            on = ",".join(name for name, v in sorted(e.flags.items()) if v) or "-"
            add = "/".join("".join(R.elements[v] for v in row) for row in R.add)
            mul = "/".join("".join(R.elements[v] for v in row) for row in R.mul)
            lines.append(f"{R.name} add={add} mul={mul} flags={on}")
        return "\n".join(lines) + "\n"


def semiring_flags(R: FiniteSemiring) -> dict[str, bool]:
    return {
        "has_zero": find_zero(R) is not None,
        "has_identity": find_identity(R) is not None,
        "additively_idempotent": is_additively_idempotent(R),
        "commutative_mul": is_commutative_mul(R),
        "incline": is_incline(R),
        "k_simple": is_k_simple(R),
        "k_congruence_simple": is_k_congruence_simple(R),
        "ideal_free": is_ideal_free(R),
        "congruence_simple": is_congruence_simple(R),
    }


def census(order: int, constraints: Iterable[str] = (), k_simple_only: bool = False) -> CensusReport:
    constraints = frozenset(constraints)
    semirings = enumerate_semirings(order, constraints)
    entries = []
    n_simple = 0
    for R in semirings:
        flags = semiring_flags(R)
        n_simple += flags["k_simple"]
        if flags["k_simple"] or not k_simple_only:
            entries.append(CensusEntry(canonical_key(R), flags, R))
    return CensusReport(order, tuple(sorted(constraints)), len(semirings), n_simple, tuple(entries), k_simple_only)


def search_k_simple(order: int, constraints: Iterable[str] = ()) -> CensusReport:
    """Every k-simple semiring of the given order, up to isomorphism."""
    return census(order, constraints, k_simple_only=True)


# -- rings Z_n ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class RingSimplicity:
    n: int
    ideal_simple_ring: bool
    ideal_free: bool
    k_simple: bool
    congruence_simple_ring: bool
    congruence_simple: bool
    k_congruence_simple: bool

    def values(self) -> tuple[bool, ...]:
        return (
            self.ideal_simple_ring,
            self.ideal_free,
            self.k_simple,
            self.congruence_simple_ring,
            self.congruence_simple,
            self.k_congruence_simple,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.values())) == 1


def corollary_4_5_check(R: FiniteSemiring) -> RingSimplicity:
    """Evaluate the six simplicity notions on a finite ring.

    The two ring-theoretic notions coincide with their semiring counterparts
    (ring ideals are the semiring ideals of a ring, and likewise for
    congruences), so they are computed that way.
    """
    if not _is_additive_group(R.add, R.order):
        raise PreconditionError(f"{R.name} is not a ring")
    ideal_free = is_ideal_free(R)
    cong_simple = is_congruence_simple(R)
    out = RingSimplicity(
        n=R.order,
        ideal_simple_ring=ideal_free,
        ideal_free=ideal_free,
        k_simple=is_k_simple(R),
        congruence_simple_ring=cong_simple,
        congruence_simple=cong_simple,
        k_congruence_simple=is_k_congruence_simple(R),
    )
    assert out.consistent, f"simplicity notions disagree on {R.name}: {out}"
    return out
