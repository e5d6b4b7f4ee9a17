"""Finite semirings stored as a pair of Cayley tables over dense indices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

OpTable = tuple[tuple[int, ...], ...]

LAWS = (
    "add_commutative",
    "add_associative",
    "mul_associative",
    "left_distributive",
    "right_distributive",
)


class StructuralError(ValueError):
    """Malformed tables: wrong shape, out-of-range entries, duplicate names."""


class PreconditionError(ValueError):
    """An operation was called on an input outside its domain."""


class ScanLimitError(PreconditionError):
    """Input is larger than an exhaustive scan is allowed to handle."""


class AxiomError(ValueError):
    """Tables are well formed but break at least one semiring law."""

    def __init__(self, report: "AxiomReport", name: str = "", elements: Sequence[str] = ()):
        self.report = report
        self.elements = tuple(elements)
        first = report.violations[0]
        super().__init__(
            f"{name or 'tables'}: {len(report.violations)} violated law(s), "
            f"first {first.law} at {first.witness}"
        )


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    violations: tuple[Violation, ...] = ()
    # additively neutral elements that fail to absorb under multiplication
    neutral_non_absorbing: tuple[int, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def render(self, elements: Sequence[str] | None = None) -> str:
        def nm(i):
            return elements[i] if elements else str(i)

        if self.valid:
            lines = ["valid"]
        else:
            lines = ["invalid"]
            for v in self.violations:
                lines.append(f"  {v.law}: ({', '.join(nm(i) for i in v.witness)})")
        for e in self.neutral_non_absorbing:
            lines.append(f"  note: {nm(e)} is additively neutral but not absorbing")
        return "\n".join(lines)


def _as_table(rows, k: int, label: str) -> OpTable:
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"{label} table is not a matrix of integers") from exc
    if len(table) != k or any(len(row) != k for row in table):
        raise StructuralError(f"{label} table must be {k}x{k}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < k:
                raise StructuralError(f"{label}[{i}][{j}] = {v} is outside [0, {k})")
    return table


def validate(elements: Sequence[str], add, mul) -> AxiomReport:
    """Check every semiring law and return all failures.

    Each violated law carries its lexicographically first witness. Raises
    StructuralError when the tables are not k x k over [0, k).
    """
    k = len(elements)
    if len(set(elements)) != k:
        raise StructuralError("element names must be pairwise distinct")
    A = _as_table(add, k, "add")
    M = _as_table(mul, k, "mul")
    rng = range(k)

    def first(law_holds, arity):
        for w in product(rng, repeat=arity):
            if not law_holds(*w):
                return w
        return None

    checks = {
        "add_commutative": (lambda x, y: A[x][y] == A[y][x], 2),
        "add_associative": (lambda x, y, z: A[A[x][y]][z] == A[x][A[y][z]], 3),
        "mul_associative": (lambda x, y, z: M[M[x][y]][z] == M[x][M[y][z]], 3),
        "left_distributive": (lambda x, y, z: M[x][A[y][z]] == A[M[x][y]][M[x][z]], 3),
        "right_distributive": (lambda x, y, z: M[A[y][z]][x] == A[M[y][x]][M[z][x]], 3),
    }
    violations = []
    for law in LAWS:
        fn, arity = checks[law]
        w = first(fn, arity)
        if w is not None:
            violations.append(Violation(law, w))

    neutral = [e for e in rng if all(A[e][r] == r for r in rng)]
    odd = tuple(e for e in neutral if not all(M[e][r] == e == M[r][e] for r in rng))
    return AxiomReport(tuple(violations), odd)


@dataclass(frozen=True)
class FiniteSemiring:
    """A semiring on elements 0..k-1; names are only for parsing and printing.

    Construction validates the laws and raises AxiomError on failure.
    Order-1 semirings are allowed but ``trivial`` is set, since most of the
    theory assumes at least two elements.
    """

    name: str
    elements: tuple[str, ...]
    add: OpTable
    mul: OpTable

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(str(e) for e in self.elements))
        if not self.elements:
            raise StructuralError("a semiring needs at least one element")
        k = len(self.elements)
        object.__setattr__(self, "add", _as_table(self.add, k, "add"))
        object.__setattr__(self, "mul", _as_table(self.mul, k, "mul"))
        report = validate(self.elements, self.add, self.mul)
        if not report.valid:
            raise AxiomError(report, self.name, self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def trivial(self) -> bool:
        return self.order < 2

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an element of {self.name}") from None

    def plus(self, x: int, y: int) -> int:
        return self.add[x][y]

    def times(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def relabel(self, perm: Sequence[int], name: str | None = None) -> "FiniteSemiring":
        """Return the isomorphic copy in which old element i becomes perm[i]."""
        k = self.order
        inv = [0] * k
        for i, p in enumerate(perm):
            inv[p] = i
        add = [[perm[self.add[inv[i]][inv[j]]] for j in range(k)] for i in range(k)]
        mul = [[perm[self.mul[inv[i]][inv[j]]] for j in range(k)] for i in range(k)]
        elements = [self.elements[inv[i]] for i in range(k)]
        return FiniteSemiring(name or self.name, tuple(elements), add, mul)

    def __repr__(self):
        return f"FiniteSemiring({self.name!r}, order={self.order})"


def find_zero(R: FiniteSemiring) -> Optional[int]:
    """The element that is additively neutral and multiplicatively absorbing."""
    rng = range(R.order)
    found = [
        e for e in rng
        if all(R.add[e][r] == r and R.mul[e][r] == e and R.mul[r][e] == e for r in rng)
    ]
    assert len(found) <= 1, "two additively neutral elements cannot coexist"
    return found[0] if found else None


def find_identity(R: FiniteSemiring) -> Optional[int]:
    rng = range(R.order)
    found = [e for e in rng if all(R.mul[e][r] == r == R.mul[r][e] for r in rng)]
    assert len(found) <= 1
    return found[0] if found else None


def is_additively_idempotent(R: FiniteSemiring) -> bool:
    return all(R.add[r][r] == r for r in range(R.order))


def is_commutative_mul(R: FiniteSemiring) -> bool:
    k = R.order
    return all(R.mul[x][y] == R.mul[y][x] for x in range(k) for y in range(x + 1, k))


def is_incline(R: FiniteSemiring) -> bool:
    if not is_additively_idempotent(R):
        return False
    A, M = R.add, R.mul
    rng = range(R.order)
    return all(A[x][M[x][y]] == x == A[x][M[y][x]] for x in rng for y in rng)


def natural_leq(R: FiniteSemiring) -> tuple[tuple[bool, ...], ...]:
    """Matrix ``leq[x][y]`` meaning x + y = y."""
    if not is_additively_idempotent(R):
        raise PreconditionError(f"{R.name} is not additively idempotent")
    rng = range(R.order)
    leq = tuple(tuple(R.add[x][y] == y for y in rng) for x in rng)
    for x in rng:
        assert leq[x][x]
        for y in rng:
            assert not (leq[x][y] and leq[y][x]) or x == y
            for z in rng:
                assert not (leq[x][y] and leq[y][z]) or leq[x][z]
    return leq


@dataclass(frozen=True)
class Extremal:
    maximal: frozenset[int]
    minimal: frozenset[int]
    greatest: Optional[int]
    least: Optional[int]


def extremal_elements(R: FiniteSemiring) -> Extremal:
    leq = natural_leq(R)
    rng = range(R.order)
    maximal = frozenset(x for x in rng if not any(leq[x][y] and x != y for y in rng))
    minimal = frozenset(x for x in rng if not any(leq[y][x] and x != y for y in rng))
    greatest = next((x for x in rng if all(leq[y][x] for y in rng)), None)
    least = next((x for x in rng if all(leq[x][y] for y in rng)), None)
    if is_incline(R):
        # a maximal element of an incline is the greatest one, dually for minimal
        assert len(maximal) <= 1 and (not maximal or greatest in maximal)
        assert len(minimal) <= 1 and (not minimal or least in minimal)
    return Extremal(maximal, minimal, greatest, least)
