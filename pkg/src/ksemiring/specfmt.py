"""Plain-text semiring files, lattice constructors and the rings Z_n.

Semiring file::

    semiring r1
    elements: 0 1
    add:
    0 1
    1 1
    mul:
    0 0
    0 1

Lattice file::

    lattice fig2
    elements: 0 a b c 1
    covers: 0<c, c<a, c<b, a<1, b<1
    mul: meet

``mul:`` may instead be followed by K table rows. ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from .kernel import AxiomError, FiniteSemiring, OpTable, StructuralError, validate


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class NotALatticeError(ValueError):
    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        self.pair = pair
        super().__init__(message)


class CyclicCoversError(ValueError):
    pass


@dataclass(frozen=True)
class Lattice:
    elements: tuple[str, ...]
    order: tuple[tuple[bool, ...], ...]
    join: OpTable
    meet: OpTable


# -- tokenizer ---------------------------------------------------------------


@dataclass
class _Line:
    number: int
    text: str  # comment stripped, right-stripped
    indent: int

    def tokens(self) -> list[tuple[str, int]]:
        out = []
        col = 0
        for part in self.text.split():
            col = self.text.index(part, col)
            out.append((part, col + 1))
            col += len(part)
        return out


def _lines(text: str) -> list[_Line]:
    out = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append(_Line(n, body, len(body) - len(body.lstrip())))
    return out


def _keyword(line: _Line, key: str) -> Optional[str]:
    stripped = line.text.strip()
    if stripped == key or stripped.startswith(key + " ") or stripped.startswith(key + ":"):
        rest = stripped[len(key):]
        return rest[1:].strip() if rest.startswith(":") else rest.strip()
    return None


def _read_table(lines: list[_Line], pos: int, elements: Sequence[str], label: str) -> tuple[list[list[int]], int]:
    k = len(elements)
    index = {e: i for i, e in enumerate(elements)}
    rows = []
    for r in range(k):
        if pos + r >= len(lines):
            last = lines[-1].number if lines else 1
            raise ParseError(f"{label}: expected {k} rows, found {r}", last + 1)
        line = lines[pos + r]
        toks = line.tokens()
        if len(toks) != k:
            raise ParseError(f"{label} row {r + 1} has {len(toks)} entries, expected {k}", line.number)
        row = []
        for tok, col in toks:
            if tok not in index:
                raise ParseError(f"unknown element {tok!r}", line.number, col)
            row.append(index[tok])
        rows.append(row)
    return rows, pos + k


def _header(lines: list[_Line], kind: str) -> tuple[str, tuple[str, ...]]:
    if not lines:
        raise ParseError("empty document", 1)
    name = _keyword(lines[0], kind)
    if name is None:
        raise ParseError(f"expected '{kind} <name>'", lines[0].number)
    if not name:
        raise ParseError(f"{kind} needs a name", lines[0].number)
    if len(lines) < 2 or _keyword(lines[1], "elements") is None:
        n = lines[1].number if len(lines) > 1 else lines[0].number + 1
        raise ParseError("expected 'elements:' line", n)
    elements = tuple(_keyword(lines[1], "elements").split())
    if not elements:
        raise ParseError("element list is empty", lines[1].number)
    seen = set()
    for tok, col in lines[1].tokens()[1:]:
        if tok in seen:
            raise ParseError(f"duplicate element {tok!r}", lines[1].number, col)
        seen.add(tok)
    return name, elements


# -- semiring files ------------------------------------------------------------


def parse_semiring(text: str) -> FiniteSemiring:
    """Parse a semiring file; raises ParseError or AxiomError."""
    lines = _lines(text)
    if lines and _keyword(lines[0], "lattice") is not None:
        return parse_lattice(text)
    name, elements = _header(lines, "semiring")
    pos = 2
    tables = {}
    for label in ("add", "mul"):
        if pos >= len(lines) or _keyword(lines[pos], label) != "":
            n = lines[pos].number if pos < len(lines) else lines[-1].number + 1
            raise ParseError(f"expected '{label}:'", n)
        tables[label], pos = _read_table(lines, pos + 1, elements, label)
    if pos < len(lines):
        raise ParseError("unexpected trailing content", lines[pos].number)
    return FiniteSemiring(name, elements, tables["add"], tables["mul"])


def _format_table(elements: Sequence[str], table: OpTable) -> list[str]:
    width = max(len(e) for e in elements)
    return [" ".join(elements[v].ljust(width) for v in row).rstrip() for row in table]


def render(R: FiniteSemiring) -> str:
    lines = [f"semiring {R.name}", "elements: " + " ".join(R.elements), "add:"]
    lines += _format_table(R.elements, R.add)
    lines.append("mul:")
    lines += _format_table(R.elements, R.mul)
    return "\n".join(lines) + "\n"


# -- lattices ------------------------------------------------------------------


def lattice_from_covers(covers: Iterable[tuple[str, str]], elements: Sequence[str] | None = None) -> Lattice:
    """Close a Hasse diagram into an order and compute join and meet tables.

    Elements default to first-appearance order in ``covers``.
    """
    covers = [(str(a), str(b)) for a, b in covers]
    if elements is None:
        seen: dict[str, None] = {}
        for a, b in covers:
            seen.setdefault(a)
            seen.setdefault(b)
        elements = tuple(seen)
    elements = tuple(elements)
    index = {e: i for i, e in enumerate(elements)}
    k = len(elements)
    for a, b in covers:
        for e in (a, b):
            if e not in index:
                raise NotALatticeError(f"cover mentions unknown element {e!r}")

    leq = [[i == j for j in range(k)] for i in range(k)]
    for a, b in covers:
        leq[index[a]][index[b]] = True
    for m in range(k):  # Warshall
        for i in range(k):
            if leq[i][m]:
                row_m = leq[m]
                row_i = leq[i]
                for j in range(k):
                    if row_m[j]:
                        row_i[j] = True
    for i in range(k):
        for j in range(i + 1, k):
            if leq[i][j] and leq[j][i]:
                raise CyclicCoversError(f"covers contain a cycle through {elements[i]} and {elements[j]}")
    for a, b in covers:
        i, j = index[a], index[b]
        if i == j:
            raise CyclicCoversError(f"cover {a}<{b} is a loop")
        if any(leq[i][m] and leq[m][j] for m in range(k) if m not in (i, j)):
            raise NotALatticeError(f"cover {a}<{b} is implied by transitivity", (a, b))

    def bound(x, y, upper):
        if upper:
            cands = [z for z in range(k) if leq[x][z] and leq[y][z]]
            best = [z for z in cands if all(leq[z][w] for w in cands)]
        else:
            cands = [z for z in range(k) if leq[z][x] and leq[z][y]]
            best = [z for z in cands if all(leq[w][z] for w in cands)]
        if len(best) != 1:
            what = "least upper" if upper else "greatest lower"
            raise NotALatticeError(
                f"{elements[x]} and {elements[y]} have no {what} bound", (elements[x], elements[y])
            )
        return best[0]

    join = tuple(tuple(bound(x, y, True) for y in range(k)) for x in range(k))
    meet = tuple(tuple(bound(x, y, False) for y in range(k)) for x in range(k))
    order = tuple(tuple(row) for row in leq)
    return Lattice(elements, order, join, meet)


def semiring_from_lattice(
    covers: Iterable[tuple[str, str]] | Lattice,
    mul: Union[str, Sequence[Sequence[int]]] = "meet",
    name: str = "lattice",
    elements: Sequence[str] | None = None,
) -> FiniteSemiring:
    """Join as addition; multiplication is the meet or an explicit table."""
    lat = covers if isinstance(covers, Lattice) else lattice_from_covers(covers, elements)
    if isinstance(mul, str):
        if mul != "meet":
            raise ValueError(f"unknown multiplication {mul!r}")
        table = lat.meet
    else:
        table = mul
    return FiniteSemiring(name, lat.elements, lat.join, table)


def _parse_covers(spec: str, line: _Line) -> list[tuple[str, str]]:
    pairs = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split("<")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise ParseError(f"bad cover {chunk!r}, expected 'lo<hi'", line.number, line.text.find(chunk) + 1)
        pairs.append((parts[0].strip(), parts[1].strip()))
    return pairs


def parse_lattice(text: str) -> FiniteSemiring:
    lines = _lines(text)
    name, elements = _header(lines, "lattice")
    if len(lines) < 3 or _keyword(lines[2], "covers") is None:
        raise ParseError("expected 'covers:' line", lines[-1].number + (len(lines) < 3))
    covers = _parse_covers(_keyword(lines[2], "covers"), lines[2])
    index = set(elements)
    for a, b in covers:
        for e in (a, b):
            if e not in index:
                raise ParseError(f"unknown element {e!r}", lines[2].number, lines[2].text.find(e) + 1)
    mul: Union[str, list[list[int]]] = "meet"
    pos = 3
    if pos < len(lines):
        spec = _keyword(lines[pos], "mul")
        if spec is None:
            raise ParseError("expected 'mul:'", lines[pos].number)
        if spec == "meet":
            pos += 1
        elif spec == "":
            mul, pos = _read_table(lines, pos + 1, elements, "mul")
        else:
            raise ParseError(f"unknown multiplication {spec!r}", lines[pos].number)
    if pos < len(lines):
        raise ParseError("unexpected trailing content", lines[pos].number)
    try:
        lat = lattice_from_covers(covers, elements)
    except (NotALatticeError, CyclicCoversError) as exc:
        raise ParseError(str(exc), lines[2].number) from exc
    return semiring_from_lattice(lat, mul, name)


# -- generated instances ---------------------------------------------------------


def zn_ring(n: int) -> FiniteSemiring:
    if n < 2:
        raise ValueError("zn_ring needs n >= 2")
    rng = range(n)
    return FiniteSemiring(
        f"Z{n}",
        tuple(str(i) for i in rng),
        [[(i + j) % n for j in rng] for i in rng],
        [[(i * j) % n for j in rng] for i in rng],
    )


def upper_triangular_boolean() -> FiniteSemiring:
    """2x2 upper-triangular Boolean matrices under OR and Boolean product."""
    mats = list(product((0, 1), repeat=3))  # (a, b, c) for [[a, b], [0, c]]
    idx = {m: i for i, m in enumerate(mats)}

    def plus(p, q):
        return tuple(x | y for x, y in zip(p, q))

    def times(p, q):
        a, b, c = p
        d, e, f = q
        return (a & d, (a & e) | (b & f), c & f)

    names = tuple(f"{a}{b}{c}" for a, b, c in mats)
    add = [[idx[plus(p, q)] for q in mats] for p in mats]
    mul = [[idx[times(p, q)] for q in mats] for p in mats]
    return FiniteSemiring("upper_tri_bool2", names, add, mul)


# -- shipped fixtures --------------------------------------------------------------

FIXTURES = (
    "fig1_example34",
    "fig2_example35",
    "r0",
    "r1",
    "chain3",
    "maxmax2",
    "trunc3",
    "upper_tri_bool2",
)


def fixture_text(name: str) -> str:
    return resources.files("ksemiring.fixtures").joinpath(f"{name}.txt").read_text("utf-8")


def load_fixture(name: str) -> FiniteSemiring:
    return parse_semiring(fixture_text(name))


def load_fixtures() -> dict[str, FiniteSemiring]:
    return {name: load_fixture(name) for name in FIXTURES}


__all__ = [
    "AxiomError",
    "CyclicCoversError",
    "Lattice",
    "NotALatticeError",
    "ParseError",
    "StructuralError",
    "lattice_from_covers",
    "load_fixture",
    "load_fixtures",
    "parse_lattice",
    "parse_semiring",
    "render",
    "semiring_from_lattice",
    "upper_triangular_boolean",
    "validate",
    "zn_ring",
]
