"""Graphviz DOT text for Hasse diagrams and ideal/congruence lattices."""

from __future__ import annotations

from typing import Sequence

from . import congruence as cg, ideals as idl
from .kernel import FiniteSemiring, natural_leq

TARGETS = ("hasse", "ideal-lattice", "congruence-lattice")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _covers(leq: Sequence[Sequence[bool]]) -> list[tuple[int, int]]:
    n = len(leq)
    return [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and leq[i][j] and not any(leq[i][m] and leq[m][j] for m in range(n) if m not in (i, j))
    ]


def _graph(name: str, labels: list[str], attrs: list[str], edges: list[tuple[int, int]]) -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i, (label, extra) in enumerate(zip(labels, attrs)):
        tail = f", {extra}" if extra else ""
        lines.append(f"  n{i} [label={_quote(label)}{tail}];")
    for i, j in edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse(R: FiniteSemiring) -> str:
    """Natural order of an additively idempotent semiring (x <= y iff x + y = y)."""
    leq = natural_leq(R)
    return _graph(f"{R.name} hasse", list(R.elements), [""] * R.order, _covers(leq))


def ideal_lattice(R: FiniteSemiring) -> str:
    """Ideals ordered by inclusion; k-ideals drawn with a double border."""
    ideals = idl.enumerate_ideals(R)
    leq = [[a <= b for b in ideals] for a in ideals]
    attrs = ["peripheries=2, k_ideal=true" if idl.is_k_ideal(R, A) else "k_ideal=false" for A in ideals]
    return _graph(f"{R.name} ideals", [str(A) for A in ideals], attrs, _covers(leq))


def congruence_lattice(R: FiniteSemiring) -> str:
    """Congruences ordered by refinement; k-congruences drawn with a double border."""
    congs = cg.enumerate_congruences(R)
    leq = [[a.refines(b) for b in congs] for a in congs]
    attrs = [
        "peripheries=2, k_congruence=true" if cg.is_k_congruence(R, t) else "k_congruence=false"
        for t in congs
    ]
    labels = [" | ".join(",".join(c.names) for c in t.classes()) for t in congs]
    return _graph(f"{R.name} congruences", labels, attrs, _covers(leq))


def export(R: FiniteSemiring, target: str) -> str:
    if target == "hasse":
        return hasse(R)
    if target == "ideal-lattice":
        return ideal_lattice(R)
    if target == "congruence-lattice":
        return congruence_lattice(R)
    raise ValueError(f"unknown target {target!r}; choose from {', '.join(TARGETS)}")
