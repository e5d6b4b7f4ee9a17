"""Aggregate analysis of a single semiring, as text or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import congruence as cg, ideals as idl, kernel
from .kernel import FiniteSemiring

REPORT_VERSION = 1


@dataclass(frozen=True)
class AnalysisReport:
    semiring: dict
    ideals: list
    congruences: list
    bijection: dict
    simplicity: dict

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "semiring": self.semiring,
            "ideals": self.ideals,
            "congruences": self.congruences,
            "bijection": self.bijection,
            "simplicity": self.simplicity,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        s = self.semiring
        out = [
            f"semiring {s['name']} (order {s['order']})",
            f"  zero: {s['zero'] or '-'}   identity: {s['identity'] or '-'}",
            "  flags: " + (", ".join(k for k, v in s["flags"].items() if v) or "-"),
            f"ideals ({len(self.ideals)}):",
        ]
        for i in self.ideals:
            mark = "k-ideal" if i["k_ideal"] else f"closure {{{', '.join(i['closure'])}}}"
            out.append(f"  {{{', '.join(i['members'])}}}  {mark}")
        out.append(f"congruences ({len(self.congruences)}):")
        for c in self.congruences:
            classes = " ".join("{" + ", ".join(cl) + "}" for cl in c["classes"])
            if c["k_congruence"]:
                mark = "k-congruence"
            elif c["zero_class"] is None:
                mark = "not k: quotient has no zero"
            else:
                mark = f"not k: zero class {{{', '.join(c['zero_class'])}}}"
            out.append(f"  {classes}  {mark}")
        b = self.bijection
        out.append(
            f"bijection: {b['k_ideal_count']} k-ideals, {b['k_congruence_count']} k-congruences, "
            f"inclusion preserved={b['inclusion_preserved']}, round trips={b['round_trips_ok']}"
        )
        out.append("simplicity: " + ", ".join(f"{k}={v}" for k, v in self.simplicity.items()))
        return "\n".join(out) + "\n"


def analyze(R: FiniteSemiring) -> AnalysisReport:
    zero = kernel.find_zero(R)
    one = kernel.find_identity(R)
    flags = {
        "additively_idempotent": kernel.is_additively_idempotent(R),
        "commutative_mul": kernel.is_commutative_mul(R),
        "incline": kernel.is_incline(R),
        "trivial": R.trivial,
    }
    ideals = []
    for A in idl.enumerate_ideals(R):
        C = idl.k_closure(R, A)
        ideals.append({"members": list(A.names), "k_ideal": C == A, "closure": list(C.names)})
    congruences = []
    for t in cg.enumerate_congruences(R):
        Z = cg.zero_class(R, t)
        congruences.append(
            {
                "classes": [list(c.names) for c in t.classes()],
                "k_congruence": cg.is_k_congruence(R, t),
                "zero_class": list(Z.names) if Z is not None else None,
            }
        )
    rep = cg.verify_bijection(R)
    assert rep.k_ideal_count == sum(i["k_ideal"] for i in ideals)
    assert rep.k_congruence_count == sum(c["k_congruence"] for c in congruences)
    return AnalysisReport(
        semiring={
            "name": R.name,
            "order": R.order,
            "elements": list(R.elements),
            "zero": R.elements[zero] if zero is not None else None,
            "identity": R.elements[one] if one is not None else None,
            "flags": flags,
        },
        ideals=ideals,
        congruences=congruences,
        bijection={
            "k_ideal_count": rep.k_ideal_count,
            "k_congruence_count": rep.k_congruence_count,
            "injective": rep.injective,
            "surjective": rep.surjective,
            "inclusion_preserved": rep.inclusion_preserved,
            "round_trips_ok": rep.round_trips_ok,
        },
        simplicity={
            "k_simple": idl.is_k_simple(R),
            "k_congruence_simple": cg.is_k_congruence_simple(R),
            "ideal_free": idl.is_ideal_free(R),
            "congruence_simple": cg.is_congruence_simple(R),
        },
    )
