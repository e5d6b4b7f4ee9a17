"""Named verification items run by ``ksemiring check-paper``.

Each item recomputes one published statement on the shipped fixtures and
on exhaustively enumerated small semirings, and reports PASS or FAIL.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import classify, congruence as cg, ideals as idl, kernel, natsr, oracles, specfmt
from .congruence import Partition
from .ideals import ElementSubset
from .kernel import FiniteSemiring


class CheckFailed(AssertionError):
    pass


def expect(cond: bool, message: str):
    if not cond:
        raise CheckFailed(message)


@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.id}: {self.title} ({self.detail}) [{self.seconds:.2f}s]"


@dataclass
class Context:
    fixtures_dir: Optional[Path] = None
    max_order: int = 4
    load_errors: dict[str, str] = field(default_factory=dict)

    @cached_property
    def fixtures(self) -> dict[str, FiniteSemiring]:
        out = {}
        for name in specfmt.FIXTURES:
            try:
                if self.fixtures_dir is None:
                    text = specfmt.fixture_text(name)
                else:
                    text = (self.fixtures_dir / f"{name}.txt").read_text("utf-8")
                out[name] = specfmt.parse_semiring(text)
            except (OSError, ValueError) as exc:
                self.load_errors[name] = f"{type(exc).__name__}: {exc}"
        return out

    def fixture(self, name: str) -> FiniteSemiring:
        fx = self.fixtures
        if name not in fx:
            raise CheckFailed(f"fixture {name} unavailable: {self.load_errors.get(name)}")
        return fx[name]

    def all_fixtures(self) -> dict[str, FiniteSemiring]:
        fx = self.fixtures
        expect(not self.load_errors, f"fixtures failed to load: {sorted(self.load_errors)}")
        return fx

    @cached_property
    def small_semirings(self) -> list[FiniteSemiring]:
        return [R for k in (2, 3) for R in classify.enumerate_semirings(k)]

    @cached_property
    def incline_report(self) -> classify.InclineReport:
        return classify.verify_theorem_5_4(
            self.max_order, (self.fixture("r0"), self.fixture("r1"))
        )


CheckFn = Callable[[Context], str]
REGISTRY: list[tuple[str, str, CheckFn]] = []


def check(id: str, title: str):
    def register(fn: CheckFn) -> CheckFn:
        REGISTRY.append((id, title, fn))
        return fn

    return register


def _subset(R, names):
    return ElementSubset.of(R, names)


@check("k-closure", "closure is extensive, idempotent, monotone; kappa(A) = kappa(closure A) = zero class")
def _closure_properties(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        ideals = idl.enumerate_ideals(R)
        closures = {A: idl.k_closure(R, A) for A in ideals}
        for A, C in closures.items():
            n += 1
            expect(A <= C, f"{name}: {A} not inside its closure")
            expect(idl.k_closure(R, C) == C, f"{name}: closure of {A} not idempotent")
            expect(idl.is_k_ideal(R, C), f"{name}: closure of {A} not a k-ideal")
            expect(cg.kappa(R, A) == cg.kappa(R, C), f"{name}: kappa differs on {A} and its closure")
            expect(cg.zero_class(R, cg.kappa(R, A)) == C, f"{name}: zero class of R/kappa({A}) is not its closure")
        for A in ideals:
            for B in ideals:
                if A <= B:
                    expect(closures[A] <= closures[B], f"{name}: closure not monotone on {A}, {B}")
    return f"{n} ideals"


@check("lemma-3.1", "the zero class of a quotient is a k-ideal")
def _lemma_3_1(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        for t in cg.enumerate_congruences(R):
            Z = cg.zero_class(R, t)
            if Z is not None:
                n += 1
                expect(idl.is_k_ideal(R, Z), f"{name}: zero class {Z} of {t} is not a k-ideal")
    return f"{n} quotients with zero"


@check("theorem-3.3", "three k-congruence criteria agree on every congruence")
def _theorem_3_3(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        if R.order > 6:
            continue
        for t in cg.enumerate_congruences(R):
            n += 1
            c1 = cg.k_congruence_by_ideal_scan(R, t)
            c2 = cg.k_congruence_by_inclusion(R, t)
            c3 = cg.is_k_congruence(R, t)
            expect(c1 == c2 == c3, f"{name}: criteria disagree on {t}: {c1}, {c2}, {c3}")
    return f"{n} congruences"


@check("example-3.4", "join-lattice semiring with kappa classes {0,a} and {1,b,c,d}")
def _example_3_4(ctx: Context) -> str:
    R = ctx.fixture("fig1_example34")
    A = _subset(R, ["0", "a"])
    expect(idl.is_ideal(R, A), "{0,a} is not an ideal")
    t = cg.kappa(R, A)
    expected = Partition.from_classes(R, [["0", "a"], ["1", "b", "c", "d"]])
    expect(t == expected, f"kappa classes are {t}")
    expect(cg.is_k_congruence(R, t), "kappa({0,a}) not a k-congruence")
    try:
        specfmt.semiring_from_lattice(specfmt.lattice_from_covers(_FIG1_COVERS, R.elements), "meet")
    except kernel.AxiomError:
        pass
    else:
        raise CheckFailed("the six-element lattice should not be distributive")
    return "classes {0,a} {b,c,d,1}"


_FIG1_COVERS = [("0", "a"), ("0", "d"), ("d", "b"), ("d", "c"), ("a", "1"), ("b", "1"), ("c", "1")]


@check("example-3.5", "congruence {0},{a,b,c,1} is not a k-congruence")
def _example_3_5(ctx: Context) -> str:
    R = ctx.fixture("fig2_example35")
    t = Partition.from_classes(R, [["0"], ["a", "b", "c", "1"]])
    expect(cg.is_congruence(R, t), "theta is not a congruence")
    Z = cg.zero_class(R, t)
    expect(Z == _subset(R, ["0"]), f"zero class is {Z}")
    expect(not cg.is_k_congruence(R, t), "theta is a k-congruence")
    k0 = cg.kappa(R, Z)
    a, b = R.index("a"), R.index("b")
    expect(t.related(a, b) and not k0.related(a, b), "pair (a, b) does not witness theta outside kappa({0})")
    return "witness (a, b)"


@check("lemma-3.6", "kappa(iota(theta)) = theta on k-congruences")
def _lemma_3_6(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        for t in cg.enumerate_k_congruences(R):
            n += 1
            expect(cg.kappa(R, cg.iota(R, t)) == t, f"{name}: round trip fails on {t}")
    return f"{n} k-congruences"


@check("lemma-3.7", "an ideal A is a k-ideal iff iota(kappa(A)) = A")
def _lemma_3_7(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        for A in idl.enumerate_ideals(R):
            n += 1
            back = cg.iota(R, cg.kappa(R, A))
            expect(idl.is_k_ideal(R, A) == (back == A), f"{name}: fails on {A}")
    return f"{n} ideals"


@check("theorem-3.8", "kappa is an inclusion-preserving bijection from k-ideals onto k-congruences")
def _theorem_3_8(ctx: Context) -> str:
    parts = []
    for name, R in ctx.all_fixtures().items():
        rep = cg.verify_bijection(R)
        expect(rep.ok, f"{name}: {rep}")
        # only the k-ideals make kappa injective among families containing them
        ideals = idl.enumerate_ideals(R)
        kis = [A for A in ideals if idl.is_k_ideal(R, A)]
        extras = [A for A in ideals if A not in kis]
        expect(cg.kappa_injectivity_probe(R, kis) is None, f"{name}: kappa not injective on k-ideals")
        for A in extras:
            expect(cg.kappa_injectivity_probe(R, kis + [A]) is not None, f"{name}: no collision for {A}")
        parts.append(f"{name} {rep.k_ideal_count}={rep.k_congruence_count}")
    return ", ".join(parts)


@check("remark-3.9", "in additively idempotent semirings one shared summand suffices")
def _remark_3_9(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        if not kernel.is_additively_idempotent(R):
            continue
        for A in idl.enumerate_ideals(R):
            n += 1
            expect(cg.kappa(R, A) == cg.kappa_single(R, A), f"{name}: encodings differ on {A}")
    return f"{n} ideals"


@check("remark-4.1", "kappa(R) is universal; the identity need not be a k-congruence")
def _remark_4_1(ctx: Context) -> str:
    for name, R in ctx.all_fixtures().items():
        expect(cg.kappa(R, ElementSubset.full(R)) == Partition.universal(R), f"{name}: kappa(R) not universal")
        expect(cg.is_k_congruence(R, Partition.universal(R)), f"{name}: universal not a k-congruence")
    R = ctx.fixture("maxmax2")
    expect(not cg.is_k_congruence(R, Partition.identity(R)), "identity is a k-congruence on maxmax2")
    return "identity fails on maxmax2"


@check("theorem-4.2", "R has a zero iff the identity relation is a k-congruence")
def _theorem_4_2(ctx: Context) -> str:
    pool = list(ctx.all_fixtures().values()) + ctx.small_semirings
    with_zero = 0
    for R in pool:
        expect(cg.has_zero_iff_identity_k(R), f"{R.name}: biconditional fails")
        z = kernel.find_zero(R)
        if z is not None:
            with_zero += 1
            expect(cg.kappa(R, ElementSubset(R, 1 << z)) == Partition.identity(R), f"{R.name}: kappa({{0}}) != id")
    return f"{len(pool)} semirings, {with_zero} with zero"


@check("simplicity-implications", "congruence-simple implies k-congruence-simple; ideal-free implies k-simple")
def _implications(ctx: Context) -> str:
    pool = list(ctx.all_fixtures().values()) + ctx.small_semirings
    for R in pool:
        if cg.is_congruence_simple(R):
            expect(cg.is_k_congruence_simple(R), f"{R.name}: congruence-simple but not k-congruence-simple")
        if idl.is_ideal_free(R):
            expect(idl.is_k_simple(R), f"{R.name}: ideal-free but not k-simple")
    return f"{len(pool)} semirings"


@check("theorem-4.4", "k-simple iff k-congruence-simple")
def _theorem_4_4(ctx: Context) -> str:
    pool = list(ctx.all_fixtures().values()) + ctx.small_semirings
    simple = 0
    for R in pool:
        a, b = idl.is_k_simple(R), cg.is_k_congruence_simple(R)
        expect(a == b, f"{R.name}: k-simple={a}, k-congruence-simple={b}")
        simple += a
    return f"{len(pool)} semirings, {simple} k-simple"


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


@check("corollary-4.5", "for Z_n the six simplicity notions agree and hold exactly for prime n")
def _corollary_4_5(ctx: Context) -> str:
    primes = []
    for n in range(2, 9):
        res = classify.corollary_4_5_check(specfmt.zn_ring(n))
        expect(res.consistent, f"Z{n}: {res}")
        expect(res.k_simple == _is_prime(n), f"Z{n}: simple={res.k_simple}")
        if res.k_simple:
            primes.append(n)
    return f"simple for n in {primes}"


@check("lemma-5.1", "every incline has a greatest and a least element")
def _lemma_5_1(ctx: Context) -> str:
    rep = ctx.incline_report
    for r in rep.records:
        expect(r.greatest is not None and r.least is not None, f"{r.semiring.name}: missing bound")
    pool = [R for R in ctx.all_fixtures().values() if kernel.is_incline(R)]
    for R in pool:
        ext = kernel.extremal_elements(R)
        expect(ext.greatest is not None and ext.least is not None, f"{R.name}: missing bound")
    return f"{len(rep.records)} enumerated inclines, {len(pool)} fixtures"


@check("lemma-5.2", "inclines with at least 3 elements have a nontrivial k-ideal")
def _lemma_5_2(ctx: Context) -> str:
    rep = ctx.incline_report
    big = [r for r in rep.records if r.semiring.order >= 3]
    for r in big:
        expect(r.witness is not None and not r.k_simple, f"{r.semiring.name}: no witness")
    return f"{len(big)} inclines of order 3..{rep.max_order}"


@check("example-5.3", "exactly two 2-element inclines, r0 and r1, both simple in every sense")
def _example_5_3(ctx: Context) -> str:
    r0, r1 = ctx.fixture("r0"), ctx.fixture("r1")
    found = classify.enumerate_inclines(2)
    expect(len(found) == 2, f"{len(found)} two-element inclines")
    keys = sorted(classify.canonical_key(R) for R in found)
    expect(keys == sorted([classify.canonical_key(r0), classify.canonical_key(r1)]), "tables differ from r0, r1")
    for R in (r0, r1):
        expect(kernel.is_incline(R), f"{R.name} is not an incline")
        expect(idl.is_k_simple(R) and cg.is_congruence_simple(R) and idl.is_ideal_free(R), f"{R.name} not simple")
    return "r0, r1"


@check("theorem-5.4", "the only k-simple inclines are r0 and r1")
def _theorem_5_4(ctx: Context) -> str:
    rep = ctx.incline_report
    expect(rep.ok, "; ".join(rep.failures))
    expect(rep.k_simple_counts.get(2) == 2, f"order 2: {rep.k_simple_counts.get(2)} k-simple")
    counts = ", ".join(f"order {k}: {n} inclines, {rep.k_simple_counts[k]} k-simple" for k, n in rep.counts.items())
    return counts


@check("example-6.1", "(2)+(3) is not subtractive in the nonnegative integers")
def _example_6_1(ctx: Context) -> str:
    I = natsr.nat_sum(natsr.nat_ideal(2), natsr.nat_ideal(3))
    expect(natsr.nat_contains(I, 6) and natsr.nat_contains(I, 7), "6 or 7 missing")
    expect(not natsr.nat_contains(I, 1), "1 is a member")
    expect(natsr.nat_in_k_closure(I, 1), "1 not in the closure")
    expect(natsr.nat_contains(I, 6) and natsr.nat_contains(I, 1 + 6), "a = 6 is not a witness")
    expect(natsr.nat_is_k_closed_upto(I, 100) == 1, "violation is not x = 1")
    for n in (2, 3):
        expect(natsr.nat_is_k_closed_upto(natsr.nat_ideal(n), 100) is None, f"({n}) not k-closed")
    return "1 + 6 = 7"


@check("oracle-agreement", "fast paths agree with brute-force oracles")
def _oracles(ctx: Context) -> str:
    n = 0
    for name, R in ctx.all_fixtures().items():
        if R.order > 5:
            continue
        for t in cg.enumerate_congruences(R):
            n += 1
            expect(cg.is_k_congruence(R, t) == cg.k_congruence_by_ideal_scan(R, t), f"{name}: {t}")
    sets = [g for size in (1, 2, 3) for g in combinations(range(2, 10), size)]
    for gens in sets:
        I = natsr.NatIdeal(gens)
        members = oracles.combination_values(gens, 200)
        for x in range(201):
            expect(natsr.nat_contains(I, x) == (x in members), f"{gens}: membership of {x}")
    return f"{n} congruences, {len(sets)} generator sets"


def check_ids() -> list[str]:
    return [cid for cid, _, _ in REGISTRY]


def run_checks(
    only: Iterable[str] | None = None,
    fixtures_dir: str | Path | None = None,
    max_order: int = 4,
) -> list[CheckResult]:
    only = list(only or [])
    unknown = set(only) - set(check_ids())
    if unknown:
        raise KeyError(f"unknown check ids: {sorted(unknown)}")
    ctx = Context(Path(fixtures_dir) if fixtures_dir else None, max_order)
    results = []
    for cid, title, fn in REGISTRY:
        if only and cid not in only:
            continue
        start = time.perf_counter()
        try:
            detail, ok = fn(ctx), True
        except CheckFailed as exc:
            detail, ok = str(exc), False
        except Exception as exc:  # a crash is a failed check, not a crashed run
            detail, ok = f"{type(exc).__name__}: {exc}", False
        results.append(CheckResult(cid, title, ok, detail, time.perf_counter() - start))
    return results
