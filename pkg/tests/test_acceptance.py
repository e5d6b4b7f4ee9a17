"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line straight to the terminal
(past pytest's capture) together with its wall time and the time budget.
"""

import time
from itertools import combinations

import pytest

from ksemiring import classify, congruence as cg, ideals as idl
from ksemiring.congruence import Partition
from ksemiring.ideals import ElementSubset
from ksemiring.kernel import extremal_elements, find_zero, is_additively_idempotent
from ksemiring.natsr import nat_contains, nat_ideal, nat_in_k_closure, nat_is_k_closed_upto, nat_sum
from ksemiring.oracles import combination_values
from ksemiring.specfmt import FIXTURES, load_fixture, zn_ring


@pytest.fixture
def criterion(capsys):
    """Run body(), print PASS/FAIL with timing, and fail on error or overrun."""

    def run(number, title, body, budget=None):
        start = time.perf_counter()
        error = None
        try:
            body()
        except Exception as exc:  # reported, then re-raised below
            error = exc
        took = time.perf_counter() - start
        if error is None and budget is not None and took > budget:
            error = AssertionError(f"took {took:.2f}s, budget {budget}s")
        status = "PASS" if error is None else "FAIL"
        limit = f" (budget {budget:g}s)" if budget is not None else ""
        with capsys.disabled():
            print(f"\n{status} criterion {number}: {title} [{took:.2f}s]{limit}")
        if error is not None:
            raise error

    return run


def fixtures():
    return {name: load_fixture(name) for name in FIXTURES}


def S(R, *names):
    return ElementSubset.of(R, names)


def test_criterion_01_figure_1_bourne_congruence(criterion):
    def body():
        R = load_fixture("fig1_example34")
        A = S(R, "0", "a")
        assert idl.is_ideal(R, A)
        t = cg.kappa(R, A)
        assert [c.names for c in t.classes()] == [("0", "a"), ("b", "c", "d", "1")]
        assert cg.is_k_congruence(R, t)

    criterion(1, "figure-1 semiring, kappa{0,a} classes and k-congruence", body, 1)


def test_criterion_02_figure_2_non_k_congruence(criterion):
    def body():
        R = load_fixture("fig2_example35")
        theta = Partition.from_classes(R, [["0"], ["a", "b", "c", "1"]])
        assert cg.is_congruence(R, theta)
        assert cg.zero_class(R, theta) == S(R, "0")
        assert not cg.is_k_congruence(R, theta)
        k0 = cg.kappa(R, S(R, "0"))
        assert not theta.refines(k0)
        a, b = R.index("a"), R.index("b")
        assert theta.related(a, b) and not k0.related(a, b)

    criterion(2, "figure-2 partition {0},{a,b,c,1} is a congruence but not a k-congruence", body, 1)


def test_criterion_03_three_criteria_agree(criterion):
    def body():
        checked = 0
        for R in fixtures().values():
            if R.order > 6:
                continue
            for t in cg.enumerate_congruences(R):
                c3 = cg.is_k_congruence(R, t)
                assert cg.k_congruence_by_inclusion(R, t) == c3, (R.name, t)
                assert cg.k_congruence_by_ideal_scan(R, t) == c3, (R.name, t)
                checked += 1
        assert checked > 0

    criterion(3, "k-congruence criteria agree on every fixture congruence", body, 10)


def test_criterion_04_bijection(criterion):
    def body():
        for R in fixtures().values():
            rep = cg.verify_bijection(R)
            assert rep.k_ideal_count == rep.k_congruence_count, R.name
            assert rep.injective and rep.surjective, R.name
            assert rep.inclusion_preserved and rep.round_trips_ok, R.name

    criterion(4, "kappa is an order isomorphism from k-ideals onto k-congruences", body, 10)


def test_criterion_05_closure_properties(criterion):
    def body():
        for R in fixtures().values():
            ideals = idl.enumerate_ideals(R)
            for A in ideals:
                C = idl.k_closure(R, A)
                assert A <= C
                assert idl.k_closure(R, C) == C
                assert cg.kappa(R, A) == cg.kappa(R, C)
                assert cg.zero_class(R, cg.kappa(R, A)) == C
                for B in ideals:
                    if A <= B:
                        assert C <= idl.k_closure(R, B)

    criterion(5, "closure is extensive, idempotent, monotone; kappa and zero class agree", body)


def test_criterion_06_zero_iff_identity_k(criterion):
    def body():
        pool = list(fixtures().values()) + classify.enumerate_semirings(2) + classify.enumerate_semirings(3)
        for R in pool:
            ident = Partition.identity(R)
            z = find_zero(R)
            assert (z is not None) == cg.is_k_congruence(R, ident), R.name
            if z is not None:
                assert cg.kappa(R, ElementSubset(R, 1 << z)) == ident

    criterion(6, "zero exists iff identity relation is a k-congruence", body)


def test_criterion_07_k_simple_iff_k_congruence_simple(criterion):
    def body():
        pool = list(fixtures().values()) + [R for k in (1, 2, 3) for R in classify.enumerate_semirings(k)]
        for R in pool:
            assert idl.is_k_simple(R) == cg.is_k_congruence_simple(R), R.name

    criterion(7, "k-simple iff k-congruence-simple", body)


def test_criterion_08_zn(criterion):
    def body():
        for n in range(2, 9):
            res = classify.corollary_4_5_check(zn_ring(n))
            assert res.consistent, n
            assert res.values() == (n in (2, 3, 5, 7),) * 6, n

    criterion(8, "six simplicity notions on Z_n agree and hold exactly for prime n", body, 5)


def test_criterion_09_incline_classification(criterion):
    def body():
        r0, r1 = load_fixture("r0"), load_fixture("r1")
        two = classify.enumerate_inclines(2)
        assert len(two) == 2
        want = {
            (classify.canonical_form(r).add, classify.canonical_form(r).mul) for r in (r0, r1)
        }
        got = {(classify.canonical_form(r).add, classify.canonical_form(r).mul) for r in two}
        assert got == want
        for R in two:
            assert idl.is_k_simple(R) and cg.is_congruence_simple(R) and idl.is_ideal_free(R)
        rep = classify.verify_theorem_5_4(4, (r0, r1))
        assert rep.ok, rep.failures
        for rec in rep.records:
            if rec.semiring.order >= 3:
                assert not rec.k_simple
                W = ElementSubset.of(rec.semiring, rec.witness)
                assert idl.is_k_ideal(rec.semiring, W)
                assert not idl.is_trivial_ideal(rec.semiring, W)

    criterion(9, "two 2-element inclines; no incline of order 3 or 4 is k-simple", body, 300)


def test_criterion_10_incline_extremes(criterion):
    def body():
        for k in (1, 2, 3, 4):
            for R in classify.enumerate_inclines(k):
                ext = extremal_elements(R)
                assert ext.greatest is not None and ext.least is not None, R.name

    criterion(10, "every incline of order <= 4 has a greatest and a least element", body)


def test_criterion_11_sum_of_ideals_of_naturals(criterion):
    def body():
        I = nat_sum(nat_ideal(2), nat_ideal(3))
        assert nat_contains(I, 6) and nat_contains(I, 7)
        assert not nat_contains(I, 1)
        assert nat_in_k_closure(I, 1)
        # the published witness: 1 + 6 = 7 with 6 and 7 in the ideal
        assert nat_contains(I, 6) and nat_contains(I, 1 + 6)
        assert nat_is_k_closed_upto(I, 100) == 1
        assert nat_is_k_closed_upto(nat_ideal(2), 100) is None
        assert nat_is_k_closed_upto(nat_ideal(3), 100) is None

    criterion(11, "(2)+(3) is not k-closed while (2) and (3) are", body, 1)


def test_criterion_12_single_summand(criterion):
    def body():
        seen = 0
        for R in fixtures().values():
            if not is_additively_idempotent(R):
                continue
            for A in idl.enumerate_ideals(R):
                assert cg.kappa_single(R, A) == cg.kappa(R, A), (R.name, str(A))
                seen += 1
        assert seen > 0

    criterion(12, "one shared summand suffices in additively idempotent fixtures", body)


def test_criterion_13_oracles(criterion):
    def body():
        for R in fixtures().values():
            if R.order > 5:
                continue
            for t in cg.enumerate_congruences(R):
                assert cg.is_k_congruence(R, t) == cg.k_congruence_by_ideal_scan(R, t)
        for size in (1, 2, 3):
            for gens in combinations(range(2, 10), size):
                I = nat_ideal(*gens)
                values = combination_values(gens, 200)
                for x in range(201):
                    assert nat_contains(I, x) == (x in values), (gens, x)

    criterion(13, "fast paths agree with ideal-scan and coefficient-enumeration oracles", body)
