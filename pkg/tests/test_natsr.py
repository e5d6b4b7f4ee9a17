from itertools import combinations

import pytest

from ksemiring.natsr import (
    MAX_VALUE,
    NatIdeal,
    RangeError,
    nat_contains,
    nat_ideal,
    nat_in_k_closure,
    nat_is_k_closed_upto,
    nat_k_closure_witness,
    nat_sum,
)
from ksemiring.oracles import combination_values, in_closure_by_gcd

GEN_SETS = [c for size in (1, 2, 3) for c in combinations(range(2, 10), size)]


def test_generators_normalised():
    assert nat_ideal(6, 4, 4, 10, 8).generators == (4, 6)
    assert nat_ideal(3, 2, 6, 7).generators == (2, 3)
    assert str(nat_ideal(3, 2)) == "(2)+(3)"
    with pytest.raises(ValueError):
        NatIdeal(())
    with pytest.raises(ValueError):
        nat_ideal(0, 3)


def test_sum_of_two_and_three_is_not_k_closed():
    I = nat_sum(nat_ideal(2), nat_ideal(3))
    assert nat_contains(I, 6) and nat_contains(I, 7)
    assert not nat_contains(I, 1)
    assert nat_in_k_closure(I, 1)
    assert nat_k_closure_witness(I, 1) == 2  # least witness; 1 + 6 = 7 works too
    assert nat_is_k_closed_upto(I, 100) == 1
    assert nat_is_k_closed_upto(nat_ideal(2), 100) is None
    assert nat_is_k_closed_upto(nat_ideal(3), 100) is None


@pytest.mark.parametrize("gens", GEN_SETS)
def test_membership_matches_coefficient_enumeration(gens):
    I = NatIdeal(gens)
    values = combination_values(gens, 200)
    assert [nat_contains(I, x) for x in range(201)] == [x in values for x in range(201)]


@pytest.mark.parametrize("gens", [(2, 3), (4, 6), (6, 10, 15), (5, 7), (4, 9), (6, 9), (3, 8, 9)])
def test_closure_is_multiples_of_gcd(gens):
    I = NatIdeal(gens)
    for x in range(201):
        assert nat_in_k_closure(I, x) == in_closure_by_gcd(gens, x)


def test_witness_is_genuine():
    I = nat_ideal(4, 6)
    for x in range(0, 60, 2):
        a = nat_k_closure_witness(I, x)
        assert nat_contains(I, a) and nat_contains(I, x + a)
    assert nat_k_closure_witness(I, 3) is None


@pytest.mark.parametrize("n", range(1, 13))
def test_principal_ideals_are_k_closed(n):
    assert nat_is_k_closed_upto(nat_ideal(n), 120) is None


@pytest.mark.parametrize("gens,conductor", [((2, 3), 2), ((4, 6), 4), ((6, 10, 15), 30), ((3, 5), 8), ((1,), 0), ((5,), 0)])
def test_conductor(gens, conductor):
    I = NatIdeal(gens)
    c = I.conductor()
    assert c == conductor
    g = I.gcd
    assert all(nat_contains(I, m) for m in range(c, c + 50 * g, g))
    if c:
        assert not nat_contains(I, c - g)


def test_range_checks():
    I = nat_ideal(2, 3)
    with pytest.raises(RangeError):
        nat_contains(I, -1)
    with pytest.raises(RangeError):
        nat_contains(I, MAX_VALUE + 1)
    with pytest.raises(RangeError):
        nat_is_k_closed_upto(I, -5)
