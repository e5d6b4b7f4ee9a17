import pytest

from ksemiring.congruence import (
    Congruence,
    Partition,
    as_congruence,
    canonical_labels,
    enumerate_congruences,
    enumerate_k_congruences,
    has_zero_iff_identity_k,
    iota,
    is_congruence,
    is_congruence_simple,
    is_k_congruence,
    is_k_congruence_simple,
    k_congruence_by_ideal_scan,
    k_congruence_by_inclusion,
    kappa,
    kappa_injectivity_probe,
    kappa_single,
    quotient,
    restricted_growth_strings,
    verify_bijection,
    zero_class,
)
from ksemiring.ideals import ElementSubset, enumerate_ideals
from ksemiring.kernel import PreconditionError, ScanLimitError, find_zero
from ksemiring.specfmt import zn_ring


def S(R, *names):
    return ElementSubset.of(R, names)


def set_partitions(items):
    """Independent partition generator: insert the first item everywhere."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def brute_congruences(R):
    out = set()
    n = range(R.order)
    for p in set_partitions(list(n)):
        lab = [0] * R.order
        for c, block in enumerate(p):
            for x in block:
                lab[x] = c
        ok = all(
            lab[R.add[x][z]] == lab[R.add[y][z]]
            and lab[R.mul[x][z]] == lab[R.mul[y][z]]
            and lab[R.mul[z][x]] == lab[R.mul[z][y]]
            for x in n
            for y in n
            if lab[x] == lab[y]
            for z in n
        )
        if ok:
            out.add(canonical_labels(lab))
    return out


def brute_kappa(R, A):
    n = range(R.order)
    return [[any(R.add[x][a] == R.add[y][b] for a in A for b in A) for y in n] for x in n]


def classes(t):
    return [c.names for c in t.classes()]


@pytest.mark.parametrize("k,bell", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)])
def test_restricted_growth_strings_count_bell_numbers(k, bell):
    strings = list(restricted_growth_strings(k))
    assert len(strings) == bell
    assert strings == sorted(strings)
    assert all(canonical_labels(s) == s for s in strings)


def test_partition_equality_ignores_labels(fig1):
    p = Partition(fig1, [5, 5, 7, 7, 7, 9])
    q = Partition.from_classes(fig1, [["0", "a"], ["b", "c", "d"], ["1"]])
    assert p == q and hash(p) == hash(q)
    assert p.num_classes == 3
    assert p.refines(Partition.universal(fig1))
    assert Partition.identity(fig1).refines(p)
    with pytest.raises(ValueError):
        Partition.from_classes(fig1, [["0", "a"], ["a"]])
    with pytest.raises(ValueError):
        Partition.from_classes(fig1, [["0"]])


@pytest.mark.parametrize("name", ["fig1_example34", "fig2_example35", "r0", "r1", "chain3", "maxmax2", "trunc3"])
def test_congruences_match_brute_force(fixtures, name):
    R = fixtures[name]
    assert {t.class_of for t in enumerate_congruences(R)} == brute_congruences(R)


@pytest.mark.parametrize("name", ["fig1_example34", "fig2_example35", "chain3", "trunc3", "upper_tri_bool2"])
def test_kappa_matches_definition(fixtures, name):
    R = fixtures[name]
    for A in enumerate_ideals(R):
        t = kappa(R, A)
        rel = brute_kappa(R, A.members)
        assert all(rel[x][y] == t.related(x, y) for x in range(R.order) for y in range(R.order))


def test_bourne_classes_on_figure_one_lattice(fig1):
    t = kappa(fig1, S(fig1, "0", "a"))
    assert classes(t) == [("0", "a"), ("b", "c", "d", "1")]
    assert is_k_congruence(fig1, t)


def test_congruence_with_zero_class_that_is_not_k(fig2):
    theta = Partition.from_classes(fig2, [["0"], ["a", "b", "c", "1"]])
    assert is_congruence(fig2, theta)
    assert zero_class(fig2, theta) == S(fig2, "0")
    assert not is_k_congruence(fig2, theta)
    k0 = kappa(fig2, S(fig2, "0"))
    a, b = fig2.index("a"), fig2.index("b")
    assert theta.related(a, b) and not k0.related(a, b)


def test_pinned_congruence_counts(fig1, fig2, maxmax2):
    assert len(enumerate_congruences(fig1)) == 15
    assert len(enumerate_congruences(fig2)) == 8
    assert len(enumerate_k_congruences(fig2)) == 5
    assert len(enumerate_congruences(zn_ring(4))) == 3
    assert enumerate_k_congruences(maxmax2) == [Partition.universal(maxmax2)]


def test_quotient_by_kappa(fig1):
    q = quotient(fig1, kappa(fig1, S(fig1, "0", "a")))
    Q = q.quotient
    assert Q.elements == ("[0]", "[b]")
    assert q.projection == (0, 0, 1, 1, 1, 1)
    assert find_zero(Q) == 0
    assert q.cls(1) == S(fig1, "b", "c", "d", "1")


def test_quotient_rejects_non_congruence(fig2):
    bad = Partition.from_classes(fig2, [["0", "a"], ["b", "c", "1"]])
    assert not is_congruence(fig2, bad)
    with pytest.raises(PreconditionError):
        quotient(fig2, bad)
    with pytest.raises(PreconditionError):
        as_congruence(fig2, bad)


def test_zero_free_quotient_has_no_zero_class(maxmax2):
    assert zero_class(maxmax2, Partition.identity(maxmax2)) is None
    assert not is_k_congruence(maxmax2, Partition.identity(maxmax2))


@pytest.mark.parametrize(
    "name", ["fig1_example34", "fig2_example35", "r0", "r1", "chain3", "maxmax2", "trunc3", "upper_tri_bool2"]
)
def test_three_criteria_agree(fixtures, name):
    R = fixtures[name]
    for t in enumerate_congruences(R):
        crit = is_k_congruence(R, t)
        assert k_congruence_by_inclusion(R, t) == crit
        assert k_congruence_by_ideal_scan(R, t) == crit


@pytest.mark.parametrize(
    "name", ["fig1_example34", "fig2_example35", "r0", "r1", "chain3", "maxmax2", "trunc3", "upper_tri_bool2"]
)
def test_bijection(fixtures, name):
    rep = verify_bijection(fixtures[name])
    assert rep.ok


def test_bijection_on_z6():
    rep = verify_bijection(zn_ring(6))
    assert rep.ok and rep.k_ideal_count == 4


def test_iota_requires_k_congruence(fig2):
    theta = Partition.from_classes(fig2, [["0"], ["a", "b", "c", "1"]])
    with pytest.raises(PreconditionError):
        iota(fig2, theta)


def test_kappa_not_injective_on_all_ideals(trunc3, fig2):
    A, B = kappa_injectivity_probe(trunc3)
    assert A == S(trunc3, "0", "2") and B == ElementSubset.full(trunc3)
    assert kappa(trunc3, A) == kappa(trunc3, B)
    assert kappa_injectivity_probe(fig2) is None


def test_single_summand_kappa_in_idempotent_fixtures(fixtures):
    for R in fixtures.values():
        if not all(R.add[i][i] == i for i in range(R.order)):
            continue
        for A in enumerate_ideals(R):
            assert kappa_single(R, A) == kappa(R, A)


def test_zero_iff_identity_is_k(fixtures):
    for R in fixtures.values():
        assert has_zero_iff_identity_k(R)
        z = find_zero(R)
        if z is not None:
            assert kappa(R, ElementSubset(R, 1 << z)) == Partition.identity(R)


def test_universal_is_kappa_of_whole(fig1):
    assert kappa(fig1, ElementSubset.full(fig1)) == Partition.universal(fig1)


def test_congruence_simplicity(r0, r1, fig1):
    for R in (r0, r1, zn_ring(5)):
        assert is_congruence_simple(R)
        assert is_k_congruence_simple(R)
    assert not is_congruence_simple(zn_ring(4))
    assert not is_k_congruence_simple(fig1)


def test_identity_not_k_but_k_congruence_simple(maxmax2):
    # only the universal relation is a k-congruence here
    assert is_k_congruence_simple(maxmax2)


def test_congruence_scan_limit():
    with pytest.raises(ScanLimitError):
        enumerate_congruences(zn_ring(10))


def test_congruence_subclass(fig1):
    for t in enumerate_congruences(fig1):
        assert isinstance(t, Congruence)
