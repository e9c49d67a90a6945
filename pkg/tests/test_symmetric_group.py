import itertools
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from kimura.partitions import Partition, enumerate_partitions, irrep_dimension
from kimura.symmetric_group import (
    GroupAlgebraElement,
    Permutation,
    ResourceLimitError,
    _multiply_dense,
    _multiply_sparse,
    class_size,
    character,
    ga_multiply,
    lr_coefficient,
    verify_idempotent_system,
    young_idempotent,
)

import oracles


# --- permutations ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_rank_is_lexicographic_index(n):
    for r, imgs in enumerate(itertools.permutations(range(1, n + 1))):
        p = Permutation(imgs)
        assert p.rank() == r
        assert Permutation.from_rank(n, r) == p


def test_permutation_basics():
    s = Permutation.from_cycles(4, (1, 2, 3))
    assert s.images == (2, 3, 1, 4)
    assert s.cycle_type() == Partition([3, 1])
    assert s.sign() == 1
    assert s * s.inverse() == Permutation.identity(4)
    t = Permutation.from_cycles(4, (1, 2))
    # functions compose right to left
    assert (s * t)(1) == s(t(1))
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


# --- characters -----------------------------------------------------------------

def test_character_examples():
    for n in range(1, 7):
        for mu in enumerate_partitions(n):
            assert character([n], mu) == 1
            assert character([1] * n, mu) == (-1) ** (n - len(mu))
    assert character([2, 1], [3]) == -1


def test_character_21_on_3cycle_by_standard_rep_trace():
    three_cycle = (1, 2, 0)
    assert oracles.cycle_type(three_cycle) == (3,)
    assert oracles.standard_rep_trace(three_cycle) == -1 == character([2, 1], [3])
    # whole class function of the standard rep of S_4
    for perm in itertools.permutations(range(4)):
        assert character([3, 1], oracles.cycle_type(perm)) == oracles.standard_rep_trace(perm)


@pytest.mark.parametrize("n", range(1, 7))
def test_character_matches_frobenius_formula(n):
    for lam in enumerate_partitions(n):
        for mu in enumerate_partitions(n):
            assert character(lam, mu) == oracles.frobenius_character(lam, mu)


def test_character_weight_mismatch():
    with pytest.raises(ValueError):
        character([2, 1], [2])


@pytest.mark.parametrize("n", range(1, 8))
def test_identity_value_and_column_orthogonality(n):
    shapes = enumerate_partitions(n)
    for lam in shapes:
        assert character(lam, [1] * n) == irrep_dimension(lam)
    for mu in shapes:
        assert sum(character(lam, mu) ** 2 for lam in shapes) * class_size(mu) == factorial(n)


# --- group algebra --------------------------------------------------------------

def _to_plain(x: GroupAlgebraElement):
    return {tuple(i - 1 for i in p.images): c for p, c in x.items()}


def _random_element(rng, n, k):
    perms = rng.sample(list(itertools.permutations(range(1, n + 1))), k)
    return GroupAlgebraElement.from_perms(
        n, {Permutation(p): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for p in perms})


def test_multiply_examples():
    tau = Permutation.from_cycles(3, (1, 2))
    one = GroupAlgebraElement.identity(3)
    t = GroupAlgebraElement.basis(tau)
    y = _random_element(random.Random(1), 3, 4)
    assert one * y == y
    assert ga_multiply(one - t, one + t) == GroupAlgebraElement(3)
    with pytest.raises(ValueError):
        ga_multiply(one, GroupAlgebraElement.identity(2))


@pytest.mark.parametrize("seed", range(10))
def test_multiply_matches_naive_convolution(seed):
    rng = random.Random(seed)
    n = 4
    x = _random_element(rng, n, rng.randint(1, 24))
    y = _random_element(rng, n, rng.randint(1, 24))
    expected = oracles.naive_multiply(_to_plain(x), _to_plain(y))
    assert _to_plain(ga_multiply(x, y)) == expected
    # both internal paths agree
    assert _multiply_dense(x, y) == _multiply_sparse(x, y)


def test_zero_terms_dropped():
    x = GroupAlgebraElement(3, {0: 0, 1: Fraction(1, 2)})
    assert len(x) == 1
    assert (x - x).terms == {}


# --- idempotents ----------------------------------------------------------------

def test_idempotent_examples_s2():
    tau = Permutation.from_cycles(2, (1, 2))
    half = Fraction(1, 2)
    e_sym = GroupAlgebraElement.from_perms(2, {Permutation.identity(2): half, tau: half})
    e_alt = GroupAlgebraElement.from_perms(2, {Permutation.identity(2): half, tau: -half})
    assert young_idempotent([2]) == e_sym
    assert young_idempotent([1, 1]) == e_alt


def test_idempotent_identity_coefficient_21():
    e = young_idempotent([2, 1])
    # direct summation: dim/3! * chi(id) = 2/6 * 2
    direct = Fraction(2, 6) * oracles.frobenius_character((2, 1), (1, 1, 1))
    assert e.coefficient(Permutation.identity(3)) == direct == Fraction(2, 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_idempotent_matches_naive_construction(n):
    for lam in enumerate_partitions(n):
        naive = oracles.naive_idempotent(tuple(lam), n, oracles.frobenius_character)
        assert _to_plain(young_idempotent(lam)) == {k: v for k, v in naive.items() if v}


@pytest.mark.parametrize("n", range(1, 8))
def test_identity_coefficient_formula(n):
    for lam in enumerate_partitions(n):
        e = young_idempotent(lam)
        assert e.coefficient(Permutation.identity(n)) == Fraction(irrep_dimension(lam) ** 2, factorial(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_centrality(n):
    rng = random.Random(n)
    for lam in enumerate_partitions(n):
        e = young_idempotent(lam)
        for _ in range(3):
            s = GroupAlgebraElement.basis(Permutation(tuple(rng.sample(range(1, n + 1), n))))
            assert e * s == s * e


def test_idempotent_system_small_reports():
    r1 = verify_idempotent_system(1)
    assert r1["passed"] and {c["kind"] for c in r1["checks"]} == {"idem", "complete"}
    r5 = verify_idempotent_system(5)
    assert r5["passed"]
    assert len(r5["checks"]) == 7 * 7 + 1
    assert sum(c["kind"] == "idem" for c in r5["checks"]) == 7


def test_idempotent_system_naive_oracle_s3():
    # independent arithmetic: naive dict convolution on naive idempotents
    shapes = [(3,), (2, 1), (1, 1, 1)]
    es = {lam: oracles.naive_idempotent(lam, 3, oracles.frobenius_character) for lam in shapes}
    for a in shapes:
        for b in shapes:
            prod_ = oracles.naive_multiply(es[a], es[b])
            assert prod_ == ({k: v for k, v in es[a].items() if v} if a == b else {})


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        verify_idempotent_system(5, max_n=4)
    with pytest.raises(ValueError):
        verify_idempotent_system(0)


def test_env_override(monkeypatch):
    monkeypatch.setenv("KIMURA_MAX_N", "3")
    with pytest.raises(ResourceLimitError):
        verify_idempotent_system(4)


# --- Littlewood-Richardson ------------------------------------------------------

def test_lr_examples():
    assert lr_coefficient([3, 1], [3, 1], []) == 1
    assert lr_coefficient([2, 1], [2], [1]) == 1
    assert lr_coefficient([2, 1], [1, 1], [1]) == 1
    assert lr_coefficient([3, 2, 1], [2, 1], [2, 1]) == 2
    with pytest.raises(ValueError):
        lr_coefficient([3], [2], [2])


@pytest.mark.parametrize("n", range(1, 7))
def test_lr_matches_character_inner_product(n):
    for lam in enumerate_partitions(n):
        for k in range(n + 1):
            for mu in enumerate_partitions(k):
                for nu in enumerate_partitions(n - k):
                    got = lr_coefficient(lam, mu, nu)
                    assert got == lr_coefficient(lam, nu, mu)
                    if 0 < k < n and n <= 5:
                        assert got == oracles.lr_by_characters(tuple(lam), tuple(mu), tuple(nu), character)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_partitions(n)), st.integers(0, n)).flatmap(
    lambda t: st.tuples(st.just(t[0]), st.sampled_from(enumerate_partitions(t[1])),
                        st.sampled_from(enumerate_partitions(n - t[1]))))))
def test_lr_symmetry_property(triple):
    lam, mu, nu = triple
    assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)
