import math

import pytest
from hypothesis import given, strategies as st

import oracles
from plethy import (
    EMPTY,
    PartitionError,
    boxplus,
    centralizer_order,
    check_partition,
    conjugate,
    format_partition,
    multiplicity,
    multiplicity_pattern,
    parse_partition,
    partitions_of,
    scale,
    sort_key,
    union,
    union_power,
)

partitions = st.integers(min_value=0, max_value=10).flatmap(
    lambda n: st.sampled_from(partitions_of(n))
)


class TestPartitionsOf:
    def test_zero(self):
        assert partitions_of(0) == [()]

    def test_three(self):
        assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]

    def test_five_has_seven(self):
        assert len(partitions_of(5)) == 7

    def test_counts_match_brute_force(self):
        for n in range(21):
            assert len(partitions_of(n)) == oracles.count_partitions(n)

    def test_descending_lexicographic(self):
        for n in range(9):
            parts = partitions_of(n)
            assert parts == sorted(parts, reverse=True)
            assert len(set(parts)) == len(parts)
            assert all(sum(mu) == n for mu in parts)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            partitions_of(-1)


class TestBasics:
    def test_multiplicity(self):
        assert multiplicity((2, 1), 1) == 1
        assert multiplicity((2, 2, 2, 2), 2) == 4
        assert multiplicity((3,), 2) == 0

    def test_centralizer_order(self):
        assert centralizer_order((1, 1, 1)) == 6
        assert centralizer_order((2, 1)) == 2
        assert centralizer_order((4, 2)) == 8
        assert centralizer_order(EMPTY) == 1

    def test_class_sizes_partition_the_group(self):
        for n in range(13):
            assert sum(math.factorial(n) // centralizer_order(mu) for mu in partitions_of(n)) == math.factorial(n)

    @given(partitions)
    def test_class_size_is_integer(self, mu):
        n = sum(mu)
        assert math.factorial(n) % centralizer_order(mu) == 0

    def test_check_partition_rejects_bad_input(self):
        with pytest.raises(PartitionError):
            check_partition((1, 2))
        with pytest.raises(PartitionError):
            check_partition((2, 0))
        with pytest.raises(PartitionError):
            check_partition((2, -1))
        assert check_partition([3, 1, 1]) == (3, 1, 1)


class TestBoxplusScale:
    def test_boxplus_examples(self):
        assert boxplus((1,), 2) == (2, 2)
        assert boxplus((2, 1), 2) == (4, 4, 2, 2)

    @given(partitions)
    def test_boxplus_identity(self, lam):
        assert boxplus(lam, 1) == lam

    @given(partitions, st.integers(min_value=1, max_value=4))
    def test_boxplus_size_and_multiplicities(self, lam, d):
        big = boxplus(lam, d)
        assert sum(big) == d * d * sum(lam)
        for i in set(lam):
            assert multiplicity(big, i * d) == d * multiplicity(lam, i)
        assert all(part % d == 0 for part in big)

    def test_scale_examples(self):
        assert scale((2, 1), 3) == (6, 3)
        assert scale((1, 1), 2) == (2, 2)

    @given(partitions, st.integers(min_value=1, max_value=4))
    def test_scale_postconditions(self, lam, d):
        scaled = scale(lam, d)
        assert scaled == tuple(d * part for part in lam)
        assert sum(scaled) == d * sum(lam)
        assert scale(lam, 1) == lam


class TestUnion:
    def test_examples(self):
        assert union((2, 1), (3, 1)) == (3, 2, 1, 1)
        assert union(EMPTY, (5, 2)) == (5, 2)
        assert union_power((2, 1), 2) == (2, 2, 1, 1)

    @given(partitions, partitions)
    def test_commutative_and_sizes_add(self, mu, nu):
        assert union(mu, nu) == union(nu, mu)
        assert sum(union(mu, nu)) == sum(mu) + sum(nu)

    @given(partitions, partitions, partitions)
    def test_associative(self, mu, nu, rho):
        assert union(union(mu, nu), rho) == union(mu, union(nu, rho))

    @given(partitions)
    def test_identity(self, mu):
        assert union(mu, EMPTY) == mu

    @given(partitions, st.integers(min_value=1, max_value=4))
    def test_union_power_matches_iterated_union(self, mu, d):
        out = EMPTY
        for _ in range(d):
            out = union(out, mu)
        assert union_power(mu, d) == out


class TestMultiplicityPattern:
    def test_paper_tuple(self):
        tup = ((2, 1), (3,), (1, 1, 1), (3,), (2, 1))
        assert multiplicity_pattern(tup) == (2, 2, 1)

    def test_constant_tuple(self):
        assert multiplicity_pattern(((2, 1),) * 4) == (4,)

    def test_distinct_entries(self):
        assert multiplicity_pattern(((3,), (2, 1), (1, 1, 1))) == (1, 1, 1)

    @given(st.lists(partitions, min_size=1, max_size=6), st.randoms())
    def test_reorder_invariant(self, tup, rng):
        shuffled = list(tup)
        rng.shuffle(shuffled)
        assert multiplicity_pattern(tuple(shuffled)) == multiplicity_pattern(tuple(tup))

    def test_empty_tuple_rejected(self):
        with pytest.raises(ValueError):
            multiplicity_pattern(())


class TestConjugate:
    def test_examples(self):
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate((4,)) == (1, 1, 1, 1)
        assert conjugate(EMPTY) == EMPTY

    @given(partitions)
    def test_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert sum(conjugate(lam)) == sum(lam)


class TestTextForm:
    def test_parse_examples(self):
        assert parse_partition("4,4,2,2") == (4, 4, 2, 2)
        assert parse_partition("") == EMPTY
        assert parse_partition(" 3 , 1 ") == (3, 1)

    @given(partitions)
    def test_round_trip(self, mu):
        assert parse_partition(format_partition(mu)) == mu

    def test_parse_errors_name_the_token(self):
        with pytest.raises(PartitionError, match="'x'"):
            parse_partition("3,x,1")
        with pytest.raises(PartitionError):
            parse_partition("1,2")
        with pytest.raises(PartitionError):
            parse_partition("0")


class TestSortKey:
    def test_orders_by_size_then_descending_lex(self):
        everything = [mu for n in range(7) for mu in partitions_of(n)]
        assert sorted(everything, key=sort_key) == everything
