from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from randpart.partitions import (
    EMPTY,
    HalfInt,
    Partition,
    contains,
    enumerate_partitions,
    frobenius,
    hooks_and_contents,
    iter_partitions,
    iter_partitions_chunked,
    partition_counts,
    rim_hook_removals,
    rim_hooks,
    s_set_prefix,
)


@st.composite
def partition_strategy(draw, max_n=12):
    n = draw(st.integers(min_value=0, max_value=max_n))
    if n == 0:
        return EMPTY
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    parts = sorted(Counter(bins).values(), reverse=True)
    return Partition(parts)


def brute_count(n, largest=None):
    # independent oracle: recursion on the largest part
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(brute_count(n - p, p) for p in range(1, min(n, largest) + 1))


class TestHalfInt:
    def test_rejects_integers(self):
        with pytest.raises(ValueError):
            HalfInt(2)

    def test_arithmetic_closure(self):
        x = HalfInt(1)
        assert (x + 3).twice == 7
        assert (x - 1).twice == -1
        assert (-x).twice == -1
        assert HalfInt(-3) < HalfInt(1)

    def test_ordering_total(self):
        vals = [HalfInt(t) for t in (5, -1, 3, -7)]
        assert sorted(vals) == [HalfInt(-7), HalfInt(-1), HalfInt(3), HalfInt(5)]


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([0])

    def test_conjugate(self):
        assert Partition([4, 2]).conjugate() == Partition([2, 2, 1, 1])
        assert EMPTY.conjugate() == EMPTY

    @given(partition_strategy())
    def test_conjugate_involution(self, lam):
        assert lam.conjugate().conjugate() == lam

    @given(partition_strategy())
    def test_conjugate_preserves_size(self, lam):
        assert lam.conjugate().size == lam.size


class TestEnumeration:
    def test_zero(self):
        assert enumerate_partitions(0) == [EMPTY]

    def test_count_4(self):
        assert len(enumerate_partitions(4)) == brute_count(4) == 5

    def test_count_10(self):
        assert len(enumerate_partitions(10)) == brute_count(10) == 42

    def test_descending_lex_order(self):
        got = [p.parts for p in iter_partitions(5)]
        assert got == sorted(got, reverse=True)
        assert got[0] == (5,)
        assert got[-1] == (1, 1, 1, 1, 1)

    @given(st.integers(min_value=0, max_value=11))
    def test_all_distinct_and_correct_size(self, n):
        seen = set()
        for lam in iter_partitions(n):
            assert lam.size == n
            assert lam.parts not in seen
            seen.add(lam.parts)
        assert len(seen) == brute_count(n)

    def test_cap(self):
        with pytest.raises(ValueError):
            list(iter_partitions(81))

    def test_partition_counts_table(self):
        counts = partition_counts(12)
        assert counts == [brute_count(n) for n in range(13)]

    def test_chunked_split_is_a_partition_of_the_enumeration(self):
        whole = [p.parts for p in iter_partitions(9)]
        chunks = iter_partitions_chunked(9, 3)
        merged = sorted(p.parts for chunk in chunks for p in chunk)
        assert merged == sorted(whole)


class TestDescentSet:
    def test_empty_prefix(self):
        assert [h.twice for h in s_set_prefix(EMPTY, 3)] == [-1, -3, -5]

    def test_known_prefix(self):
        assert [h.twice for h in s_set_prefix(Partition([3, 1]), 4)] == [5, -1, -5, -7]

    def test_single_row(self):
        assert [h.twice for h in s_set_prefix(Partition([1]), 2)] == [1, -3]

    def test_contains_empty(self):
        assert contains(EMPTY, HalfInt(-1))
        assert not contains(EMPTY, HalfInt(1))

    def test_contains_reference(self):
        lam = Partition([3, 1])
        assert not contains(lam, HalfInt(-3))
        assert contains(lam, HalfInt(5))
        assert contains(lam, HalfInt(-5))

    @given(partition_strategy(), st.integers(min_value=-41, max_value=41))
    def test_contains_matches_prefix_scan(self, lam, twice):
        if twice % 2 == 0:
            twice += 1
        x = HalfInt(twice)
        window = s_set_prefix(lam, len(lam) + 25)
        assert contains(lam, x) == (x in window)


class TestFrobenius:
    def test_empty(self):
        fr = frobenius(EMPTY)
        assert fr.plus == () and fr.minus == ()

    def test_single_cell(self):
        fr = frobenius(Partition([1]))
        assert [h.twice for h in fr.plus] == [1]
        assert [h.twice for h in fr.minus] == [-1]

    def test_hook_shape(self):
        fr = frobenius(Partition([3, 1]))
        assert [h.twice for h in fr.plus] == [5]
        assert [h.twice for h in fr.minus] == [-3]

    @given(partition_strategy())
    def test_size_identity(self, lam):
        fr = frobenius(lam)
        total = sum(h.twice for h in fr.plus) - sum(h.twice for h in fr.minus)
        assert total == 2 * lam.size

    @given(partition_strategy())
    def test_minus_is_missing_negatives(self, lam):
        fr = frobenius(lam)
        depth = len(lam) + lam.part(1) + 2
        prefix = set(h.twice for h in s_set_prefix(lam, depth))
        negs_missing = [
            -(2 * i - 1) for i in range(1, depth) if -(2 * i - 1) not in prefix
        ]
        assert sorted(h.twice for h in fr.minus) == sorted(negs_missing)

    @given(partition_strategy())
    def test_plus_matches_descent_positives(self, lam):
        fr = frobenius(lam)
        prefix = [h.twice for h in s_set_prefix(lam, len(lam) + 1)]
        assert [h.twice for h in fr.plus] == [t for t in prefix if t > 0]


class TestHooks:
    def test_single_cell(self):
        assert hooks_and_contents(Partition([1])) == [(1, 0)]

    def test_staircase(self):
        hc = hooks_and_contents(Partition([2, 1]))
        assert sorted(h for h, _ in hc) == [1, 1, 3]
        assert sorted(c for _, c in hc) == [-1, 0, 1]

    def test_row(self):
        hc = hooks_and_contents(Partition([2]))
        assert hc == [(2, 1), (1, 0)] or hc == [(2, 0), (1, 1)]
        assert sorted(h for h, _ in hc) == [1, 2]
        assert sorted(c for _, c in hc) == [0, 1]

    def test_dimension_known(self):
        assert Partition([2, 1]).dimension() == 2
        assert Partition([5, 4, 1]).dimension() == 288

    @given(st.integers(min_value=1, max_value=8))
    def test_dimension_squares_sum_to_factorial(self, n):
        assert sum(lam.dimension() ** 2 for lam in iter_partitions(n)) == factorial(n)

    @given(partition_strategy())
    def test_dimension_positive_integer(self, lam):
        d = lam.dimension()
        assert isinstance(d, int) and d >= 1


def is_rim_hook_oracle(lam, mu, n):
    """Independent predicate: skew cells connected edgewise and no 2x2 block."""
    if not lam.contains(mu) or lam.size - mu.size != n:
        return False
    cells = {
        (i, j)
        for i in range(len(lam))
        for j in range(lam.parts[i])
        if j >= mu.part(i + 1)
    }
    if len(cells) != n:
        return False
    for (i, j) in cells:
        if {(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)} <= cells:
            return False
    start = next(iter(cells))
    seen = {start}
    frontier = [start]
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return seen == cells


def rim_hook_height_oracle(lam, mu):
    rows = {
        i
        for i in range(len(lam))
        for j in range(lam.parts[i])
        if j >= mu.part(i + 1)
    }
    return len(rows) - 1


class TestRimHooks:
    def test_two_from_empty(self):
        got = [(lam.parts, h) for lam, h in rim_hooks(EMPTY, 2)]
        assert got == [((2,), 0), ((1, 1), 1)]

    def test_one_from_empty(self):
        got = [(lam.parts, h) for lam, h in rim_hooks(EMPTY, 1)]
        assert got == [((1,), 0)]

    def test_two_onto_single_cell(self):
        got = [(lam.parts, h) for lam, h in rim_hooks(Partition([1]), 2)]
        assert got == [((3,), 0), ((1, 1, 1), 1)]

    @given(partition_strategy(max_n=8), st.integers(min_value=1, max_value=6))
    def test_against_connectivity_oracle(self, mu, n):
        got = {lam.parts: h for lam, h in rim_hooks(mu, n)}
        expected = {}
        for lam in iter_partitions(mu.size + n):
            if is_rim_hook_oracle(lam, mu, n):
                expected[lam.parts] = rim_hook_height_oracle(lam, mu)
        assert got == expected

    @given(partition_strategy(max_n=9), st.integers(min_value=1, max_value=6))
    def test_removals_invert_additions(self, mu, n):
        for lam, h in rim_hooks(mu, n):
            back = rim_hook_removals(lam, n)
            assert (mu, h) in [(p, hh) for p, hh in back]
