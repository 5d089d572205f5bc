"""Exhaustive-enumeration referee: streams, tallies, cap handling."""

import pytest

from palcomp.oracle import (
    EnumerationCapError,
    brute_count,
    count_at_most_one_even_part,
    count_parts_at_most,
    count_parts_equal_one,
    count_two_colored_no_ones,
    enumerate_compositions,
)
from palcomp.stats import INFINITY, CountSpec, Family, Sign, encode_binary


class TestEnumeration:
    def test_small_streams(self):
        assert list(enumerate_compositions(0)) == [()]
        assert list(enumerate_compositions(1)) == [(1,)]
        assert list(enumerate_compositions(3)) == [(3,), (2, 1), (1, 2), (1, 1, 1)]

    @pytest.mark.parametrize("n", range(11))
    def test_counts_and_uniqueness(self, n):
        items = list(enumerate_compositions(n))
        assert len(items) == (1 if n == 0 else 1 << (n - 1))
        assert len(set(items)) == len(items)
        assert all(sum(c) == n for c in items)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_order_is_lexicographic_in_the_encoding(self, n):
        encodings = [encode_binary(c) for c in enumerate_compositions(n)]
        assert encodings == sorted(encodings)

    def test_cap_refusal_names_the_limit(self):
        with pytest.raises(EnumerationCapError, match="cap is 10"):
            next(enumerate_compositions(11, cap=10))
        # the cap is a knob, not a constant
        assert sum(1 for _ in enumerate_compositions(11, cap=11)) == 1024

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            next(enumerate_compositions(-1))


class TestBruteCount:
    def test_definition_fixtures(self):
        assert brute_count(CountSpec(Family.PC, False, Sign.PLUS, INFINITY, 1), 4) == 2
        assert brute_count(CountSpec(Family.PC, False, Sign.MINUS, INFINITY, 1), 4) == 2
        assert brute_count(CountSpec(Family.PC, False, Sign.TOTAL, INFINITY, 1), 4) == 4
        assert brute_count(CountSpec(Family.AC, False, Sign.PLUS, INFINITY, 0), 6) == 11
        assert brute_count(CountSpec(Family.PC, False, Sign.TOTAL, 2, 0), 4) == 6
        assert brute_count(CountSpec(Family.AC, True, Sign.TOTAL, INFINITY, 0), 5) == 5

    def test_cap_enforced(self):
        spec = CountSpec(Family.PC, False, Sign.TOTAL, INFINITY, 0)
        with pytest.raises(EnumerationCapError):
            brute_count(spec, 9, cap=8)

    @pytest.mark.parametrize("n", range(11))
    @pytest.mark.parametrize("modulus", [1, 2, 3, INFINITY])
    def test_statistics_partition_everything(self, n, modulus):
        expected = 1 if n == 0 else 1 << (n - 1)
        for family in Family:
            total = sum(
                brute_count(CountSpec(family, False, Sign.TOTAL, modulus, k), n)
                for k in range(n // 2 + 1)
            )
            assert total == expected

    @pytest.mark.parametrize("n", range(11))
    @pytest.mark.parametrize("modulus", [1, 2, 3, INFINITY])
    def test_plus_minus_split(self, n, modulus):
        for family in Family:
            for reduced in (False, True):
                for k in range(n // 2 + 1):
                    plus = brute_count(CountSpec(family, reduced, Sign.PLUS, modulus, k), n)
                    minus = brute_count(CountSpec(family, reduced, Sign.MINUS, modulus, k), n)
                    total = brute_count(CountSpec(family, reduced, Sign.TOTAL, modulus, k), n)
                    assert plus + minus == total

    @pytest.mark.parametrize("n", range(1, 12))
    def test_minus_reflects_to_plus(self, n):
        for family in Family:
            for k in range(n // 2 + 1):
                for modulus in (2, INFINITY):
                    minus = brute_count(CountSpec(family, False, Sign.MINUS, modulus, k), n)
                    plus_prev = brute_count(CountSpec(family, False, Sign.PLUS, modulus, k), n - 1)
                    assert minus == plus_prev

    @pytest.mark.parametrize("n", range(13))
    def test_reduced_pc_halving(self, n):
        for k in range(n // 2 + 1):
            reduced = brute_count(CountSpec(Family.PC, True, Sign.TOTAL, INFINITY, k), n)
            full = brute_count(CountSpec(Family.PC, False, Sign.TOTAL, INFINITY, k), n)
            assert reduced * (1 << k) == full


class TestAuxiliaryCounts:
    def test_parts_equal_one(self):
        assert count_parts_equal_one(3, 1) == 2  # (1,2) and (2,1)
        assert count_parts_equal_one(0, 0) == 1
        assert count_parts_equal_one(4, 4) == 1
        assert count_parts_equal_one(4, 3) == 0  # three ones leave a fourth 1

    def test_parts_at_most(self):
        assert count_parts_at_most(4, 3) == 7
        assert count_parts_at_most(0, 3) == 1
        for n in range(1, 10):
            assert count_parts_at_most(n, n) == 1 << (n - 1)
        with pytest.raises(ValueError):
            count_parts_at_most(4, 0)

    def test_two_colored_no_ones(self):
        # n=4: (4) two ways, (2,2) four ways
        assert count_two_colored_no_ones(4) == 6
        assert count_two_colored_no_ones(0) == 1
        assert count_two_colored_no_ones(1) == 0

    def test_at_most_one_even_part(self):
        # n=3: (3), (1,2), (2,1), (1,1,1) all qualify
        assert count_at_most_one_even_part(3) == 4
        # n=4: all 8 except (2,2) and (4)... (4) has one even part, (2,2) has two
        assert count_at_most_one_even_part(4) == 7
