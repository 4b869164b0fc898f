import random
from fractions import Fraction

import pytest

from loopschur import (
    Monomial,
    Partition,
    Polynomial,
    ShiftParams,
    Tableau,
    enumerate_ssyt,
    loop_power_sum,
    loop_schur,
    make_young,
    sample_staircase_tableau,
    shifted_loop_schur,
    shifted_weight_monomial,
    specialize_forget_color,
    staircase_monomial,
    standard_staircase,
    weight_monomial,
)


def hook_content_count(lam: Partition, N: int) -> int:
    """Number of semistandard fillings with entries <= N, by the product formula."""
    numerator, denominator = 1, 1
    conjugate = [sum(1 for p in lam.parts if p > c) for c in range(lam.part(1))]
    for r in range(1, len(lam) + 1):
        for c in range(1, lam.part(r) + 1):
            numerator *= N + c - r
            denominator *= (lam.part(r) - c) + (conjugate[c - 1] - r) + 1
    return numerator // denominator


class TestEnumerateSsyt:
    def test_row_of_two_with_two_entries(self):
        rows = [t.rows for t in enumerate_ssyt(Partition.of(2), 2)]
        assert rows == [((1, 1),), ((1, 2),), ((2, 2),)]

    def test_column_strictness_impossible(self):
        assert list(enumerate_ssyt(Partition.of(1, 1), 1)) == []

    def test_count_via_product_formula(self):
        lam = Partition.of(2, 1)
        assert hook_content_count(lam, 5) == 40
        assert sum(1 for _ in enumerate_ssyt(lam, 5)) == 40

    def test_empty_partition_single_empty_tableau(self):
        tableaux = list(enumerate_ssyt(Partition(), 3))
        assert len(tableaux) == 1 and tableaux[0].rows == ()

    def test_counts_match_product_formula_on_grid(self):
        for parts in [(1,), (2,), (1, 1), (3, 1), (2, 2, 1)]:
            lam = Partition(parts)
            for N in range(1, 6):
                assert sum(1 for _ in enumerate_ssyt(lam, N)) == hook_content_count(lam, N)

    def test_all_valid_and_lexicographic(self):
        seen = []
        for t in enumerate_ssyt(Partition.of(2, 2), 4):
            for r in range(1, 3):
                row = t.rows[r - 1]
                assert all(row[i] <= row[i + 1] for i in range(len(row) - 1))
            assert all(t.rows[0][c] < t.rows[1][c] for c in range(2))
            seen.append(sum(t.rows, ()))
        assert seen == sorted(seen)


FEATURED = Tableau(make_young(Partition.of(4, 3, 3, 1), 3),
                   ((1, 1, 2, 4), (2, 3, 3), (4, 4, 6), (7,)))


class TestWeightMonomials:
    def test_featured_colored_tableau(self):
        expected = Monomial.from_exponents({
            (0, 3): 1, (0, 9): 1, (0, 12): 1, (0, 18): 1, (0, 21): 1,
            (1, 3): 1, (1, 9): 1, (1, 12): 1,
            (2, 6): 2, (2, 12): 1,
        })
        assert weight_monomial(FEATURED) == expected

    def test_empty_tableau(self):
        t = next(enumerate_ssyt(Partition(), 1))
        assert weight_monomial(t).is_one

    def test_single_cell(self):
        t = Tableau(make_young(Partition.of(1), 2), ((5,),))
        assert weight_monomial(t) == Monomial.from_exponents({(0, 10): 1})

    def test_shift_zero_equals_unshifted(self):
        for t in enumerate_ssyt(Partition.of(2, 1), 3, n=3):
            assert shifted_weight_monomial(t, ShiftParams(3, 0)) == weight_monomial(t)

    def test_shifted_single_cell(self):
        # cell (1, 2) holds 1; content 1, so the weight becomes 1 + 2/3
        t = Tableau(make_young(Partition.of(2), 3), ((1, 1),))
        m = shifted_weight_monomial(t, ShiftParams(3, 2))
        assert ((1, 5, 1) in m.vars)

    def test_content_zero_cell_unshifted(self):
        t = Tableau(make_young(Partition.of(1), 3), ((4,),))
        for l in range(3):
            assert shifted_weight_monomial(t, ShiftParams(3, l)) == weight_monomial(t)


class TestLoopSchur:
    def test_empty_partition_is_one(self):
        assert loop_schur(Partition(), 2, 3) == Polynomial.one(2)

    def test_two_cells_two_colors(self):
        expected = Polynomial(2, {
            Monomial.from_exponents({(0, 2): 1, (1, 2): 1}): 1,
            Monomial.from_exponents({(0, 2): 1, (1, 4): 1}): 1,
            Monomial.from_exponents({(0, 4): 1, (1, 4): 1}): 1,
        })
        assert loop_schur(Partition.of(2), 2, 2) == expected

    def test_single_color_matches_classical(self):
        from loopschur import classical_schur
        for parts in [(1,), (2, 1), (2, 2)]:
            lam = Partition(parts)
            for N in (2, 3, 4):
                assert specialize_forget_color(loop_schur(lam, 1, N)) == classical_schur(lam, N)

    def test_monotone_truncation(self):
        for parts in [(2,), (2, 1), (3, 1)]:
            lam = Partition(parts)
            for n in (1, 2, 3):
                for N in (1, 2, 3, 4):
                    small = loop_schur(lam, n, N)
                    large = loop_schur(lam, n, N + 1)
                    for m, c in small.terms():
                        assert large.coefficient(m) >= c

    def test_nonnegative_coefficients(self):
        for n in (1, 2, 3):
            assert all(c > 0 for c in loop_schur(Partition.of(3, 1), n, 4).coefficients())
            assert all(c > 0 for c in shifted_loop_schur(Partition.of(2, 1), ShiftParams(n, n - 1), 4).coefficients())
            assert all(c > 0 for c in loop_power_sum(2, n, 4).coefficients())


class TestShiftedLoopSchur:
    def test_shift_zero_equals_plain(self):
        lam = Partition.of(2, 1)
        assert shifted_loop_schur(lam, ShiftParams(2, 0), 3) == loop_schur(lam, 2, 3)

    def test_single_color_zero_cell(self):
        expected = Polynomial(2, {
            Monomial.from_exponents({(0, 2): 1}): 1,
            Monomial.from_exponents({(0, 4): 1}): 1,
        })
        assert shifted_loop_schur(Partition.of(1), ShiftParams(2, 1), 2) == expected

    def test_one_row_shifted(self):
        # single filling (1, 1); the second cell has content 1, weight 1 + 1/2
        expected = Polynomial(2, {
            Monomial.from_exponents({(0, 2): 1, (1, 3): 1}): 1,
        })
        assert shifted_loop_schur(Partition.of(2), ShiftParams(2, 1), 1) == expected


class TestLoopPowerSum:
    def test_two_colors(self):
        expected = Polynomial(2, {
            Monomial.from_exponents({(0, 2): 1, (1, 2): 1}): 1,
            Monomial.from_exponents({(0, 4): 1, (1, 4): 1}): 1,
        })
        assert loop_power_sum(1, 2, 2) == expected

    def test_single_color_squares(self):
        expected = Polynomial(1, {
            Monomial.from_exponents({(0, 1): 2}): 1,
            Monomial.from_exponents({(0, 2): 2}): 1,
        })
        assert loop_power_sum(2, 1, 2) == expected

    def test_specializes_to_classical_power_sum(self):
        for n in (1, 2, 3):
            for k in (1, 2):
                for N in (1, 2, 3):
                    expected = Polynomial(1, {
                        Monomial.from_exponents({(0, j): k * n}): 1 for j in range(1, N + 1)
                    })
                    assert specialize_forget_color(loop_power_sum(k, n, N)) == expected

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(ValueError):
            loop_power_sum(0, 1, 2)


class TestStaircaseMonomial:
    def test_single_cell(self):
        assert staircase_monomial(1, 1) == Monomial.from_exponents({(0, 1): 1})

    def test_two_rows_two_colors(self):
        expected = Monomial.from_exponents({(1, 2): 1, (0, 2): 1, (0, 4): 1})
        assert staircase_monomial(2, 2) == expected

    def test_matches_standard_filling(self):
        staircase = standard_staircase(5, 3)
        assert staircase.rows == ((1,) * 5, (2,) * 4, (3,) * 3, (4,) * 2, (5,))
        assert staircase_monomial(5, 3) == weight_monomial(staircase)
        for l in (1, 2):
            assert staircase_monomial(5, 3, l) == shifted_weight_monomial(
                staircase, ShiftParams(3, l)
            )

    def test_degree_floor_over_random_members(self):
        # base-family members bound every entry of row j below by its label,
        # so the standard filling minimizes the (shifted) degree
        rng = random.Random(99)
        for n, l, N in ((2, 1, 4), (3, 1, 5), (3, 2, 5)):
            floor = staircase_monomial(N, n, l).degree(n)
            for _ in range(1000):
                member = sample_staircase_tableau(Partition(), n, N, rng)
                degree = shifted_weight_monomial(member.tableau, ShiftParams(n, l)).degree(n)
                assert degree >= floor
