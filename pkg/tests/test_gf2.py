"""Tests for GF(2) linear algebra against brute-force oracles."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planted_ising.gf2 import (
    Gf2Matrix,
    bits_to_int,
    enumerate_solutions,
    int_to_bits,
    row_reduce,
    solution_index,
    solve_affine,
)


def brute_solutions(rows: list[list[int]], b: list[int]) -> set[tuple[int, ...]]:
    """Oracle: all assignments satisfying the system, by full enumeration."""
    n = len(rows[0]) if rows else 0
    out = set()
    for x in itertools.product((0, 1), repeat=n):
        if all(sum(a * xi for a, xi in zip(row, x)) % 2 == bi for row, bi in zip(rows, b)):
            out.add(x)
    return out


def brute_rank(rows: list[list[int]]) -> int:
    """Oracle: rank = log2 of the row-span size, by enumerating row sums."""
    span = set()
    m = len(rows)
    for picks in itertools.product((0, 1), repeat=m):
        v = 0
        for pick, row in zip(picks, rows):
            if pick:
                v ^= bits_to_int(row)
        span.add(v)
    assert len(span) & (len(span) - 1) == 0
    return len(span).bit_length() - 1


@st.composite
def binary_matrices(draw, max_rows=6, max_cols=6):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=m, max_size=m))
    return rows


class TestRowReduce:
    def test_identity(self):
        a = Gf2Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        r, rank, pivots = row_reduce(a)
        assert rank == 3
        assert pivots == [0, 1, 2]
        assert r == a

    def test_dependent_row(self):
        # Third row is the XOR of the first two; oracle: exhaustive row sums.
        rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        assert brute_rank(rows) == 2
        _, rank, _ = row_reduce(Gf2Matrix.from_rows(rows))
        assert rank == 2

    def test_zero_matrix(self):
        a = Gf2Matrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 0]])
        r, rank, pivots = row_reduce(a)
        assert rank == 0
        assert pivots == []
        assert r.row_bits == (0, 0)

    @given(binary_matrices())
    @settings(max_examples=150, deadline=None)
    def test_rank_matches_oracle(self, rows):
        _, rank, _ = row_reduce(Gf2Matrix.from_rows(rows))
        assert rank == brute_rank(rows)

    @given(binary_matrices())
    @settings(max_examples=100, deadline=None)
    def test_idempotent(self, rows):
        r1, rank1, piv1 = row_reduce(Gf2Matrix.from_rows(rows))
        r2, rank2, piv2 = row_reduce(r1)
        assert r1 == r2
        assert (rank1, piv1) == (rank2, piv2)

    @given(binary_matrices())
    @settings(max_examples=100, deadline=None)
    def test_rank_equals_transpose_rank(self, rows):
        a = Gf2Matrix.from_rows(rows)
        _, rank, _ = row_reduce(a)
        _, rank_t, _ = row_reduce(a.transpose())
        assert rank == rank_t

    def test_pivot_cols_strictly_increasing(self):
        rows = [[0, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1]]
        _, _, pivots = row_reduce(Gf2Matrix.from_rows(rows))
        assert all(a < b for a, b in zip(pivots, pivots[1:]))


class TestSolveAffine:
    def test_identity_unique(self):
        a = Gf2Matrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        s = solve_affine(a, [1, 0, 1])
        assert s.consistent
        assert s.nullity == 0
        assert s.particular == (1, 0, 1)

    def test_contradictory_rows(self):
        a = Gf2Matrix.from_rows([[1, 1, 0], [1, 1, 0]])
        s = solve_affine(a, [0, 1])
        assert not s.consistent
        assert s.particular is None
        assert s.rank == 1  # rank of A, not of the augmented system

    def test_single_row_nullity(self):
        a = Gf2Matrix.from_rows([[1, 1]])
        s = solve_affine(a, [0])
        assert s.consistent
        assert s.nullity == 1
        sols = set(enumerate_solutions(s))
        assert sols == brute_solutions([[1, 1]], [0]) == {(0, 0), (1, 1)}

    def test_dimension_mismatch(self):
        a = Gf2Matrix.from_rows([[1, 0]])
        with pytest.raises(ValueError):
            solve_affine(a, [0, 1])

    @given(binary_matrices(), st.data())
    @settings(max_examples=150, deadline=None)
    def test_matches_brute_force(self, rows, data):
        m = len(rows)
        b = data.draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
        s = solve_affine(Gf2Matrix.from_rows(rows), b)
        expected = brute_solutions(rows, b)
        if not expected:
            assert not s.consistent
        else:
            assert s.consistent
            assert len(expected) == 1 << s.nullity
            got = enumerate_solutions(s)
            assert len(got) == len(set(got))
            assert set(got) == expected

    @given(binary_matrices(), st.data())
    @settings(max_examples=100, deadline=None)
    def test_rank_nullity_and_residuals(self, rows, data):
        m = len(rows)
        b = data.draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
        a = Gf2Matrix.from_rows(rows)
        s = solve_affine(a, b)
        assert s.rank + s.nullity == a.n_cols
        if s.consistent:
            assert a.matvec(bits_to_int(s.particular)) == bits_to_int(b)
        for v in s.basis:
            assert a.matvec(bits_to_int(v)) == 0
        # basis independence: span size must be 2**nullity
        assert brute_rank([list(v) for v in s.basis] or [[0] * a.n_cols]) == s.nullity


class TestEnumeration:
    def test_unique_solution(self):
        a = Gf2Matrix.from_rows([[1, 0], [0, 1]])
        s = solve_affine(a, [1, 1])
        assert enumerate_solutions(s) == [(1, 1)]

    def test_eight_solutions_at_nullity_three(self):
        a = Gf2Matrix.from_rows([[1, 1, 0, 0], [0, 0, 0, 0]])
        s = solve_affine(a, [0, 0])
        assert s.nullity == 3
        sols = enumerate_solutions(s)
        assert len(sols) == 8
        assert set(sols) == brute_solutions([[1, 1, 0, 0]], [0])

    def test_limit_exceeded(self):
        a = Gf2Matrix.from_rows([[0, 0, 0]])
        s = solve_affine(a, [0])
        with pytest.raises(ValueError, match="limit"):
            enumerate_solutions(s, limit=4)

    def test_order_is_deterministic_and_indexable(self):
        a = Gf2Matrix.from_rows([[1, 1, 1, 0], [0, 1, 1, 1]])
        s = solve_affine(a, [1, 0])
        sols = enumerate_solutions(s)
        assert sols == enumerate_solutions(s)
        for i, x in enumerate(sols):
            assert solution_index(s, x) == i

    def test_inconsistent_raises(self):
        a = Gf2Matrix.from_rows([[1], [1]])
        s = solve_affine(a, [0, 1])
        with pytest.raises(ValueError):
            enumerate_solutions(s)


class TestMatrixBasics:
    def test_rejects_stray_bits(self):
        with pytest.raises(ValueError):
            Gf2Matrix(1, 2, (0b100,))

    def test_rejects_non_bit_entries(self):
        with pytest.raises(ValueError):
            Gf2Matrix.from_rows([[0, 2]])

    def test_bit_packing_roundtrip(self):
        bits = (1, 0, 1, 1, 0)
        assert int_to_bits(bits_to_int(bits), 5) == bits
