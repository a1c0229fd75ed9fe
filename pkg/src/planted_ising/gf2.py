"""Dense GF(2) linear algebra on bit-packed rows.

Rows are stored as Python ints used as bit sets (bit j = column j), so a
row elimination step is a single big-int XOR and scales to a few
thousand columns without trouble.  Everything here is immutable and
pure; matrices never alias caller data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def bits_to_int(bits: Sequence[int]) -> int:
    """Pack a 0/1 sequence into an int (bit j = bits[j])."""
    value = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"entry {b!r} at position {j} is not a bit")
        value |= b << j
    return value


def int_to_bits(value: int, n: int) -> tuple[int, ...]:
    """Unpack the low n bits of an int into a 0/1 tuple."""
    return tuple((value >> j) & 1 for j in range(n))


@dataclass(frozen=True)
class Gf2Matrix:
    """A binary matrix with bit-packed rows.

    Attributes:
        n_rows: Number of rows.
        n_cols: Number of logical columns; bits at or above n_cols are
            required to be zero in every row word.
        row_bits: One int per row (bit j = entry in column j).
    """

    n_rows: int
    n_cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows != len(self.row_bits):
            raise ValueError("row count does not match row_bits length")
        mask = (1 << self.n_cols) - 1
        for i, row in enumerate(self.row_bits):
            if row < 0 or row & ~mask:
                raise ValueError(f"row {i} has bits outside column range")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], n_cols: int | None = None) -> "Gf2Matrix":
        """Build from an iterable of 0/1 sequences."""
        row_list = [list(r) for r in rows]
        if n_cols is None:
            if not row_list:
                raise ValueError("cannot infer column count from no rows")
            n_cols = len(row_list[0])
        for r in row_list:
            if len(r) != n_cols:
                raise ValueError("ragged rows")
        return cls(len(row_list), n_cols, tuple(bits_to_int(r) for r in row_list))

    def row(self, i: int) -> tuple[int, ...]:
        return int_to_bits(self.row_bits[i], self.n_cols)

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.n_rows)]

    def transpose(self) -> "Gf2Matrix":
        cols = []
        for j in range(self.n_cols):
            word = 0
            for i, row in enumerate(self.row_bits):
                word |= ((row >> j) & 1) << i
            cols.append(word)
        return Gf2Matrix(self.n_cols, self.n_rows, tuple(cols))

    def matvec(self, x_bits: int) -> int:
        """A @ x over GF(2); x and the result are bit-packed ints."""
        out = 0
        for i, row in enumerate(self.row_bits):
            out |= (bin(row & x_bits).count("1") & 1) << i
        return out


@dataclass(frozen=True)
class Gf2SolutionSet:
    """Solution set of A x = b over GF(2).

    rank + nullity = number of variables.  When consistent, the full
    solution set is {particular + span(basis)} and has 2**nullity
    elements; basis vectors are linearly independent.  basis[j] is the
    null-space vector associated with the j-th free (non-pivot) column
    in ascending order.
    """

    n_vars: int
    rank: int
    nullity: int
    consistent: bool
    particular: tuple[int, ...] | None
    basis: tuple[tuple[int, ...], ...]
    pivot_cols: tuple[int, ...]

    @property
    def free_cols(self) -> tuple[int, ...]:
        pivot_set = set(self.pivot_cols)
        return tuple(c for c in range(self.n_vars) if c not in pivot_set)


def _reduce_to_rref(row_words: Iterable[int]) -> dict[int, int]:
    """Core elimination; returns {pivot column -> fully reduced row word}.

    Pivot of a row is its lowest set bit.  Forward pass inserts rows
    into a pivot table, back pass clears every pivot column from the
    other rows, yielding reduced row-echelon form.
    """
    pivots: dict[int, int] = {}
    for word in row_words:
        cur = word
        while cur:
            col = (cur & -cur).bit_length() - 1
            other = pivots.get(col)
            if other is None:
                pivots[col] = cur
                break
            cur ^= other
    cols = sorted(pivots)
    for idx in range(len(cols) - 1, -1, -1):
        col = cols[idx]
        mask = 1 << col
        row = pivots[col]
        for col2 in cols[:idx]:
            if pivots[col2] & mask:
                pivots[col2] ^= row
    return pivots


def row_reduce(a: Gf2Matrix) -> tuple[Gf2Matrix, int, list[int]]:
    """Reduced row-echelon form of a.

    Returns (R, rank, pivot_cols) where R has the nonzero rows first
    (pivot columns strictly increasing) followed by zero rows, and
    rank == len(pivot_cols).  Idempotent: row_reduce(R) returns R.
    """
    pivots = _reduce_to_rref(a.row_bits)
    cols = sorted(pivots)
    rows_out = [pivots[c] for c in cols] + [0] * (a.n_rows - len(cols))
    return Gf2Matrix(a.n_rows, a.n_cols, tuple(rows_out)), len(cols), cols


def solve_affine(a: Gf2Matrix, b: Sequence[int]) -> Gf2SolutionSet:
    """Solve A x = b over GF(2).

    The right-hand side is carried as an extra (highest) bit during
    elimination; a pivot landing in that column means the system is
    inconsistent.  Free variables of the particular solution are zero.
    """
    if len(b) != a.n_rows:
        raise ValueError(f"b has length {len(b)}, expected {a.n_rows}")
    n = a.n_cols
    rhs_bit = 1 << n
    augmented = (row | (int(bi) << n) for row, bi in zip(a.row_bits, b))
    pivots = _reduce_to_rref(augmented)

    consistent = n not in pivots
    pivot_cols = sorted(c for c in pivots if c < n)
    rank = len(pivot_cols)
    nullity = n - rank

    particular = None
    if consistent:
        word = 0
        for c in pivot_cols:
            word |= ((pivots[c] >> n) & 1) << c
        particular = int_to_bits(word, n)

    pivot_set = set(pivot_cols)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        vec = 1 << f
        for c in pivot_cols:
            if (pivots[c] >> f) & 1:
                vec |= 1 << c
        basis.append(int_to_bits(vec, n))

    return Gf2SolutionSet(
        n_vars=n,
        rank=rank,
        nullity=nullity,
        consistent=consistent,
        particular=particular,
        basis=tuple(basis),
        pivot_cols=tuple(pivot_cols),
    )


def enumerate_solutions(s: Gf2SolutionSet, limit: int = 1 << 20) -> list[tuple[int, ...]]:
    """All solutions in canonical order.

    Order is lexicographic over the basis coefficient tuple
    (c_0, ..., c_{d-1}) where c_j multiplies basis[j]: solution index i
    has c_j = bit (d-1-j) of i.  Index 0 is the particular solution.
    """
    if not s.consistent:
        raise ValueError("system is inconsistent; no solutions to enumerate")
    count = 1 << s.nullity
    if count > limit:
        raise ValueError(f"{count} solutions exceed enumeration limit {limit}")
    particular = bits_to_int(s.particular)
    basis_words = [bits_to_int(v) for v in s.basis]
    d = s.nullity
    out = []
    for index in range(count):
        word = particular
        for j in range(d):
            if (index >> (d - 1 - j)) & 1:
                word ^= basis_words[j]
        out.append(int_to_bits(word, s.n_vars))
    return out


def solution_index(s: Gf2SolutionSet, x: Sequence[int]) -> int:
    """Canonical index of solution x under the enumerate_solutions order.

    The coefficient of basis[j] is read off the j-th free column, since
    each basis vector is the only one with a 1 there.
    """
    if not s.consistent:
        raise ValueError("system is inconsistent")
    if len(x) != s.n_vars:
        raise ValueError("solution length mismatch")
    diff = bits_to_int(x) ^ bits_to_int(s.particular)
    index = 0
    d = s.nullity
    for j, free_col in enumerate(s.free_cols):
        if (diff >> free_col) & 1:
            index |= 1 << (d - 1 - j)
    return index
