"""Coefficient fields and exact rank computation.

GF(2) ranks run on int bitsets, rational ranks use fraction-free (Bareiss)
elimination on integer matrices, and odd primes use standard modular
elimination.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidParameters


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldChoice:
    """The coefficient field: characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self) -> None:
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise InvalidParameters(
                f"characteristic must be 0 or a prime, got {self.characteristic}"
            )

    @classmethod
    def rationals(cls) -> "FieldChoice":
        return cls(0)

    @classmethod
    def gf(cls, p: int) -> "FieldChoice":
        return cls(p)

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = FieldChoice(0)
GF2 = FieldChoice(2)


def rank_gf2_bitrows(rows: Sequence[int]) -> int:
    """Rank over GF(2) of rows stored as int bitsets."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            bit = row.bit_length() - 1
            piv = pivots.get(bit)
            if piv is None:
                pivots[bit] = row
                break
            row ^= piv
    return len(pivots)


def _rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free integer elimination; the rank over the rationals."""
    mat = [list(r) for r in rows]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv_row = None
        for i in range(rank, nrows):
            if mat[i][col]:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != rank:
            mat[rank], mat[piv_row] = mat[piv_row], mat[rank]
        prow = mat[rank]
        piv = prow[col]
        for i in range(rank + 1, nrows):
            row = mat[i]
            f = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * piv - f * prow[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
    return rank


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    mat = [[x % p for x in r] for r in rows]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv_row = None
        for i in range(rank, nrows):
            if mat[i][col]:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != rank:
            mat[rank], mat[piv_row] = mat[piv_row], mat[rank]
        prow = mat[rank]
        inv = pow(prow[col], -1, p)
        for i in range(rank + 1, nrows):
            row = mat[i]
            if row[col]:
                f = (row[col] * inv) % p
                for j in range(col, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
    return rank


def rank_int_matrix(rows: Sequence[Sequence[int]], field: FieldChoice) -> int:
    """Exact rank of an integer matrix over the chosen field."""
    if not rows or not rows[0]:
        return 0
    if field.characteristic == 0:
        return _rank_bareiss(rows)
    if field.characteristic == 2:
        packed = []
        for r in rows:
            bits = 0
            for j, x in enumerate(r):
                if x & 1:
                    bits |= 1 << j
            packed.append(bits)
        return rank_gf2_bitrows(packed)
    return _rank_mod_p(rows, field.characteristic)
