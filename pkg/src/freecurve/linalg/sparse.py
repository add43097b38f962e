"""Sparse matrices over QQ or a prime field."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..arith import reduce_mod_p

QQ = "QQ"


def fp_tag(p: int) -> str:
    return f"Fp({p})"


@dataclass(frozen=True, eq=False)
class SparseMat:
    """Immutable sparse matrix; ``entries`` maps (row, col) to a nonzero value.

    Over QQ values are ints or Fractions; over Fp(p) they are residues in [0, p).
    """

    rows: int
    cols: int
    entries: dict
    field: str = QQ

    @classmethod
    def from_triplets(cls, rows, cols, triplets, field=QQ):
        entries = {}
        p = prime_of(field)
        for r, c, v in triplets:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r}, {c}) outside a {rows}x{cols} matrix")
            if (r, c) in entries:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            if p is not None:
                v = int(v) % p
            if v:
                entries[(r, c)] = v
        return cls(rows, cols, entries, field)

    @classmethod
    def from_dense(cls, table, field=QQ):
        rows = len(table)
        cols = len(table[0]) if rows else 0
        return cls.from_triplets(
            rows, cols, ((r, c, v) for r, row in enumerate(table) for c, v in enumerate(row)), field
        )

    @property
    def prime(self):
        return prime_of(self.field)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()}, self.field)

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def mod_p(self, p: int) -> "SparseMat":
        """Image over Fp; raises BadPrime if p divides a denominator."""
        if self.field != QQ:
            raise ValueError("matrix is already over a prime field")
        ent = {}
        for k, v in self.entries.items():
            r = reduce_mod_p(v, p)
            if r:
                ent[k] = r
        return SparseMat(self.rows, self.cols, ent, fp_tag(p))

    def denominators(self) -> set:
        return {Fraction(v).denominator for v in self.entries.values()} - {1}

    def row_lists(self) -> list:
        out = [[] for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r].append((c, v))
        for row in out:
            row.sort()
        return out

    def csr(self):
        """(indptr, indices, data) int64 arrays; only valid over a prime field."""
        if self.prime is None:
            raise ValueError("CSR export is for prime-field matrices")
        lists = self.row_lists()
        indptr = np.zeros(self.rows + 1, dtype=np.int64)
        for i, row in enumerate(lists):
            indptr[i + 1] = indptr[i] + len(row)
        indices = np.fromiter((c for row in lists for c, _ in row), dtype=np.int64, count=int(indptr[-1]))
        data = np.fromiter((v for row in lists for _, v in row), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices, data

    def apply(self, vec) -> list:
        """Matrix-vector product in the matrix's field."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = [0] * self.rows
        for (r, c), v in self.entries.items():
            if vec[c]:
                out[r] += v * vec[c]
        p = self.prime
        if p is not None:
            out = [x % p for x in out]
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMat):
            return NotImplemented
        return (self.rows, self.cols, self.field, self.entries) == (
            other.rows, other.cols, other.field, other.entries)

    def __repr__(self):
        return f"SparseMat({self.rows}x{self.cols}, nnz={self.nnz}, {self.field})"


def prime_of(field: str):
    if field == QQ:
        return None
    if field.startswith("Fp(") and field.endswith(")"):
        return int(field[3:-1])
    raise ValueError(f"unknown field tag {field!r}")
