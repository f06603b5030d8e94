"""Exact linear algebra over Q for sparse boundary matrices.

Everything here is arbitrary-precision rational (fractions.Fraction); no
floating point is ever introduced, so ranks and kernel dimensions are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

# Matrices strictly smaller than this (both dimensions) go through the dense
# fraction-free path; anything larger is eliminated sparsely.
DENSE_LIMIT = 64


class SparseRationalMatrix:
    """An nrows x ncols matrix over Q stored as {(row, col): Fraction}."""

    def __init__(self, nrows: int, ncols: int, entries=None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], Fraction] = {}
        if entries:
            items = entries.items() if hasattr(entries, "items") else entries
            for (r, c), v in items:
                self.add(r, c, v)

    def add(self, r: int, c: int, v) -> None:
        """Accumulate v into entry (r, c), dropping exact zeros."""
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
        w = self.entries.get((r, c), Fraction(0)) + Fraction(v)
        if w:
            self.entries[(r, c)] = w
        else:
            self.entries.pop((r, c), None)

    def __getitem__(self, rc) -> Fraction:
        return self.entries.get(rc, Fraction(0))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseRationalMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def is_zero(self) -> bool:
        return not self.entries

    def rank(self) -> int:
        return rank(self)

    def kernel_dim(self) -> int:
        return kernel_dim(self)

    def transpose(self) -> "SparseRationalMatrix":
        out = SparseRationalMatrix(self.ncols, self.nrows)
        out.entries = {(c, r): v for (r, c), v in self.entries.items()}
        return out

    def __matmul__(self, other: "SparseRationalMatrix") -> "SparseRationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        # column index of self == row index of other
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = SparseRationalMatrix(self.nrows, other.ncols)
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out.add(r, c, v * w)
        return out

    def scale(self, factor) -> "SparseRationalMatrix":
        f = Fraction(factor)
        out = SparseRationalMatrix(self.nrows, self.ncols)
        if f:
            out.entries = {rc: v * f for rc, v in self.entries.items()}
        return out

    def to_dense(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            rows[r][c] = v
        return rows

    def to_triplet_text(self) -> str:
        """Serialize as '<nrows> <ncols>' then one 'r c p/q' line per entry."""
        lines = [f"{self.nrows} {self.ncols}"]
        for (r, c) in sorted(self.entries):
            v = self.entries[(r, c)]
            lines.append(f"{r} {c} {v.numerator}/{v.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_triplet_text(cls, text: str) -> "SparseRationalMatrix":
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        if not lines:
            raise ValueError("empty triplet text")
        try:
            nrows, ncols = (int(t) for t in lines[0].split())
        except Exception as exc:
            raise ValueError(f"bad triplet header {lines[0]!r}") from exc
        out = cls(nrows, ncols)
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise ValueError(f"bad triplet line {ln!r}")
            out.add(int(parts[0]), int(parts[1]), Fraction(parts[2]))
        return out

    def __repr__(self) -> str:
        return f"SparseRationalMatrix({self.nrows}x{self.ncols}, {len(self.entries)} entries)"


def _bitlen(v: Fraction) -> int:
    # pivot-size measure: total bit length of numerator and denominator
    return abs(v.numerator).bit_length() + v.denominator.bit_length()


def _rank_dense(mat: SparseRationalMatrix) -> int:
    """Fraction-free (Bareiss) elimination on an integer-scaled dense copy."""
    rows = []
    for row in mat.to_dense():
        scale = lcm(*(v.denominator for v in row)) if any(row) else 1
        rows.append([int(v * scale) for v in row])
    n, m = len(rows), mat.ncols
    rank = 0
    prev = 1
    for col in range(m):
        if rank == n:
            break
        # pivot: nonzero entry in this column with the fewest bits, first wins ties
        best = None
        for r in range(rank, n):
            v = rows[r][col]
            if v and (best is None or abs(v).bit_length() < abs(rows[best][col]).bit_length()):
                best = r
        if best is None:
            continue
        rows[rank], rows[best] = rows[best], rows[rank]
        piv = rows[rank][col]
        for r in range(rank + 1, n):
            v = rows[r][col]
            # Bareiss update; applies to every row so the exact division by the
            # previous pivot stays valid (Sylvester identity)
            rows[r] = [
                (piv * rows[r][j] - v * rows[rank][j]) // prev
                for j in range(m)
            ]
        prev = piv
        rank += 1
    return rank


def _rank_sparse(mat: SparseRationalMatrix) -> int:
    """Sparse Gaussian elimination, columns left to right, smallest pivot bits."""
    rows: dict[int, dict[int, Fraction]] = {}
    cols_of: dict[int, set[int]] = {}
    for (r, c), v in mat.entries.items():
        rows.setdefault(r, {})[c] = v
        cols_of.setdefault(c, set()).add(r)
    rank = 0
    for col in sorted(cols_of):
        live = [r for r in cols_of[col] if r in rows and col in rows[r]]
        if not live:
            continue
        live.sort()
        piv_row = min(live, key=lambda r: (_bitlen(rows[r][col]), r))
        piv_val = rows[piv_row][col]
        pivot = rows.pop(piv_row)
        for r in live:
            if r == piv_row:
                continue
            factor = rows[r][col] / piv_val
            target = rows[r]
            for c2, v2 in pivot.items():
                w = target.get(c2, Fraction(0)) - factor * v2
                if w:
                    target[c2] = w
                    if c2 != col:
                        cols_of.setdefault(c2, set()).add(r)
                else:
                    target.pop(c2, None)
            if not target:
                del rows[r]
        rank += 1
    return rank


def rank(mat: SparseRationalMatrix) -> int:
    """Exact rank over Q."""
    if not mat.entries:
        return 0
    if mat.nrows < DENSE_LIMIT and mat.ncols < DENSE_LIMIT:
        return _rank_dense(mat)
    return _rank_sparse(mat)


def kernel_dim(mat: SparseRationalMatrix) -> int:
    """dim ker = ncols - rank (columns are the domain basis)."""
    return mat.ncols - rank(mat)
