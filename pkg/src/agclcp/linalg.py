"""Dense exact linear algebra over GF(q).

Matrices keep their entries as field indices (see :mod:`agclcp.gf`); use
:meth:`Matrix.elem` or :meth:`Matrix.element_rows` for element views.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .gf import Field, FieldElement, FieldError


def _as_index(F: Field, x) -> int:
    if isinstance(x, FieldElement):
        if x.field != F:
            raise FieldError("matrix entry from a different field")
        return x.index
    return F(x).index


@dataclass(frozen=True)
class Matrix:
    field: Field
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, F: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        """Build from rows of field elements, indices, or element strings."""
        data = tuple(tuple(_as_index(F, x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(F, data, ncols)

    @classmethod
    def zeros(cls, F: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(F, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, F: Field, n: int) -> "Matrix":
        return cls(F, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def elem(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, self.rows[i][j])

    def element_rows(self) -> list[list[FieldElement]]:
        return [[FieldElement(self.field, x) for x in row] for row in self.rows]

    def __str__(self):
        fmt = self.field.format
        return "\n".join("[" + " ".join(fmt(x) for x in row) + "]" for row in self.rows)

    def to_json(self) -> dict:
        fmt = self.field.format
        return {"rows": self.nrows, "cols": self.ncols, "entries": [[fmt(x) for x in r] for r in self.rows]}

    @classmethod
    def from_json(cls, F: Field, obj: dict) -> "Matrix":
        m = cls.from_rows(F, obj["entries"], obj["cols"])
        if m.nrows != obj["rows"]:
            raise ValueError("row count does not match entries")
        return m


def rref(M: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form.  Zero rows are kept at the bottom."""
    F = M.field
    a = [list(r) for r in M.rows]
    pivots: list[int] = []
    r = 0
    for c in range(M.ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        if inv != 1:
            a[r] = [F.mul(x, inv) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix(F, tuple(tuple(row) for row in a), M.ncols), r, tuple(pivots)


def rank(M: Matrix) -> int:
    return rref(M)[1]


def row_basis(M: Matrix) -> Matrix:
    """Canonical generator: the nonzero rows of the RREF."""
    R, k, _ = rref(M)
    return Matrix(M.field, R.rows[:k], M.ncols)


def nullspace_basis(M: Matrix) -> Matrix:
    """Rows spanning {x : M x^T = 0}, in RREF."""
    F = M.field
    R, k, pivots = rref(M)
    free = [c for c in range(M.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * M.ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(R.rows[i][f])
        basis.append(v)
    return row_basis(Matrix(F, tuple(tuple(v) for v in basis), M.ncols)) if basis else Matrix(F, (), M.ncols)


def transpose(M: Matrix) -> Matrix:
    return Matrix(M.field, tuple(zip(*M.rows)) if M.rows else tuple(() for _ in range(M.ncols)), M.nrows)


def dot(F: Field, u: Sequence[int], v: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.ncols != B.nrows:
        raise ValueError(f"shape mismatch {A.shape} x {B.shape}")
    if A.field != B.field:
        raise FieldError("mixed-field matrices")
    cols = transpose(B).rows
    return Matrix(A.field, tuple(tuple(dot(A.field, r, c) for c in cols) for r in A.rows), B.ncols)


def stack(A: Matrix, B: Matrix) -> Matrix:
    if A.ncols != B.ncols:
        raise ValueError(f"cannot stack {A.shape} on {B.shape}")
    if A.field != B.field:
        raise FieldError("mixed-field matrices")
    return Matrix(A.field, A.rows + B.rows, A.ncols)


def row_space_contains(A: Matrix, v: Sequence) -> bool:
    vec = tuple(_as_index(A.field, x) for x in v)
    if len(vec) != A.ncols:
        raise ValueError("vector length does not match matrix width")
    return rank(stack(A, Matrix(A.field, (vec,), A.ncols))) == rank(A)


def row_space_includes(A: Matrix, B: Matrix) -> bool:
    """True iff rowspace(B) is a subspace of rowspace(A)."""
    return rank(stack(A, B)) == rank(A)


def row_space_equal(A: Matrix, B: Matrix) -> bool:
    if A.ncols != B.ncols:
        return False
    return row_basis(A) == row_basis(B)


def scale_columns(M: Matrix, a: Sequence[int]) -> Matrix:
    F = M.field
    return Matrix(F, tuple(tuple(F.mul(x, s) for x, s in zip(r, a)) for r in M.rows), M.ncols)
