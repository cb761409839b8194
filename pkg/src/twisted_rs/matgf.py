"""Dense matrices over GF(q) with exact elimination.

Pivoting is deterministic (first nonzero entry, top-to-bottom within each
column, columns left-to-right) so RREFs and nullspace bases are
reproducible bit for bit.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, NotSquare, TgrsError
from .galois import FieldElement, FieldSpec


class MatrixGF:
    """Immutable ``rows x cols`` matrix of field reps."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise TgrsError(f"entries out of range for {field!r}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "MatrixGF":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "MatrixGF":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> "MatrixGF":
        return MatrixGF(self.field, self.data.T)

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(int(self.data[i, j]), self.field)

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def is_zero(self) -> bool:
        return not self.data.any()

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        return matmul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.field, self.data.tobytes(), self.data.shape))

    def __repr__(self) -> str:
        return f"MatrixGF({self.field!r}, {self.tolist()})"


def _check_same_field(a: MatrixGF, b: MatrixGF) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def _rref_array(F: FieldSpec, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    A = np.array(A, dtype=np.int64)
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = F.mul(A[r], F.inv1(int(A[r, c])))
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            factors = A[others, c][:, None]
            A[others] = F.sub(A[others], F.mul(factors, A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rref_rank(M: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Gauss-Jordan reduction: ``(reduced matrix, rank, pivot columns)``."""
    R, pivots = _rref_array(M.field, M.data)
    return MatrixGF(M.field, R), len(pivots), pivots


def rank(M: MatrixGF) -> int:
    return rref_rank(M)[1]


def row_basis(M: MatrixGF) -> MatrixGF:
    """RREF with the zero rows dropped."""
    R, r, _ = rref_rank(M)
    return MatrixGF(M.field, R.data[:r])


def nullspace(M: MatrixGF) -> MatrixGF:
    """Rows spanning ``{x : M x^T = 0}``, in RREF."""
    F = M.field
    R, pivots = _rref_array(F, M.data)
    cols = M.cols
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for idx, fc in enumerate(free):
        basis[idx, fc] = 1
        for i, pc in enumerate(pivots):
            basis[idx, pc] = F.neg1(int(R[i, fc]))
    if len(free):
        basis, _ = _rref_array(F, basis)
    return MatrixGF(F, basis.reshape(len(free), cols))


def det(M: MatrixGF) -> FieldElement:
    if M.rows != M.cols:
        raise NotSquare(f"det of a {M.rows}x{M.cols} matrix")
    F = M.field
    A = np.array(M.data, dtype=np.int64)
    n = M.rows
    result = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return F.zero
        i = c + int(nz[0])
        if i != c:
            A[[c, i]] = A[[i, c]]
            result = F.neg1(result)
        piv = int(A[c, c])
        result = F.mul1(result, piv)
        below = np.arange(c + 1, n)
        below = below[A[below, c] != 0]
        if below.size:
            factors = F.div(A[below, c], piv)[:, None]
            A[below] = F.sub(A[below], F.mul(factors, A[c][None, :]))
    return FieldElement(result, F)


def matmul(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    _check_same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.shape} @ {B.shape}")
    F = A.field
    if A.cols == 0:
        return MatrixGF.zeros(F, A.rows, B.cols)
    prods = F.mul(A.data[:, :, None], B.data[None, :, :])
    return MatrixGF(F, F.sum(prods, axis=1))


def row_space_equal(A: MatrixGF, B: MatrixGF) -> bool:
    _check_same_field(A, B)
    if A.cols != B.cols:
        raise DimensionMismatch(f"{A.cols} vs {B.cols} columns")
    return np.array_equal(row_basis(A).data, row_basis(B).data)


def in_row_space(M: MatrixGF, vec) -> bool:
    """True iff ``vec`` is a linear combination of the rows of ``M``."""
    v = np.asarray(vec, dtype=np.int64).reshape(1, -1)
    r = rank(M)
    stacked = MatrixGF(M.field, np.vstack([M.data, v]))
    return rank(stacked) == r
