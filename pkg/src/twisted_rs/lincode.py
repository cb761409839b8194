"""Generic linear codes over GF(q).

Nothing here knows about twisted codes; the TGRS module is checked against
these routines (duals via nullspace, Schur squares via pairwise products,
weights via enumeration).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    BadIndexSet,
    BadTransform,
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    FullSpace,
    ZeroCode,
)
from .galois import FieldSpec
from .matgf import MatrixGF, matmul, nullspace, rank, row_basis, row_space_equal, rref_rank

DEFAULT_BUDGET = 1 << 26
# prefix codewords materialised at once during enumeration
_CHUNK_WORDS = 1 << 17


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A ``[n, k]`` code; ``gen`` always has full row rank (RREF basis)."""

    gen: MatrixGF

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def same_space(self, other: "LinearCode") -> bool:
        return self.n == other.n and row_space_equal(self.gen, other.gen)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"


@dataclass(frozen=True)
class PermScale:
    """``(c_1..c_n) -> (v_1 c_pi(1), ..., v_n c_pi(n))`` with 0-based ``perm``."""

    perm: tuple[int, ...]
    scale: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise BadTransform(f"not a permutation of 0..{n - 1}: {self.perm}")
        if len(self.scale) != n or any(int(s) == 0 for s in self.scale):
            raise BadTransform("scale must have n nonzero entries")

    @classmethod
    def identity(cls, n: int) -> "PermScale":
        return cls(tuple(range(n)), (1,) * n)


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts ``A_0 .. A_n`` as python ints."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def min_distance(self) -> int | None:
        for i, a in enumerate(self.counts[1:], start=1):
            if a:
                return i
        return None

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def tolist(self) -> list[int]:
        return list(self.counts)


@dataclass(frozen=True)
class OrthogonalityStatus:
    self_orthogonal: bool
    self_dual: bool
    almost_self_dual: bool
    lcd: bool
    hull_dim: int

    def holds(self, prop: str) -> bool:
        return bool(getattr(self, prop.replace("-", "_")))


def from_generator(M: MatrixGF) -> LinearCode:
    basis = row_basis(M)
    if basis.rows == 0:
        raise ZeroCode("generator has rank 0")
    return LinearCode(basis)


def dual(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise FullSpace(f"dual of the full space F_q^{C.n} is the zero code")
    return LinearCode(nullspace(C.gen))


def puncture(C: LinearCode, indices: Sequence[int]) -> LinearCode:
    """Restrict to the 0-based, strictly increasing coordinate list ``indices``."""
    idx = list(indices)
    if not idx or any(b <= a for a, b in zip(idx, idx[1:])) or idx[0] < 0 or idx[-1] >= C.n:
        raise BadIndexSet(f"index set must be nonempty, increasing, within 0..{C.n - 1}: {idx}")
    return from_generator(MatrixGF(C.field, C.gen.data[:, idx]))


def schur_product(C1: LinearCode, C2: LinearCode) -> LinearCode:
    """Span of ``g_i * h_j`` over basis rows of the two codes."""
    if C1.field != C2.field:
        raise FieldMismatch(f"{C1.field!r} vs {C2.field!r}")
    if C1.n != C2.n:
        raise DimensionMismatch(f"lengths {C1.n} and {C2.n}")
    F = C1.field
    a, b = C1.gen.data, C2.gen.data
    prods = F.mul(a[:, None, :], b[None, :, :]).reshape(-1, C1.n)
    return from_generator(MatrixGF(F, prods))


def schur_square(C: LinearCode) -> LinearCode:
    F = C.field
    g = C.gen.data
    rows = [F.mul(g[i], g[j]) for i in range(C.k) for j in range(i, C.k)]
    return from_generator(MatrixGF(F, np.array(rows)))


def apply_perm_scale(C: LinearCode, t: PermScale) -> LinearCode:
    if len(t.perm) != C.n:
        raise BadTransform(f"transform has length {len(t.perm)}, code has n={C.n}")
    F = C.field
    cols = C.gen.data[:, list(t.perm)]
    scaled = F.mul(cols, np.asarray(t.scale, dtype=np.int64)[None, :])
    return from_generator(MatrixGF(F, scaled))


def _span_rows(F: FieldSpec, rows: np.ndarray, n: int) -> np.ndarray:
    """All ``q^len(rows)`` combinations, first row varying slowest."""
    words = np.zeros((1, n), dtype=np.int64)
    elems = np.arange(F.q, dtype=np.int64)
    for r in rows:
        multiples = F.mul(elems[:, None], r[None, :])  # (q, n)
        words = F.add(words[:, None, :], multiples[None, :, :]).reshape(-1, n)
    return words


def brute_weights(C: LinearCode, budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Exact weight distribution by enumerating all ``q^k`` codewords.

    The last basis row is handled analytically: for a fixed prefix word ``s``
    the coefficient ``c`` that zeroes coordinate ``j`` is ``-s_j / g_j``, so a
    bincount over those coefficients gives the weights of all ``q`` words
    ``s + c g`` at once.
    """
    F, n, k, q = C.field, C.n, C.k, C.field.q
    if q ** k > budget:
        raise BudgetExceeded(f"q^k = {q}^{k} exceeds enumeration budget {budget}")
    G = C.gen.data
    last = G[-1]
    prefix = G[:-1]
    nz = last != 0
    inv_last = F.inv(last[nz])
    n_zero_cols = int((~nz).sum())

    # split prefix rows: outer ones looped in python, inner ones materialised
    n_outer = 0
    while q ** (len(prefix) - n_outer) > _CHUNK_WORDS:
        n_outer += 1
    outer_rows, inner_rows = prefix[:n_outer], prefix[n_outer:]
    inner = _span_rows(F, inner_rows, n)
    counts = np.zeros(n + 1, dtype=np.int64)

    for coeffs in itertools.product(range(q), repeat=n_outer):
        if n_outer:
            base = F.sum(F.mul(np.array(coeffs)[:, None], outer_rows), axis=0)
            S = F.add(inner, base[None, :])
        else:
            S = inner
        N = S.shape[0]
        # coefficient of the last row that kills each coordinate
        T = F.mul(F.neg(S[:, nz]), inv_last[None, :])
        flat = (np.arange(N)[:, None] * q + T).ravel()
        zeros_by_c = np.bincount(flat, minlength=N * q).reshape(N, q)
        if n_zero_cols:
            zeros_by_c = zeros_by_c + (S[:, ~nz] == 0).sum(axis=1)[:, None]
        counts += np.bincount((n - zeros_by_c).ravel(), minlength=n + 1)
    return WeightDistribution(tuple(int(c) for c in counts))


def orthogonality_status(C: LinearCode) -> OrthogonalityStatus:
    gram = matmul(C.gen, C.gen.T)
    r = rank(gram)
    so = r == 0
    return OrthogonalityStatus(
        self_orthogonal=so,
        self_dual=so and C.n == 2 * C.k,
        almost_self_dual=so and C.n % 2 == 1 and C.k == (C.n - 1) // 2,
        lcd=r == C.k,
        hull_dim=C.k - r,
    )


def information_set(C: LinearCode) -> list[int]:
    """Pivot columns of the RREF basis: ``k`` coordinates with invertible columns."""
    return rref_rank(C.gen)[2]
