"""[1,0]-twisted generalized Reed-Solomon codes.

A code is fixed by ``(k, alpha, v, eta)`` over a field: the codewords are
``(v_1 f(alpha_1), ..., v_n f(alpha_n))`` for the twisted polynomials
``f(x) = a_0 + a_1 x + ... + a_{k-1} x^{k-1} + eta * a_0 * x^k``.

Field elements are handled as integer reps throughout this module; public
functions accept reps or :class:`~twisted_rs.galois.FieldElement` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import lincode
from .errors import (
    BadParams,
    BadSize,
    OutOfTheoremRange,
    RepeatedEvaluationPoint,
    SetTooSmall,
    WrongShape,
    ZeroEvaluationPoint,
)
from .galois import FieldElement, FieldSpec
from .lincode import LinearCode, WeightDistribution
from .matgf import MatrixGF, in_row_space, rref_rank


def _reps(values: Iterable) -> tuple[int, ...]:
    return tuple(int(x) for x in values)


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TgrsParams:
    """Parameters of ``C_{k,n}(alpha, v, eta)``; entries are integer reps."""

    spec: FieldSpec
    k: int
    alpha: tuple[int, ...]
    v: tuple[int, ...]
    eta: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", _reps(self.alpha))
        object.__setattr__(self, "v", _reps(self.v))
        object.__setattr__(self, "eta", int(self.eta))
        q, n = self.spec.q, len(self.alpha)
        if len(set(self.alpha)) != n:
            raise RepeatedEvaluationPoint(f"evaluation points repeat: {list(self.alpha)}")
        if any(not 0 <= a < q for a in self.alpha + self.v) or not 0 <= self.eta < q:
            raise BadParams(f"entries must be reps in [0, {q})")
        if len(self.v) != n:
            raise BadParams(f"alpha has {n} entries but v has {len(self.v)}")
        if 0 in self.v:
            raise BadParams("column multipliers must be nonzero")
        if self.eta == 0:
            raise BadParams("eta must be nonzero")
        if not 1 <= self.k < n <= q:
            raise BadParams(f"need 1 <= k < n <= q, got k={self.k}, n={n}, q={q}")

    @classmethod
    def make(cls, spec: FieldSpec, k: int, alpha: Sequence, v: Sequence | None = None,
             eta=1) -> "TgrsParams":
        alpha = _reps(alpha)
        return cls(spec, k, alpha, _reps(v) if v is not None else (1,) * len(alpha), int(eta))

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def zero_index(self) -> int | None:
        try:
            return self.alpha.index(0)
        except ValueError:
            return None

    def code(self) -> LinearCode:
        return lincode.from_generator(generator_matrix(self))

    def with_v(self, v: Sequence) -> "TgrsParams":
        return TgrsParams(self.spec, self.k, self.alpha, _reps(v), self.eta)

    def to_dict(self) -> dict:
        return {"k": self.k, "alpha": list(self.alpha), "v": list(self.v), "eta": self.eta}


def full_field_order(spec: FieldSpec) -> tuple[int, ...]:
    """``F_q`` as evaluation points: ascending reps with 0 moved last."""
    return tuple(range(1, spec.q)) + (0,)


def units_order(spec: FieldSpec) -> tuple[int, ...]:
    return tuple(range(1, spec.q))


def product_all(spec: FieldSpec, alpha: Sequence[int]) -> int:
    """``P_alpha``: product of all evaluation points."""
    return spec.prod(alpha)


def product_without(spec: FieldSpec, alpha: Sequence[int], j: int) -> int:
    """``P_{alpha,j} = (-1)^n * prod_{i != j} alpha_i``."""
    out = spec.prod(a for i, a in enumerate(alpha) if i != j)
    return spec.neg1(out) if len(alpha) % 2 else out


# ---------------------------------------------------------------------------
# twisted polynomials
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class TwistedPolynomial:
    """``sum a_i x^i + eta a_0 x^k`` with ``k = len(coeffs)`` (hook 0, twist 1)."""

    spec: FieldSpec
    coeffs: tuple[int, ...]
    eta: int

    @property
    def k(self) -> int:
        return len(self.coeffs)

    def dense_coeffs(self) -> list[int]:
        out = list(self.coeffs) + [0]
        out[self.k] = self.spec.mul1(self.eta, self.coeffs[0])
        return out


def twisted_eval(f: TwistedPolynomial, x) -> FieldElement:
    F = f.spec
    x = int(x)
    acc = 0
    for c in reversed(f.dense_coeffs()):
        acc = F.add1(F.mul1(acc, x), c)
    return FieldElement(acc, F)


# ---------------------------------------------------------------------------
# generator and parity-check matrices
# ---------------------------------------------------------------------------
def dual_multipliers_u(spec: FieldSpec, alpha: Sequence) -> tuple[int, ...]:
    """``u_j = -prod_{i != j} (alpha_j - alpha_i)^{-1}``."""
    alpha = _reps(alpha)
    if len(set(alpha)) != len(alpha):
        raise RepeatedEvaluationPoint(f"evaluation points repeat: {list(alpha)}")
    F = spec
    out = []
    for j, aj in enumerate(alpha):
        d = F.prod(F.sub1(aj, ai) for i, ai in enumerate(alpha) if i != j)
        out.append(F.neg1(F.inv1(d)))
    return tuple(out)


def generator_matrix(p: TgrsParams) -> MatrixGF:
    F, k = p.spec, p.k
    a = np.array(p.alpha, dtype=np.int64)
    v = np.array(p.v, dtype=np.int64)
    rows = [F.mul(v, F.add(1, F.mul(p.eta, F.power(a, k))))]
    rows += [F.mul(v, F.power(a, i)) for i in range(1, k)]
    return MatrixGF(F, np.array(rows))


def parity_check_matrix(p: TgrsParams) -> MatrixGF:
    """``(n-k) x n`` matrix whose last row carries the twist ``eta * P_{alpha,j}``."""
    F, n, r = p.spec, p.n, p.n - p.k
    a = np.array(p.alpha, dtype=np.int64)
    base = F.div(np.array(dual_multipliers_u(F, p.alpha)), np.array(p.v))
    rows = [F.mul(base, F.power(a, i)) for i in range(r - 1)]
    pj = np.array([product_without(F, p.alpha, j) for j in range(n)])
    rows.append(F.mul(base, F.add(F.power(a, r - 1), F.mul(p.eta, pj))))
    return MatrixGF(F, np.array(rows))


def dual_params(p: TgrsParams) -> TgrsParams:
    """Parameters of the dual code, itself a ``[n, n-k]`` TGRS code when ``0`` is no point.

    Multipliers are ``u_j / (v_j alpha_j)`` and the twist is
    ``((-1)^n eta P_alpha)^{-1}``; the sign only matters for odd ``n``.
    """
    if p.zero_index is not None:
        raise ZeroEvaluationPoint("0 is an evaluation point; the dual is not a TGRS code")
    F = p.spec
    u = dual_multipliers_u(F, p.alpha)
    w = tuple(F.div1(uj, F.mul1(vj, aj)) for uj, vj, aj in zip(u, p.v, p.alpha))
    t = F.mul1(p.eta, product_all(F, p.alpha))
    if p.n % 2:
        t = F.neg1(t)
    return TgrsParams(F, p.n - p.k, p.alpha, w, F.inv1(t))


# ---------------------------------------------------------------------------
# subset products, classification and weights
# ---------------------------------------------------------------------------
def subset_product_distribution(spec: FieldSpec, k: int, B: Iterable) -> list[int]:
    """``[#M(k, b, B) for b in F_q]`` where ``M`` counts proper ``k``-subsets by product."""
    F = spec
    elems = sorted(set(_reps(B)))
    if not 0 <= k <= len(elems):
        raise BadSize(f"subset size {k} not in 0..{len(elems)}")
    q = F.q
    if k == len(elems):
        # only the whole set has this size, and it is not a proper subset
        return [0] * q
    dtype = np.int64 if comb(len(elems), k) < 2 ** 62 else object
    dp = np.zeros((k + 1, q), dtype=dtype)
    dp[0, 1] = 1
    reps = np.arange(q, dtype=np.int64)
    for count, a in enumerate(elems, start=1):
        if a == 0:
            for s in range(min(count, k), 0, -1):
                dp[s, 0] += dp[s - 1].sum()
        else:
            perm = F.mul(a, reps)
            for s in range(min(count, k), 0, -1):
                dp[s, perm] += dp[s - 1]
    return [int(c) for c in dp[k]]


def subset_product_count(spec: FieldSpec, k: int, b, B: Iterable) -> int:
    """``#M(k, b, B)``: proper ``k``-subsets of ``B`` whose product is ``b``."""
    return subset_product_distribution(spec, k, B)[int(b)]


def uniform_subset_count(q: int, k: int) -> int:
    """``binom(q-1, k) / (q-1)``, exact when ``gcd(k, q-1) = 1``."""
    total = comb(q - 1, k)
    assert total % (q - 1) == 0
    return total // (q - 1)


@dataclass(frozen=True)
class Classification:
    kind: str  # "MDS" or "NMDS"
    m_count: int
    d: int

    def to_dict(self) -> dict:
        return {"kind": self.kind, "m_count": self.m_count, "d": self.d}


def _check_theorem_range(p: TgrsParams) -> None:
    if not 3 <= p.k < p.n:
        raise OutOfTheoremRange(f"MDS/NMDS dichotomy needs 3 <= k < n (k={p.k}, n={p.n})")


def min_weight_target(p: TgrsParams) -> int:
    """``(-1)^k eta^{-1}``: the subset product that produces weight ``n-k`` words."""
    F = p.spec
    t = F.inv1(p.eta)
    return F.neg1(t) if p.k % 2 else t


def classify(p: TgrsParams) -> Classification:
    _check_theorem_range(p)
    m = subset_product_count(p.spec, p.k, min_weight_target(p), p.alpha)
    if m == 0:
        return Classification("MDS", 0, p.n - p.k + 1)
    return Classification("NMDS", m, p.n - p.k)


def weights_from_min_count(n: int, k: int, q: int, a_min: int) -> WeightDistribution:
    """Weights of an ``[n,k]`` MDS/NMDS code from ``A_{n-k}`` alone."""
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[n - k] += a_min
    for s in range(1, k + 1):
        head = sum((-1) ** j * comb(n - k + s, j) * (q ** (s - j) - 1) for j in range(s))
        counts[n - k + s] = comb(n, k - s) * head + (-1) ** s * comb(k, s) * a_min
    return WeightDistribution(tuple(counts))


def closed_weight_distribution(p: TgrsParams) -> tuple[WeightDistribution, WeightDistribution]:
    """Weights of the code and its dual from ``#M(k, (-1)^k eta^{-1}, A_alpha)``.

    The dual uses the same recursion with the roles of ``k`` and ``n-k``
    exchanged, seeded with ``A^perp_k = A_{n-k}``.
    """
    cls = classify(p)
    q, n, k = p.spec.q, p.n, p.k
    a_min = (q - 1) * cls.m_count
    return weights_from_min_count(n, k, q, a_min), weights_from_min_count(n, n - k, q, a_min)


# ---------------------------------------------------------------------------
# Schur squares and the non-GRS certificate
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class FullSpaceCode:
    n: int


def schur_square_params(p: TgrsParams) -> FullSpaceCode | TgrsParams:
    if p.k < 3:
        raise OutOfTheoremRange(f"Schur square structure needs k >= 3 (k={p.k})")
    if 2 * p.k >= p.n:
        return FullSpaceCode(p.n)
    F = p.spec
    v2 = tuple(F.mul1(x, x) for x in p.v)
    return TgrsParams(F, 2 * p.k, p.alpha, v2, F.mul1(p.eta, p.eta))


@dataclass(frozen=True)
class NonGrsCertificate:
    branch: str  # "schur-square" | "dual-schur-square" | "dual-weight-one"
    observed_dim: int
    grs_dim: int
    certified: bool
    witness: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        out = {"branch": self.branch, "observed_dim": self.observed_dim,
               "grs_dim": self.grs_dim, "certified": self.certified}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


def non_grs_certificate(p: TgrsParams) -> NonGrsCertificate:
    """Show the code is neither GRS nor EGRS via Schur-square dimensions.

    * ``2k <= n``: ``dim C^2`` exceeds the GRS value ``2k - 1``.
    * ``2k > n``, 0 not a point: ``dim (C^perp)^2`` exceeds ``2(n-k) - 1``.
    * ``2k > n``, 0 a point: ``(C^perp)^2`` holds a weight-1 word, while a GRS
      dual square has minimum distance ``2k - n + 2 >= 2``.
    """
    if not 3 <= p.k <= p.n - 3:
        raise OutOfTheoremRange(f"non-GRS theorem needs 3 <= k <= n-3 (k={p.k}, n={p.n})")
    n, k = p.n, p.k
    if 2 * k - 1 < n:
        obs = lincode.schur_square(p.code()).k
        return NonGrsCertificate("schur-square", obs, 2 * k - 1, obs != 2 * k - 1)
    H = parity_check_matrix(p)
    dual_sq = lincode.schur_square(lincode.from_generator(H))
    grs_dim = 2 * (n - k) - 1
    z = p.zero_index
    if z is None:
        obs = dual_sq.k
        return NonGrsCertificate("dual-schur-square", obs, grs_dim, obs != grs_dim)
    F = p.spec
    h = H.data
    c1, c2, c3, c4 = h[0], h[1], h[n - k - 2], h[n - k - 1]
    c = F.sub(F.mul(c1, c4), F.mul(c2, c3))
    weight_one = int(np.count_nonzero(c)) == 1 and int(c[z]) != 0
    member = in_row_space(dual_sq.gen, c)
    return NonGrsCertificate("dual-weight-one", dual_sq.k, grs_dim,
                             weight_one and member and 2 * k - n + 2 >= 2, _reps(c))


# ---------------------------------------------------------------------------
# power sums and self-orthogonality
# ---------------------------------------------------------------------------
def l_sum(spec: FieldSpec, A: Iterable, m: int) -> int:
    """``sum_{a in A} a^m prod_{b in F_q \\ A} (a - b)``."""
    F = spec
    A = sorted(set(_reps(A)))
    if len(A) <= 2:
        raise SetTooSmall(f"|A| = {len(A)}; need more than 2 points")
    outside = [b for b in range(F.q) if b not in set(A)]
    total = 0
    for a in A:
        term = F.pow1(a, m)
        for b in outside:
            term = F.mul1(term, F.sub1(a, b))
        total = F.add1(total, term)
    return total


def self_orthogonal_witness(p: TgrsParams) -> tuple[int, ...] | None:
    """Coefficients ``g_0..g_D`` (``D = q-1-2k``) certifying self-orthogonality.

    Solves ``g(alpha_j) = v_j^2`` on nonzero points, ``g(beta) = 0`` on the
    unused units and ``g_0 + eta^2 g_D = v_z^2`` (or ``0`` when no point is
    zero).  Returns ``None`` when the system is inconsistent.  Free
    variables are set to zero.
    """
    F, q, k = p.spec, p.spec.q, p.k
    if not (3 <= k and 2 * k < q + 1):
        raise OutOfTheoremRange(f"witness criterion needs 3 <= k < (q+1)/2 (k={k}, q={q})")
    D = q - 1 - 2 * k
    if D < 0:
        return None
    z = p.zero_index
    used = set(p.alpha)
    exps = np.arange(D + 1)
    rows, rhs = [], []
    for aj, vj in zip(p.alpha, p.v):
        if aj != 0:
            rows.append([F.pow1(aj, int(e)) for e in exps])
            rhs.append(F.mul1(vj, vj))
    for beta in range(1, q):
        if beta not in used:
            rows.append([F.pow1(beta, int(e)) for e in exps])
            rhs.append(0)
    boundary = [0] * (D + 1)
    boundary[0] = 1
    boundary[D] = F.add1(boundary[D], F.mul1(p.eta, p.eta))
    rows.append(boundary)
    rhs.append(0 if z is None else F.mul1(p.v[z], p.v[z]))
    aug = MatrixGF(F, np.column_stack([np.array(rows, dtype=np.int64), rhs]))
    R, _, pivots = rref_rank(aug)
    if D + 1 in pivots:
        return None
    g = [0] * (D + 1)
    for i, c in enumerate(pivots):
        g[c] = int(R.data[i, D + 1])
    return tuple(g)


@dataclass(frozen=True)
class LambdaResult:
    status: str  # "almost_self_dual" | "self_dual" | "fails"
    lam: int | None = None
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != "fails"


def lambda_self_dual_check(p: TgrsParams) -> LambdaResult:
    """Closed-form test for ``[2k+1, k]`` (0 last) or ``[2k, k]`` (no 0) codes."""
    F, n, k, q = p.spec, p.n, p.k, p.spec.q
    if not (3 <= k and 2 * k < q):
        raise WrongShape(f"need 3 <= k < q/2 (k={k}, q={q})")
    a, v = p.alpha, p.v
    sq = [F.mul1(x, x) for x in v]
    if n == 2 * k + 1 and a[-1] == 0:
        # v_j^2 = -lam / (alpha_j prod_{i != j, i < 2k} (alpha_j - alpha_i))
        def ratio(j):
            d = F.mul1(a[j], F.prod(F.sub1(a[j], a[i]) for i in range(2 * k) if i != j))
            return F.neg1(F.mul1(sq[j], d))

        lam = ratio(0)
        for j in range(1, 2 * k):
            if ratio(j) != lam:
                return LambdaResult("fails", reason=f"lambda differs at position {j}")
        inv_prod = F.inv1(F.prod(a[:2 * k]))
        rhs = F.mul1(lam, F.add1(F.neg1(inv_prod), F.mul1(p.eta, p.eta)))
        if rhs != sq[-1]:
            return LambdaResult("fails", reason="last multiplier relation fails")
        return LambdaResult("almost_self_dual", lam)
    if n == 2 * k and p.zero_index is None:
        if F.mul1(p.eta, p.eta) != F.inv1(F.prod(a)):
            return LambdaResult("fails", reason="eta^2 != prod alpha^{-1}")

        def ratio(j):
            d = F.mul1(a[j], F.prod(F.sub1(a[j], a[i]) for i in range(n) if i != j))
            return F.mul1(sq[j], d)

        lam = ratio(0)
        for j in range(1, n):
            if ratio(j) != lam:
                return LambdaResult("fails", reason=f"lambda differs at position {j}")
        return LambdaResult("self_dual", lam)
    raise WrongShape("need n = 2k+1 with alpha_n = 0, or n = 2k with 0 not a point")
