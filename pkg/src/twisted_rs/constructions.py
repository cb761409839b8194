"""Factories for self-dual, almost self-dual and LCD TGRS codes.

Each factory checks ``G G^T`` on the code it built before returning and
records the outcome in :attr:`ConstructionReport.verified`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import lincode
from .errors import (
    BadBeta,
    BadModulus,
    BadParameter,
    BadShape,
    EvenCharacteristic,
    ExcludedEta,
    NotSelfOrthogonal,
    OddCharacteristic,
    PointNotInSubfield,
    ZeroNotLast,
)
from .galois import FieldSpec, subfield_elements
from .lincode import LinearCode
from .matgf import MatrixGF
from .tgrs import Classification, TgrsParams, classify, full_field_order, units_order

FAMILIES = ("CDA", "CDA1", "Q1", "Q2", "Q12", "Q13", "PCD1", "PCD2", "LCD_SCALE")


@dataclass(frozen=True)
class ConstructionReport:
    params: TgrsParams
    family: str
    claimed: str  # "self_dual" | "almost_self_dual" | "lcd"
    classification: Classification
    verified: bool
    # MDS/NMDS branch fixed by the family, when it fixes one
    expected_kind: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def code(self) -> LinearCode:
        return self.params.code()


@dataclass(frozen=True)
class NonExistence:
    family: str
    q: int
    reason: str


def _report(p: TgrsParams, family: str, claimed: str, expected_kind: str | None = None,
            notes: tuple[str, ...] = ()) -> ConstructionReport:
    status = lincode.orthogonality_status(p.code())
    return ConstructionReport(p, family, claimed, classify(p), status.holds(claimed),
                              expected_kind, notes)


def _diff_product(F: FieldSpec, alpha: Sequence[int], j: int, upto: int) -> int:
    """``alpha_j * prod_{i < upto, i != j} (alpha_j - alpha_i)``."""
    aj = alpha[j]
    return F.mul1(aj, F.prod(F.sub1(aj, alpha[i]) for i in range(upto) if i != j))


def _inv_prod_nonzero(F: FieldSpec, alpha: Sequence[int]) -> int:
    return F.inv1(F.prod(a for a in alpha if a != 0))


def _check_points(F: FieldSpec, k: int, alpha: Sequence[int], variant: str) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(set(alpha)) != len(alpha) or any(not 0 <= a < F.q for a in alpha):
        raise BadShape(f"evaluation points must be distinct field reps: {list(alpha)}")
    if variant == "almost":
        if len(alpha) != 2 * k + 1:
            raise BadShape(f"almost self-dual variant needs n = 2k+1 = {2 * k + 1} points")
        if alpha[-1] != 0 or 0 in alpha[:-1]:
            raise BadShape("almost self-dual variant needs 0 as the last point")
    elif variant == "self_dual":
        if len(alpha) != 2 * k:
            raise BadShape(f"self-dual variant needs n = 2k = {2 * k} points")
        if 0 in alpha:
            raise BadShape("self-dual variant excludes 0 as a point")
    else:
        raise BadShape(f"unknown variant {variant!r}")
    return alpha


def _default_points(pool: Sequence[int], k: int, variant: str) -> tuple[int, ...]:
    units = [a for a in pool if a != 0][: 2 * k]
    if len(units) < 2 * k:
        raise BadShape(f"only {len(units)} nonzero points available, need {2 * k}")
    return tuple(units) + ((0,) if variant == "almost" else ())


def _normalise_variant(variant: str) -> str:
    return variant.replace("-", "_")


# -- even q -------------------------------------------------------------------
def even_q_family(spec: FieldSpec, k: int, alpha: Sequence[int] | None = None,
                  eta: int | None = None, variant: str = "almost") -> ConstructionReport:
    """Almost self-dual (family CDA) or self-dual (CDA1) codes for even ``q``.

    Square roots in characteristic 2 are ``x -> x^{q/2}``.
    """
    F, q = spec, spec.q
    if F.p != 2:
        raise OddCharacteristic(f"q = {q} is odd")
    variant = _normalise_variant(variant)
    if not 3 <= k <= q // 2 - 1:
        raise BadShape(f"need 3 <= k <= q/2 - 1 (k={k}, q={q})")
    if alpha is None:
        alpha = _default_points(range(1, q), k, variant)
    alpha = _check_points(F, k, alpha, variant)
    half = q // 2
    v = [F.pow1(F.inv1(_diff_product(F, alpha, j, 2 * k)), half) for j in range(2 * k)]
    ip = _inv_prod_nonzero(F, alpha)
    if variant == "self_dual":
        eta = F.pow1(ip, half)
        return _report(TgrsParams(F, k, alpha, v, eta), "CDA1", "self_dual")
    forbidden = F.pow1(ip, half)
    if eta is None:
        eta = next(e for e in range(1, q) if e != forbidden)
    eta = int(eta)
    if not 0 < eta < q:
        raise BadParameter(f"eta must be a nonzero rep, got {eta}")
    if eta == forbidden:
        raise ExcludedEta(f"eta = {eta} makes the last multiplier zero")
    v.append(F.pow1(F.add1(ip, F.mul1(eta, eta)), half))
    return _report(TgrsParams(F, k, alpha, v, eta), "CDA", "almost_self_dual")


# -- odd q ----------------------------------------------------------------------
def _require_odd(F: FieldSpec) -> None:
    if F.p == 2:
        raise EvenCharacteristic(f"q = {F.q} is even")


def odd_q_full_support(spec: FieldSpec, a: int | None = None) -> ConstructionReport:
    """``[q, (q-1)/2]`` almost self-dual NMDS code on all of ``F_q`` (family Q1)."""
    F, q = spec, spec.q
    _require_odd(F)
    if q < 7:
        raise BadParameter(f"need q >= 7 so that k = (q-1)/2 >= 3 (q={q})")

    def eta_for(x: int) -> int | None:
        t = F.sub1(F.mul1(x, x), 1)
        return F.sqrt1(t) if t != 0 else None

    if a is None:
        a = next(x for x in range(2, q) if eta_for(x) is not None)
    a = int(a)
    if not 0 < a < q:
        raise BadParameter(f"a must be a nonzero rep, got {a}")
    eta = eta_for(a)
    if eta is None:
        raise BadParameter(f"a^2 - 1 is zero or a non-square for a = {a}")
    p = TgrsParams(F, (q - 1) // 2, full_field_order(F), (1,) * (q - 1) + (a,), eta)
    return _report(p, "Q1", "almost_self_dual", expected_kind="NMDS")


def odd_q_units(spec: FieldSpec) -> ConstructionReport | NonExistence:
    """``[q-1, (q-1)/2]`` self-dual NMDS code on ``F_q^*`` (family Q2), if any."""
    F, q = spec, spec.q
    _require_odd(F)
    if q < 7:
        raise BadParameter(f"need q >= 7 so that k = (q-1)/2 >= 3 (q={q})")
    if q % 4 == 3:
        return NonExistence("Q2", q, "chi(-1) = -1: eta^2 = -1 has no solution")
    eta = F.sqrt1(F.minus_one)
    p = TgrsParams(F, (q - 1) // 2, units_order(F), (1,) * (q - 1), eta)
    return _report(p, "Q2", "self_dual", expected_kind="NMDS")


def _nonsquares(F: FieldSpec) -> tuple[int, ...]:
    return tuple(x for x in range(1, F.q) if F.chi1(x) == -1)


def nonsquare_support(spec: FieldSpec, a: int | None = None,
                      variant: str = "almost") -> ConstructionReport:
    """Codes supported on the non-squares, for ``q = 1 (mod 4)``.

    ``almost`` (family Q12): non-squares plus 0, ``v = (1,...,1,a)`` and
    ``eta^2 = 1 - 2a^2``.  ``self_dual`` (Q13): non-squares, ``v = 1``, ``eta = 1``.
    """
    F, q = spec, spec.q
    _require_odd(F)
    if q % 4 != 1:
        raise BadModulus(f"q = {q} is not 1 mod 4")
    k = (q - 1) // 4
    if k < 3:
        raise BadParameter(f"k = (q-1)/4 = {k} < 3; need q >= 13")
    variant = _normalise_variant(variant)
    ns = _nonsquares(F)
    if variant == "self_dual":
        note = ("MDS/NMDS split evaluated at the fixed twist eta = 1",)
        return _report(TgrsParams(F, k, ns, (1,) * len(ns), 1), "Q13", "self_dual", notes=note)
    if variant != "almost":
        raise BadShape(f"unknown variant {variant!r}")

    def eta_for(x: int) -> int | None:
        t = F.sub1(1, F.mul1(2, F.mul1(x, x)))
        return F.sqrt1(t) if t != 0 else None

    if a is None:
        a = next(x for x in range(1, q) if eta_for(x) is not None)
    a = int(a)
    if not 0 < a < q:
        raise BadParameter(f"a must be a nonzero rep, got {a}")
    eta = eta_for(a)
    if eta is None:
        raise BadParameter(f"1 - 2a^2 is zero or a non-square for a = {a}")
    p = TgrsParams(F, k, ns + (0,), (1,) * len(ns) + (a,), eta)
    return _report(p, "Q12", "almost_self_dual")


# -- subfield evaluation sets -------------------------------------------------
def subfield_family(spec: FieldSpec, k: int, alpha: Sequence[int] | None = None,
                    eta: int | None = None, variant: str = "almost") -> ConstructionReport:
    """Points from ``F_{p^m}`` inside ``F_{p^{2m}}``; families PCD1 / PCD2.

    Every unit of the subfield is a square in the big field, so each
    multiplier below exists.  The last multiplier of the almost variant
    satisfies ``v^2 = prod alpha^{-1} - eta^2``.
    """
    F = spec
    _require_odd(F)
    if F.m % 2:
        raise BadShape(f"q = {F.q} is not an even power of {F.p}")
    sub = [int(x) for x in subfield_elements(F, F.m // 2)]
    subset = set(sub)
    r = F.p ** (F.m // 2)
    variant = _normalise_variant(variant)
    if not 3 <= k <= (r - 1) // 2:
        raise BadShape(f"need 3 <= k <= (p^m - 1)/2 = {(r - 1) // 2} (k={k})")
    if alpha is None:
        alpha = _default_points(sub, k, variant)
    alpha = tuple(int(x) for x in alpha)
    outside = [x for x in alpha if x not in subset]
    if outside:
        raise PointNotInSubfield(f"points {outside} are not in the subfield of order {r}")
    alpha = _check_points(F, k, alpha, variant)
    v = [F.sqrt1(F.inv1(_diff_product(F, alpha, j, 2 * k))) for j in range(2 * k)]
    ip = _inv_prod_nonzero(F, alpha)
    if variant == "self_dual":
        eta = F.sqrt1(ip)
        return _report(TgrsParams(F, k, alpha, v, eta), "PCD2", "self_dual")
    if eta is None:
        eta = next(e for e in sub if e != 0 and F.mul1(e, e) != ip)
    eta = int(eta)
    if eta == 0 or eta not in subset:
        raise BadParameter(f"eta = {eta} must be a nonzero subfield element")
    if F.mul1(eta, eta) == ip:
        raise ExcludedEta(f"eta = {eta} squares to prod alpha^-1")
    v.append(F.sqrt1(F.sub1(ip, F.mul1(eta, eta))))
    return _report(TgrsParams(F, k, alpha, v, eta), "PCD1", "almost_self_dual")


# -- LCD ----------------------------------------------------------------------
def _check_beta(F: FieldSpec, beta: int) -> int:
    beta = int(beta)
    if F.q <= 3:
        raise BadBeta(f"no admissible beta in GF({F.q})")
    if beta in (0, 1, F.minus_one) or not 0 <= beta < F.q:
        raise BadBeta(f"beta must avoid 0, 1 and -1 (got {beta})")
    return beta


def lcd_from_self_orthogonal(C: LinearCode, beta: int) -> LinearCode:
    """Scale the coordinates outside an information set by ``beta``.

    With ``G G^T = 0`` the scaled generator satisfies
    ``G' G'^T = (1 - beta^2) J J^T`` where ``J`` holds the information-set
    columns, so the result is LCD.
    """
    F = C.field
    beta = _check_beta(F, beta)
    if not lincode.orthogonality_status(C).self_orthogonal:
        raise NotSelfOrthogonal("input code is not self-orthogonal")
    info = set(lincode.information_set(C))
    scale = tuple(1 if j in info else beta for j in range(C.n))
    return lincode.apply_perm_scale(C, lincode.PermScale(tuple(range(C.n)), scale))


def lcd_scale(p: TgrsParams, beta: int) -> ConstructionReport:
    """LCD code ``C_{k,n}(alpha, w * v, eta)`` with ``w = (beta^{n-k}, 1^k)``."""
    F = p.spec
    beta = _check_beta(F, beta)
    if p.alpha[-1] != 0:
        raise ZeroNotLast("the last evaluation point must be 0")
    if not lincode.orthogonality_status(p.code()).self_orthogonal:
        raise NotSelfOrthogonal("input code is not self-orthogonal")
    w = np.array([beta] * (p.n - p.k) + [1] * p.k)
    new_v = tuple(int(x) for x in F.mul(w, np.array(p.v)))
    return _report(p.with_v(new_v), "LCD_SCALE", "lcd")


def gram_matrix(p: TgrsParams) -> MatrixGF:
    C = p.code()
    return C.gen @ C.gen.T
