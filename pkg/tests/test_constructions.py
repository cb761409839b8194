import pytest

from twisted_rs import constructions as cons, lincode, tgrs
from twisted_rs.errors import (
    BadBeta, BadModulus, BadParameter, BadShape, EvenCharacteristic, ExcludedEta,
    NotSelfOrthogonal, OddCharacteristic, PointNotInSubfield, ZeroNotLast,
)
from twisted_rs.galois import field_of_order
from twisted_rs.matgf import det
from twisted_rs.tgrs import TgrsParams

F7, F8, F9, F11, F13, F25, F49 = (field_of_order(q) for q in (7, 8, 9, 11, 13, 25, 49))


def assert_shape(rep):
    n, k = rep.params.n, rep.params.k
    if rep.claimed == "almost_self_dual":
        assert n % 2 == 1 and k == (n - 1) // 2
    elif rep.claimed == "self_dual":
        assert n == 2 * k


def test_even_q_self_dual():
    rep = cons.even_q_family(F8, 3, variant="self_dual")
    assert rep.family == "CDA1" and rep.verified
    assert rep.params.to_dict() == {"k": 3, "alpha": [1, 2, 3, 4, 5, 6],
                                    "v": [4, 3, 2, 7, 6, 1], "eta": 5}
    assert_shape(rep)


def test_even_q_almost():
    rep = cons.even_q_family(F8, 3, [1, 2, 3, 4, 5, 6, 0])
    assert rep.family == "CDA" and rep.verified and rep.params.n == 7
    assert_shape(rep)


def test_even_q_errors():
    forbidden = F8.pow1(F8.inv1(F8.prod(range(1, 7))), 4)
    with pytest.raises(ExcludedEta):
        cons.even_q_family(F8, 3, [1, 2, 3, 4, 5, 6, 0], eta=forbidden)
    with pytest.raises(OddCharacteristic):
        cons.even_q_family(F7, 3)
    with pytest.raises(BadShape):
        cons.even_q_family(F8, 4)
    with pytest.raises(BadShape):
        cons.even_q_family(F8, 3, [0, 1, 2, 3, 4, 5, 6])


def test_even_q_both_branches_reachable():
    kinds = set()
    F16 = field_of_order(16)
    for start in range(1, 10):
        alpha = list(range(start, start + 6))
        kinds.add(cons.even_q_family(F16, 3, alpha, variant="self_dual").classification.kind)
        for eta in range(1, 16):
            try:
                rep = cons.even_q_family(F16, 3, alpha + [0], eta=eta)
            except ExcludedEta:
                continue
            assert rep.verified
            kinds.add(rep.classification.kind)
    assert kinds == {"MDS", "NMDS"}


def test_q1_examples():
    rep = cons.odd_q_full_support(F7, 3)
    assert rep.params.eta == 1 and rep.verified
    assert rep.classification.kind == "NMDS"
    assert lincode.brute_weights(rep.code).min_distance == 4
    rep = cons.odd_q_full_support(F11)
    assert rep.params.v[-1] == 2 and rep.params.eta == 5 and rep.verified
    with pytest.raises(BadParameter):
        cons.odd_q_full_support(F7, 1)
    with pytest.raises(EvenCharacteristic):
        cons.odd_q_full_support(F8)


def test_q2_examples():
    rep = cons.odd_q_units(F13)
    assert rep.params.eta == 5 and rep.verified and rep.classification.kind == "NMDS"
    rep = cons.odd_q_units(F9)
    assert F9.mul1(rep.params.eta, rep.params.eta) == F9.minus_one and rep.verified
    assert isinstance(cons.odd_q_units(F7), cons.NonExistence)
    assert isinstance(cons.odd_q_units(F11), cons.NonExistence)


@pytest.mark.parametrize("q", [7, 11])
def test_q2_obstruction_exhaustive(q):
    F = field_of_order(q)
    for eta in range(1, q):
        p = TgrsParams.make(F, (q - 1) // 2, range(1, q), eta=eta)
        assert not lincode.orthogonality_status(p.code()).self_dual


def test_q12_q13_examples():
    rep = cons.nonsquare_support(F13, 1)
    assert rep.params.eta == 5 and rep.params.n == 7 and rep.verified
    assert rep.classification.kind == "NMDS"
    g = tgrs.self_orthogonal_witness(rep.params)
    half = F13.neg1(F13.inv1(2))
    assert g == (F13.neg1(half),) + (0,) * 5 + (half,)
    rep = cons.nonsquare_support(F13, variant="self_dual")
    assert rep.params.alpha == (2, 5, 6, 7, 8, 11) and rep.params.eta == 1 and rep.verified
    assert rep.notes
    with pytest.raises(BadModulus):
        cons.nonsquare_support(F11)
    with pytest.raises(BadParameter):
        cons.nonsquare_support(field_of_order(5))


def test_q12_q13_larger_field():
    F17 = field_of_order(17)
    for variant in ("almost", "self_dual"):
        rep = cons.nonsquare_support(F17, variant=variant)
        assert rep.verified
        assert_shape(rep)


def test_subfield_family_in_range():
    rep = cons.subfield_family(F49, 3, variant="self_dual")
    assert rep.family == "PCD2" and rep.verified and rep.params.n == 6
    rep = cons.subfield_family(F49, 3)
    assert rep.family == "PCD1" and rep.verified and rep.params.n == 7


def test_subfield_family_errors():
    # k = 3 exceeds (p^m - 1)/2 = 2 for GF(25)
    with pytest.raises(BadShape):
        cons.subfield_family(F25, 3)
    big = next(x for x in range(F49.q) if x not in range(7))
    with pytest.raises(PointNotInSubfield):
        cons.subfield_family(F49, 3, [1, 2, 3, 4, 5, big, 0])
    # prod of nonzero GF(7) points is -1, a non-square mod 7: no eta is excluded
    for eta in range(1, 7):
        assert cons.subfield_family(F49, 3, eta=eta).verified
    F169 = field_of_order(169)
    alpha = [1, 2, 3, 4, 5, 9, 0]
    for eta in (1, 12):
        with pytest.raises(ExcludedEta):
            cons.subfield_family(F169, 3, alpha, eta=eta)
    rep = cons.subfield_family(F169, 3, alpha)
    assert rep.params.eta == 2 and rep.verified
    with pytest.raises(BadShape):
        cons.subfield_family(F13, 3)


def test_printed_even_q_self_dual_multipliers_fail():
    rep = cons.even_q_family(F8, 3, variant="self_dual")
    a = rep.params.alpha
    v = [F8.mul1(F8.inv1(a[j]),
                 F8.pow1(F8.inv1(F8.prod(F8.sub1(a[j], a[i]) for i in range(6) if i != j)), 4))
         for j in range(6)]
    assert not lincode.orthogonality_status(rep.params.with_v(v).code()).self_orthogonal


def test_printed_pcd1_last_multiplier_fails():
    rep = cons.subfield_family(F49, 3)
    p = rep.params
    ip = F49.inv1(F49.prod(a for a in p.alpha if a))
    v = list(p.v[:-1]) + [F49.sqrt1(F49.sub1(F49.mul1(p.eta, p.eta), ip))]
    assert not lincode.orthogonality_status(p.with_v(v).code()).self_orthogonal


def test_lcd_scale():
    for base in (cons.odd_q_full_support(F7, 3), cons.nonsquare_support(F13, 1)):
        rep = cons.lcd_scale(base.params, 2)
        C = rep.code
        assert rep.verified and rep.claimed == "lcd"
        assert int(det(C.gen @ C.gen.T)) != 0
        assert lincode.orthogonality_status(C).hull_dim == 0
    q1 = cons.odd_q_full_support(F7, 3).params
    for beta in (0, 1, 6):
        with pytest.raises(BadBeta):
            cons.lcd_scale(q1, beta)
    with pytest.raises(NotSelfOrthogonal):
        cons.lcd_scale(TgrsParams.make(F7, 3, tgrs.full_field_order(F7)), 2)
    shifted = TgrsParams.make(F7, 3, (0,) + q1.alpha[:-1], (q1.v[-1],) + q1.v[:-1], q1.eta)
    with pytest.raises(ZeroNotLast):
        cons.lcd_scale(shifted, 2)


def test_generic_lcd_path():
    for base in (cons.odd_q_units(F13), cons.even_q_family(F8, 3, variant="self_dual")):
        for beta in range(2, base.params.spec.q):
            if beta == base.params.spec.minus_one:
                continue
            C = cons.lcd_from_self_orthogonal(base.code, beta)
            assert lincode.orthogonality_status(C).lcd
