import random

import pytest

from topinv import catalog, intersection, zlinalg
from topinv import complexes as cx


def test_s4_empty_form(fixtures):
    K = fixtures["S4"]
    form = intersection.intersection_form(K)
    assert form.rank == 0
    assert form.gram == []
    assert intersection.signature(K) == 0
    assert intersection.signature_mod8(K) == 0
    assert intersection.form_even(K) is True


def test_cp2_form(fixtures):
    K = fixtures["CP2"]
    form = intersection.intersection_form(K)
    assert form.rank == 1
    assert form.gram in ([[1]], [[-1]])
    assert abs(intersection.signature(K)) == 1
    assert intersection.signature_mod8(K) in (1, 7)
    assert intersection.form_even(K) is False
    assert form.orientation_tag.startswith("+1 on ")


def test_s2xs2_form(fixtures):
    K = fixtures["S2xS2"]
    form = intersection.intersection_form(K)
    assert form.rank == 2
    # hyperbolic plane up to sign and basis order
    assert abs(zlinalg.det(form.gram)) == 1
    assert intersection.signature(K) == 0
    assert intersection.signature_mod8(K) == 0
    assert intersection.form_even(K) is True
    assert form.gram[0][0] == 0 and form.gram[1][1] == 0
    assert abs(form.gram[0][1]) == 1


def test_dimension_guard(fixtures):
    for name in ("S2", "S5", "T2"):
        with pytest.raises(cx.TopologyError, match="dimension not 4m"):
            intersection.intersection_form(fixtures[name])


def test_nonorientable_guard():
    # RP2 has the wrong dimension, so build a 4-dimensional non-orientable
    # example: RP2 x S2 via the staircase product
    K = cx.product_complex(catalog.projective_plane(), catalog.sphere(2))
    with pytest.raises(intersection.NonOrientableError):
        intersection.intersection_form(K)


def test_orientation_flip_negates_gram(fixtures):
    # pairing against -[K] negates every entry; signature flips sign
    for name in ("CP2", "S2xS2"):
        K = fixtures[name]
        form = intersection.intersection_form(K)
        fc = K.fundamental_class_z()
        neg = tuple(-v for v in fc)
        gram2 = []
        for x in form.basis:
            row = []
            for y in form.basis:
                cup = cx.cup_cochain_z(K, 2 * form.m, 2 * form.m, x, y)
                row.append(sum(a * b for a, b in zip(cup, neg)))
            gram2.append(row)
        assert gram2 == [[-v for v in row] for row in form.gram]


def test_panel_field_presence(fixtures):
    for name, K in fixtures.items():
        p = intersection.panel(K)
        assert p.dim == K.dimension
        form_expected = K.dimension % 4 == 0 and K.dimension > 0 and \
            p.orientable
        for field in ("even_form", "signature_mod8", "signature"):
            if form_expected:
                assert getattr(p, field) is not None, (name, field)
            else:
                assert getattr(p, field) is None, (name, field)


def test_panel_oracles(fixtures):
    p = intersection.panel(fixtures["CP2"])
    assert p.spin is False and p.spin_c is True
    assert p.even_form is False
    assert p.signature_mod8 in (1, 7)
    assert abs(p.signature) == 1
    q = intersection.panel(fixtures["S2xS2"])
    assert q.spin is True and q.even_form is True
    assert q.signature == 0 and q.signature_mod8 == 0
    assert intersection.panel(fixtures["T2"]).signature is None


def test_compare_distinguishes_cp2_from_s2xs2(fixtures):
    res = intersection.compare_panels(fixtures["CP2"], fixtures["S2xS2"])
    assert res.verdict == "distinguished"
    assert "sw_numbers" in res.differing
    assert "signature_mod8" in res.differing
    assert "spin" in res.differing
    assert not res.consistent


def test_compare_torus_klein(fixtures):
    res = intersection.compare_panels(fixtures["T2"], fixtures["K2"])
    assert res.verdict == "distinguished"
    assert "spin" in res.differing and "orientable" in res.differing
    assert "sw_numbers" not in res.differing


def test_compare_self_consistent(fixtures):
    for name, K in fixtures.items():
        res = intersection.compare_panels(K, K)
        assert res.consistent, name
        assert res.differing == [], name


def test_compare_dimension_mismatch(fixtures):
    res = intersection.compare_panels(fixtures["S2"], fixtures["S4"])
    assert res.verdict == "distinguished by dimension"
    assert res.differing == ["dim"]


def test_compare_symmetric(fixtures):
    names = list(fixtures)
    for a in names:
        for b in names:
            r1 = intersection.compare_panels(fixtures[a], fixtures[b])
            r2 = intersection.compare_panels(fixtures[b], fixtures[a])
            assert r1.verdict == r2.verdict, (a, b)
            assert set(r1.differing) == set(r2.differing), (a, b)


def test_signature_compared_up_to_sign(fixtures):
    # a mirror CP2 panel (signature -1) must not be distinguished from CP2
    p = intersection.panel(fixtures["CP2"])
    import dataclasses
    q = dataclasses.replace(
        p, signature=-p.signature,
        signature_mod8=(-p.signature_mod8) % 8)
    res = intersection.compare_panel_values(p, q)
    assert res.consistent
    assert res.differing == []


def test_forms_rationally_equivalent_both_signs(fixtures):
    CP2, S4, SS = fixtures["CP2"], fixtures["S4"], fixtures["S2xS2"]
    as_is, negated = intersection.forms_rationally_equivalent(CP2, CP2)
    assert as_is.equivalent
    assert not negated.equivalent          # <1> vs <-1> differ in signature
    assert negated.failing == "signature"
    as_is, negated = intersection.forms_rationally_equivalent(SS, SS)
    assert as_is.equivalent and negated.equivalent   # hyperbolic = -hyperbolic
    as_is, negated = intersection.forms_rationally_equivalent(CP2, SS)
    assert not as_is.equivalent and not negated.equivalent
    assert as_is.failing == "dimension"
    as_is, negated = intersection.forms_rationally_equivalent(S4, S4)
    assert as_is.equivalent and negated.equivalent   # empty forms


def test_panel_relabeling_invariant(fixtures):
    rng = random.Random(23)
    for name, K in fixtures.items():
        perm = list(K.vertices)
        rng.shuffle(perm)
        L = cx.relabel(K, dict(zip(K.vertices, perm)))
        res = intersection.compare_panels(K, L)
        assert res.consistent, (name, res.differing)
        assert res.differing == [], name
