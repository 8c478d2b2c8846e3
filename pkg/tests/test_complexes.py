import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topinv import catalog, f2linalg, zlinalg
from topinv import complexes as cx


def test_parse_roundtrip():
    K = catalog.projective_plane()
    text = cx.complex_text(K)
    K2 = cx.parse_complex(text)
    assert K2.maximal_simplices == K.maximal_simplices


def test_parse_comments_and_blank_lines():
    K = cx.parse_complex("# a triangle\n2\n\n0 1 2  # the only simplex\n")
    assert K.dimension == 2
    assert K.maximal_simplices == ((0, 1, 2),)


def test_parse_errors():
    with pytest.raises(cx.ParseError):
        cx.parse_complex("")
    with pytest.raises(cx.ParseError, match="dimension hint"):
        cx.parse_complex("0 1 2\n0 1 3\n")
    with pytest.raises(cx.ParseError, match="malformed simplex"):
        cx.parse_complex("2\n0 1 x\n")
    with pytest.raises(cx.ParseError, match="duplicate vertex"):
        cx.parse_complex("2\n0 1 1\n")
    with pytest.raises(cx.ParseError, match="no simplices"):
        cx.parse_complex("2\n")


def test_maximal_face_normalization():
    K = cx.SimplicialComplex([(0, 1, 2), (0, 1), (3, 4), (2, 1, 0)])
    assert K.maximal_simplices == ((0, 1, 2), (3, 4))
    assert K.dimension == 2


def test_boundary_squared_zero(fixtures):
    for K in fixtures.values():
        for k in range(1, K.dimension + 1):
            prod = zlinalg.matmul(K.boundary_z(k), K.boundary_z(k + 1))
            assert all(all(x == 0 for x in row) for row in prod)
            for col in K.coboundary_f2(k - 1):
                assert K.coboundary_apply_f2(k, col) == 0


HOMOLOGY_ORACLES = {
    "S2": [(1, ()), (0, ()), (1, ())],
    "S4": [(1, ()), (0, ()), (0, ()), (0, ()), (1, ())],
    "S5": [(1, ()), (0, ()), (0, ()), (0, ()), (0, ()), (1, ())],
    "RP2": [(1, ()), (0, (2,)), (0, ())],
    "T2": [(1, ()), (2, ()), (1, ())],
    "K2": [(1, ()), (1, (2,)), (0, ())],
    "CP2": [(1, ()), (0, ()), (1, ()), (0, ()), (1, ())],
    "S2xS2": [(1, ()), (0, ()), (2, ()), (0, ()), (1, ())],
}


def test_integral_homology_oracles(fixtures):
    for name, K in fixtures.items():
        got = [(h.betti, h.torsion) for h in cx.homology(K, "Z")]
        assert got == HOMOLOGY_ORACLES[name], name


def test_universal_coefficients_rank_identity(fixtures):
    # dim H_k(F2) = b_k + #2-torsion(H_k) + #2-torsion(H_{k-1})
    for name, K in fixtures.items():
        hz = cx.homology(K, "Z")
        hf = cx.homology(K, "F2")
        for k in range(K.dimension + 1):
            two = sum(1 for t in hz[k].torsion if t % 2 == 0)
            two_prev = sum(1 for t in hz[k - 1].torsion if t % 2 == 0) \
                if k >= 1 else 0
            assert hf[k].betti == hz[k].betti + two + two_prev, (name, k)


def test_euler_characteristic(fixtures):
    chi = {"S2": 2, "S4": 2, "S5": 0, "RP2": 1, "T2": 0, "K2": 0,
           "CP2": 3, "S2xS2": 4}
    for name, K in fixtures.items():
        assert K.euler_characteristic() == chi[name]


def test_cp2_f_vector(fixtures):
    K = fixtures["CP2"]
    assert [K.n_simplices(k) for k in range(5)] == [9, 36, 84, 90, 36]
    counts = {}
    for s in K.maximal_simplices:
        import itertools
        for f in itertools.combinations(s, 4):
            counts[f] = counts.get(f, 0) + 1
    assert all(v == 2 for v in counts.values())


def test_cup_product_unital_and_associative(fixtures):
    for name in ("RP2", "T2", "S2", "K2"):
        K = fixtures[name]
        n = K.dimension
        unit = cx.f2_class(K, 0, K.cohomology_f2(0).basis[0])
        all_classes = []
        for k in range(n + 1):
            for b in K.cohomology_f2(k).basis:
                all_classes.append(cx.f2_class(K, k, b))
        for x in all_classes:
            left = cx.cup_product(K, unit, x)
            assert left.coords == x.coords and left.degree == x.degree
        for x in all_classes:
            for y in all_classes:
                for z in all_classes:
                    if x.degree + y.degree + z.degree > n:
                        continue
                    a = cx.cup_product(K, cx.cup_product(K, x, y), z)
                    b = cx.cup_product(K, x, cx.cup_product(K, y, z))
                    assert a.coords == b.coords


def test_pairing_symmetric(fixtures):
    for K in fixtures.values():
        n = K.dimension
        for k in range(n + 1):
            for xb in K.cohomology_f2(k).basis:
                for yb in K.cohomology_f2(n - k).basis:
                    xy = cx.cup_cochain_f2(K, k, n - k, xb, yb)
                    yx = cx.cup_cochain_f2(K, n - k, k, yb, xb)
                    fc = K.fundamental_class_f2()
                    assert f2linalg.dot(xy, fc) == f2linalg.dot(yx, fc)


def test_fundamental_class_f2_is_all_top_simplices(fixtures):
    for K in fixtures.values():
        fc = K.fundamental_class_f2()
        assert fc == (1 << K.n_simplices(K.dimension)) - 1


def test_fundamental_class_z_sign_convention(fixtures):
    for name in ("S2", "S4", "T2", "CP2", "S2xS2"):
        K = fixtures[name]
        fz = K.fundamental_class_z()
        lead = next(x for x in fz if x)
        assert lead == 1
        assert all(abs(x) == 1 for x in fz)


def test_fundamental_class_z_fails_nonorientable(fixtures):
    for name in ("RP2", "K2"):
        with pytest.raises(cx.TopologyError, match="top homology"):
            fixtures[name].fundamental_class_z()


def test_is_poincare_on_fixtures(fixtures):
    for name, K in fixtures.items():
        rep = cx.is_poincare_f2(K)
        assert rep.perfect, name
        assert rep.first_degenerate is None
        assert rep.ranks == rep.dims


def test_fundamental_class_fails_on_disk():
    disk = cx.SimplicialComplex([(0, 1, 2)])
    with pytest.raises(cx.TopologyError, match="pseudo-manifold"):
        disk.fundamental_class_f2()


def test_is_poincare_fails_on_suspension_of_rp2():
    # suspension of RP2: closed 3-pseudo-manifold, H^1 = 0 but H^2 = F2
    K = catalog.projective_plane()
    a, b = max(K.vertices) + 1, max(K.vertices) + 2
    susp = cx.SimplicialComplex(
        [s + (a,) for s in K.maximal_simplices]
        + [s + (b,) for s in K.maximal_simplices])
    rep = cx.is_poincare_f2(susp)
    assert not rep.perfect
    assert rep.first_degenerate == 1


def test_pairing_requires_top_degree(fixtures):
    K = fixtures["T2"]
    one = cx.f2_class(K, 0, K.cohomology_f2(0).basis[0])
    with pytest.raises(ValueError, match="top-degree"):
        cx.pairing(K, one)


def test_relabel_preserves_homology_and_ranks(fixtures):
    rng = random.Random(99)
    for name, K in fixtures.items():
        perm = list(K.vertices)
        rng.shuffle(perm)
        mapping = dict(zip(K.vertices, perm))
        K2 = cx.relabel(K, mapping)
        assert cx.homology(K, "Z") == cx.homology(K2, "Z")
        assert cx.homology(K, "F2") == cx.homology(K2, "F2")
        assert cx.is_poincare_f2(K).ranks == cx.is_poincare_f2(K2).ranks


def test_z_cohomology_summands(fixtures):
    # H^2(RP2; Z) = Z/2, H^2(K2; Z) = Z/2, H^2(T2; Z) = Z
    assert fixtures["RP2"].cohomology_z(2).summands == (2,)
    assert fixtures["K2"].cohomology_z(2).summands == (2,)
    assert fixtures["T2"].cohomology_z(2).summands == (0,)


def test_z_class_coords_detect_coboundaries(fixtures):
    K = fixtures["T2"]
    h = K.cohomology_z(1)
    vec = K.coboundary_apply_z(0, tuple([3, -2] + [0] * (K.n_simplices(0) - 2)))
    assert h.is_zero(vec)
    rep = h.rep(0)
    assert not h.is_zero(rep)


def test_not_a_cocycle_rejected(fixtures):
    K = fixtures["T2"]
    mask = 1  # a single edge is not an F2 cocycle on the torus
    assert K.coboundary_apply_f2(1, mask) != 0
    with pytest.raises(ValueError, match="not a cocycle"):
        K.cohomology_f2(1).coords(mask)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 14 - 1),
       st.integers(min_value=0, max_value=2 ** 14 - 1))
def test_cup_cochain_bilinear_on_torus(xm, ym):
    K = catalog.torus()
    n1 = K.n_simplices(1)
    x1 = xm & ((1 << n1) - 1)
    y1 = ym & ((1 << n1) - 1)
    lhs = cx.cup_cochain_f2(K, 1, 1, x1 ^ y1, x1)
    rhs = cx.cup_cochain_f2(K, 1, 1, x1, x1) ^ cx.cup_cochain_f2(K, 1, 1, y1, x1)
    assert lhs == rhs


def test_product_complex_euler_multiplicative():
    s1 = catalog.sphere(1)
    t = cx.product_complex(s1, s1)
    assert t.euler_characteristic() == 0
    assert [(h.betti, h.torsion) for h in cx.homology(t, "Z")] == \
        [(1, ()), (2, ()), (1, ())]


def test_random_complexes_are_complexes(rng):
    for _ in range(10):
        K = catalog.random_complex(rng)
        assert K.dimension >= 1
        for k in range(1, K.dimension + 1):
            prod = zlinalg.matmul(K.boundary_z(k), K.boundary_z(k + 1))
            assert all(all(x == 0 for x in row) for row in prod)
