import pytest

from qlike.bundles import SplittingType, family_span_equal
from qlike.catalog import (adjoint_expected, build_adjoint, build_so,
                           build_sp, build_veronese)
from qlike.errors import InvalidInput
from qlike.forms import Z0, Z1, parse_form
from qlike.lie import sl_algebra, principal_sl2_matrices, Sl2Embedding
from qlike.orbit import (GoodQuadruple, dimension_report, normal_bundle,
                         orbit_tangent_family, validate_good_quadruple,
                         veronese_curve)
from qlike.scalars import ONE, Scalar, ZERO


def test_nilpotent_family_squares_to_zero():
    # A(z) = [[z0 z1, -z0^2], [z1^2, -z0 z1]] has A(z)^2 = 0 identically
    a = [[Z0 * Z1, -(Z0 * Z0)], [Z1 * Z1, -(Z0 * Z1)]]
    for i in range(2):
        for j in range(2):
            s = a[i][0] * a[0][j] + a[i][1] * a[1][j]
            assert s.is_zero()
    # and parametrizes the full projectivized nilpotent cone: the image
    # satisfies the cone equation diag^2 + offdiag-product = 0 and is a
    # degree-2 injective curve into the conic, hence onto
    diag, up, low = Z0 * Z1, -(Z0 * Z0), Z1 * Z1
    assert (diag * diag + up * low).is_zero()


def test_veronese_curve_defining_rep():
    q = build_veronese(1)
    d, v_u, v_e = veronese_curve(q)
    assert d == 1
    assert v_e == [Z0, Z1]


def test_veronese_curve_k2_is_square_of_line():
    q = build_veronese(2)
    d, v_u, v_e = veronese_curve(q)
    assert d == 2
    # kernel vector is proportional to the coefficient square of (z0, z1):
    # check rank-one of all 2x2 two-point minors against (z0^2, z0 z1, z1^2)
    square = [parse_form("z0^2"), parse_form("z0*z1"), parse_form("z1^2")]
    for pts in ((1, 0), (0, 1), (1, 1), (1, -1), (2, 3)):
        vals = [f.evaluate(*pts) for f in v_e]
        ref = [f.evaluate(*pts) for f in square]
        for i in range(3):
            for j in range(3):
                assert (vals[i] * ref[j] - vals[j] * ref[i]).is_zero()


def test_adjoint_sl2_curve_is_nilpotent_family():
    q = build_adjoint("sl(2)", "principal")
    d, v_u, v_e = veronese_curve(q)
    assert d == 2
    fams = orbit_tangent_family(q)
    # the orbit equals the curve: W = L'
    assert fams.w.rank == 2
    assert family_span_equal(fams.w, fams.l_prime)


def test_orbit_tangent_veronese2_full():
    q = build_veronese(2)
    fams = orbit_tangent_family(q)
    assert fams.w.rank == 3
    assert list(fams.w.degrees) == [0, 0, 0]


def test_validate_diagnostics_u_not_invariant():
    ma = sl_algebra(3)
    e, h, f = principal_sl2_matrices(3)
    tau = Sl2Embedding(ma.algebra, ma.coordinates_of_matrix(e),
                       ma.coordinates_of_matrix(h),
                       ma.coordinates_of_matrix(f))
    # a single weight line is not invariant
    u = [tuple([ONE, ZERO, ZERO])]
    q = GoodQuadruple(ma.algebra, ma.defining_representation(), tau, tuple(u))
    report = validate_good_quadruple(q)
    assert not report["valid"]
    assert any(c["name"] == "u-invariant" and c["status"] == "fail"
               for c in report["checks"])


def test_validate_diagnostics_trivial_action():
    ma = sl_algebra(4)
    # embed sl(2) in the top-left block; U = the bottom-right weight space
    e = [[ZERO] * 4 for _ in range(4)]
    e[0][1] = ONE
    h = [[ZERO] * 4 for _ in range(4)]
    h[0][0] = ONE
    h[1][1] = Scalar(-1)
    f = [[ZERO] * 4 for _ in range(4)]
    f[1][0] = ONE
    tau = Sl2Embedding(ma.algebra, ma.coordinates_of_matrix(e),
                       ma.coordinates_of_matrix(h),
                       ma.coordinates_of_matrix(f))
    u = [tuple([ZERO, ZERO, ONE, ZERO]), tuple([ZERO, ZERO, ZERO, ONE])]
    q = GoodQuadruple(ma.algebra, ma.defining_representation(), tau, tuple(u))
    report = validate_good_quadruple(q)
    assert not report["valid"]
    assert any(c["name"] == "u-irreducible-nontrivial"
               and c["status"] == "fail" for c in report["checks"])


def test_normal_bundle_veronese_formula_small():
    for k, expected in ((1, []), (2, [4]), (3, [5, 5])):
        report = normal_bundle(build_veronese(k),
                               expected=SplittingType.of(expected))
        assert report.match is not False
        assert report.normal == SplittingType.of(expected)
        assert report.dim_z == k


def test_normal_bundle_adjoint_live_formula():
    q = build_adjoint("sl(3)", "minimal")
    expected = adjoint_expected(q)
    assert expected == SplittingType.of([1, 1])
    report = normal_bundle(q, expected=expected)
    assert report.match
    dims = dimension_report(q, report)
    assert dims["orbit_dim"] == 4 and dims["dim_Z"] == 3
    assert dims["orbit_consistency"]


def test_euler_relation_checked_on_curves():
    q = build_veronese(3)
    fams = orbit_tangent_family(q)
    d = fams.degree
    for f, a, b in zip(fams.curve, [g.d_z0() for g in fams.curve],
                       [g.d_z1() for g in fams.curve]):
        assert f.scale(Scalar(d)) == Z0 * a + Z1 * b


def test_so5_and_sp4_agree():
    r1 = normal_bundle(build_so(5))
    r2 = normal_bundle(build_sp(4))
    assert r1.normal == r2.normal == SplittingType.of([2, 2])
    assert r1.dim_z == r2.dim_z == 3
