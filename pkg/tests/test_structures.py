import random

import pytest

from qlike.bundles import SplittingType
from qlike.catalog import (build_conic_r3, build_quaternionic,
                           build_twisted_plane_c4,
                           _left_quaternion_matrices)
from qlike.errors import InvalidInput
from qlike.forms import BinaryForm, Z0, Z1, parse_form
from qlike.linalg import identity, mat_vec, rank
from qlike.polymatrix import PolyMatrix
from qlike.sampling import random_structures
from qlike.scalars import ONE, Scalar, ZERO
from qlike.structures import (QLikeStructure, analyze, check_morphism,
                              dualize, heaven_data, minus_data, minus_family,
                              validate, verify_factorization)
from qlike.bundles import family_span_equal, saturate


CONIC = build_conic_r3()
QUAT = build_quaternionic(1)
PLANE = build_twisted_plane_c4()


def check_status(report, name):
    return next(c.status for c in report.checks if c.name == name)


def test_validate_fixtures_pass():
    for s in (CONIC, QUAT, PLANE):
        report = validate(s)
        assert report.passed, report.to_json()


def test_validate_constant_map_fails():
    spanning = PolyMatrix.from_columns(3, [[parse_form("1"), parse_form("0"),
                                            parse_form("0")]])
    s = QLikeStructure(3, 1, spanning, None, complex_mode=True)
    report = validate(s)
    assert check_status(report, "immersion") == "fail"


def test_validate_degenerate_codimension():
    spanning = PolyMatrix.from_columns(2, [[Z0, Z1], [Z1, Z0]])
    s = QLikeStructure(2, 2, spanning, None, complex_mode=True)
    report = validate(s)
    assert not report.passed
    assert check_status(report, "codimension") == "fail"


def test_validate_rank_mismatch():
    spanning = PolyMatrix.from_columns(3, [[Z0, Z1, BinaryForm.zero(1)],
                                           [Z0, Z1, BinaryForm.zero(1)]])
    s = QLikeStructure(3, 2, spanning, None, complex_mode=True)
    report = validate(s)
    assert check_status(report, "generic-rank") == "fail"


def test_validate_noninjective_curve():
    # a double cover of a line: (z0^2 + z1^2, 2 z0 z1) type column in C^3
    col = [parse_form("z0^2"), parse_form("z1^2"), BinaryForm.zero(2)]
    s = QLikeStructure(3, 1, PolyMatrix.from_columns(3, [col]), None,
                       complex_mode=True)
    report = validate(s)
    assert check_status(report, "injectivity") == "fail"


def test_reality_check_conic():
    report = validate(CONIC)
    assert check_status(report, "reality") == "pass"
    # break the conjugation: identity does not preserve the conic family
    bad = QLikeStructure(3, 1, CONIC.spanning, None, complex_mode=False)
    report_bad = validate(bad)
    assert check_status(report_bad, "reality") == "fail"


def test_analyze_labels_and_flags():
    a_conic = analyze(CONIC)
    assert a_conic.label == "rho-star-quaternionic"
    assert a_conic.flags["cr"] and not a_conic.flags["co_cr"]
    assert a_conic.u_minus == SplittingType.of([-2])
    assert a_conic.u_plus == SplittingType.of([1, 1])

    a_quat = analyze(QUAT)
    assert a_quat.label == "quaternionic"
    assert a_quat.u_minus == SplittingType.of([-1, -1])
    assert a_quat.u_plus == SplittingType.of([1, 1])

    a_plane = analyze(PLANE)
    assert a_plane.label == "general"
    assert a_plane.u_minus == SplittingType.of([-2])
    assert a_plane.u_plus == SplittingType.of([1, 1, 0])


def test_heaven_data_dimension_table():
    hd = heaven_data(QUAT)
    assert (hd.u_plus_dim, hd.e_plus_dim) == (4, 4)
    assert rank(hd.psi_plus) == 4                      # bijective

    hd_c = heaven_data(CONIC)
    assert (hd_c.u_plus_dim, hd_c.e_plus_dim) == (4, 4)
    assert rank(hd_c.psi_plus) == 3                    # injective, coker 1

    hd_p = heaven_data(PLANE)
    assert (hd_p.u_plus_dim, hd_p.e_plus_dim) == (5, 4)
    assert rank(hd_p.psi_plus) == 4                    # injective, coker 1


def test_minus_data_dimension_table():
    md_q = minus_data(QUAT)
    assert md_q.u_minus_dim == 4
    assert rank(md_q.psi_minus) == 4                   # bijective

    md_c = minus_data(CONIC)
    assert md_c.u_minus_dim == 3
    assert rank(md_c.psi_minus) == 3                   # bijective

    md_p = minus_data(PLANE)
    assert md_p.u_minus_dim == 3
    assert rank(md_p.psi_minus) == 3                   # injective
    # image is the first three coordinates
    for v in ([ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]):
        pass
    image_rows = [[md_p.psi_minus[i][j] for i in range(4)] for j in range(3)]
    assert all(row[3].is_zero() for row in image_rows)


def test_factorization_fixture_tables():
    rep_q = verify_factorization(QUAT)
    assert rep_q.passed and rep_q.iso_found
    assert rep_q.dims["ker_psi_minus"] == 0
    assert rep_q.dims["coker_rho_plus"] == 0

    rep_c = verify_factorization(CONIC)
    assert rep_c.passed
    assert rep_c.dims["ker_psi_minus"] == rep_c.dims["ker_rho_plus"] == 0
    assert rep_c.dims["ker_rho_minus_star"] == rep_c.dims["ker_psi_plus"] == 0
    assert rep_c.dims["coker_rho_minus_star"] == \
        rep_c.dims["coker_psi_plus"] == 1
    assert rep_c.dims["coker_psi_minus"] == rep_c.dims["coker_rho_plus"] == 0

    rep_p = verify_factorization(PLANE)
    assert rep_p.passed and rep_p.solvable


def test_serre_dimension_identity():
    for s in (CONIC, QUAT, PLANE):
        hd = heaven_data(s)
        md = minus_data(s)
        assert hd.h_plus_dim == md.h_minus_dim
        assert hd.e_plus_dim == md.e_minus_dim


def test_dualize_involution_and_swap():
    for s in (CONIC, QUAT, PLANE):
        d = dualize(s)
        dd = dualize(d)
        assert family_span_equal(minus_family(dd), minus_family(s))
    a_dual = analyze(dualize(CONIC))
    assert a_dual.label == "rho-quaternionic"
    assert a_dual.flags["co_cr"] and not a_dual.flags["cr"]
    assert a_dual.u_minus == SplittingType.of([-1, -1])
    assert a_dual.u_plus == SplittingType.of([2])


def test_dual_conjugation_is_inverse_transpose():
    d = dualize(CONIC)
    assert d.conjugation is not None
    report = validate(d)
    assert report.passed


def test_real_mode_conjugation_squares():
    hd = heaven_data(QUAT)
    assert hd.conj_u_plus is not None
    assert hd.conj_h_plus is not None
    assert hd.conj_e_plus is not None
    hd_c = heaven_data(CONIC)
    assert hd_c.conj_e_plus is not None


def test_morphism_identity():
    ident = identity(3)
    assert check_morphism(CONIC, CONIC, ident, [[1, 0], [0, 1]])


def test_morphism_to_section_structure():
    # the plus map into the section space, with the induced line-pair family
    hd = heaven_data(CONIC)
    # U_plus = pairs (f1, f2) of linear forms; sections vanishing at z are
    # spanned by (z1 w0 - z0 w1) in each slot: a degree-1 spanning matrix
    cols = []
    for slot in range(2):
        col = [BinaryForm.zero(1)] * 4
        col[2 * slot] = Z1
        col[2 * slot + 1] = -Z0
        cols.append(col)
    target = QLikeStructure(4, 2, PolyMatrix.from_columns(4, cols),
                            None, complex_mode=True)
    source = QLikeStructure(3, 1, CONIC.spanning, None, complex_mode=True)
    assert check_morphism(source, target, hd.psi_plus, [[1, 0], [0, 1]])


def test_morphism_quaternion_examples():
    mi, mj, mk = _left_quaternion_matrices(1)
    ident = identity(4)
    # right multiplication by j commutes with the left structure maps
    rj = [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]
    assert check_morphism(QUAT, QUAT, rj, [[1, 0], [0, 1]])
    # left multiplication by j moves the sphere by the swap Moebius map
    assert check_morphism(QUAT, QUAT, mj, [[0, 1], [1, 0]])
    assert not check_morphism(QUAT, QUAT, mj, [[1, 0], [0, 1]])


def test_morphism_requires_equivariant_t_in_real_mode():
    with pytest.raises(InvalidInput):
        check_morphism(QUAT, QUAT, identity(4), [[1, 1], [0, 1]])


def test_random_structures_all_valid_and_factorize():
    structures = random_structures(123, 6)
    for s in structures:
        report = validate(s)
        assert report.passed
        fact = verify_factorization(s)
        assert fact.solvable
        assert all(fact.facts.values()), fact.facts


def test_heaven_of_rho_quaternionic_is_bijective():
    # rho-quaternionic structures have psi_plus bijective (idempotent heaven)
    structures = random_structures(77, 4)
    for s in structures:
        a = analyze(s)
        if a.label in ("quaternionic", "rho-quaternionic"):
            hd = heaven_data(s)
            assert rank(hd.psi_plus) == hd.u_plus_dim == s.dim


def test_structure_json_round_trip():
    for s in (CONIC, QUAT, PLANE):
        back = QLikeStructure.from_json(s.to_json())
        assert back.dim == s.dim and back.k == s.k
        assert back.complex_mode == s.complex_mode
        assert family_span_equal(minus_family(back), minus_family(s))
