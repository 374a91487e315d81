import random

import pytest

from qlike.errors import InvalidInput
from qlike.lie import (LieAlgebra, Representation, Sl2Embedding,
                       builtin_algebra, is_ad_nilpotent, jacobson_morozov,
                       principal_sl2_matrices, sl2_decompose, sl_algebra,
                       so_algebra, sp_algebra, validate_lie,
                       wedge_square_representation)
from qlike.linalg import identity, inverse, mat_mul, rank, solve
from qlike.scalars import ONE, Scalar, ZERO


def sl2_structure_constants():
    # basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h
    return LieAlgebra(3, {
        (0, 1): [Scalar(-2), ZERO, ZERO],
        (0, 2): [ZERO, ONE, ZERO],
        (1, 2): [ZERO, ZERO, Scalar(-2)],
    }, "sl2")


def test_validate_lie_sl2():
    rep = validate_lie(sl2_structure_constants())
    assert rep["jacobi"] and rep["semisimple"]


def test_validate_lie_heisenberg():
    # [x, y] = z, z central: Jacobi holds, Killing form vanishes
    heis = LieAlgebra(3, {(0, 1): [ZERO, ZERO, ONE]}, "heisenberg")
    rep = validate_lie(heis)
    assert rep["jacobi"]
    assert rep["killing_rank"] == 0
    assert not rep["semisimple"]


def test_validate_lie_perturbed_constants_fail_jacobi():
    bad = LieAlgebra(3, {
        (0, 1): [Scalar(-1), ZERO, ZERO],   # perturbed [e,h]
        (0, 2): [ZERO, ONE, ZERO],
        (1, 2): [ZERO, ZERO, Scalar(-2)],
    }, "broken")
    rep = validate_lie(bad)
    assert not rep["jacobi"]


def test_builtin_algebras_are_semisimple():
    for name in ("sl(2)", "sl(3)", "so(5)", "sp(4)"):
        ma = builtin_algebra(name)
        rep = validate_lie(ma.algebra)
        assert rep["jacobi"] and rep["semisimple"], name


def test_defining_representations_satisfy_identity():
    for name in ("sl(3)", "so(5)", "sp(4)"):
        ma = builtin_algebra(name)
        assert ma.defining_representation().check_identity()


def test_jacobson_morozov_sl2_standard():
    ma = sl_algebra(2)
    y = ma.coordinates_of_matrix([[ZERO, ZERO], [ONE, ZERO]])
    emb = jacobson_morozov(ma.algebra, y, assume_semisimple=True)
    assert emb.check()
    assert list(emb.f) == list(y)
    h_mat = ma.matrix_of(list(emb.h))
    assert [h_mat[0][0], h_mat[1][1]] == [ONE, Scalar(-1)]


def diagonal_of_h(ma, emb):
    h = ma.matrix_of(list(emb.h))
    n = len(h)
    return sorted((h[i][i].re for i in range(n)), reverse=True)


def test_jacobson_morozov_sl3_principal():
    ma = sl_algebra(3)
    m = [[ZERO] * 3 for _ in range(3)]
    m[1][0] = ONE
    m[2][1] = ONE
    emb = jacobson_morozov(ma.algebra, ma.coordinates_of_matrix(m),
                           assume_semisimple=True)
    assert emb.check()
    assert diagonal_of_h(ma, emb) == [2, 0, -2]


def test_jacobson_morozov_sl3_minimal():
    ma = sl_algebra(3)
    m = [[ZERO] * 3 for _ in range(3)]
    m[2][0] = ONE
    emb = jacobson_morozov(ma.algebra, ma.coordinates_of_matrix(m),
                           assume_semisimple=True)
    assert emb.check()
    assert diagonal_of_h(ma, emb) == [1, 0, -1]


def test_jacobson_morozov_rejects_nonnilpotent():
    ma = sl_algebra(2)
    h = ma.coordinates_of_matrix([[ONE, ZERO], [ZERO, Scalar(-1)]])
    with pytest.raises(InvalidInput):
        jacobson_morozov(ma.algebra, h, assume_semisimple=True)


def test_sl2_decompose_adjoint_of_sl2():
    ma = sl_algebra(2)
    e, h, f = principal_sl2_matrices(2)
    emb = Sl2Embedding(ma.algebra, ma.coordinates_of_matrix(e),
                       ma.coordinates_of_matrix(h),
                       ma.coordinates_of_matrix(f))
    mult = sl2_decompose(ma.algebra.adjoint_representation(), emb)
    assert mult == {2: 1}


def test_sl2_decompose_adjoint_sl3():
    ma = sl_algebra(3)
    m = [[ZERO] * 3 for _ in range(3)]
    m[1][0] = ONE
    m[2][1] = ONE
    emb = jacobson_morozov(ma.algebra, ma.coordinates_of_matrix(m),
                           assume_semisimple=True)
    assert sl2_decompose(ma.algebra.adjoint_representation(), emb) == \
        {2: 1, 4: 1}
    m2 = [[ZERO] * 3 for _ in range(3)]
    m2[2][0] = ONE
    emb2 = jacobson_morozov(ma.algebra, ma.coordinates_of_matrix(m2),
                            assume_semisimple=True)
    assert sl2_decompose(ma.algebra.adjoint_representation(), emb2) == \
        {0: 1, 1: 2, 2: 1}


def test_decompose_basis_independent():
    rng = random.Random(19)
    ma = sl_algebra(3)
    e, h, f = principal_sl2_matrices(3)
    emb = Sl2Embedding(ma.algebra, ma.coordinates_of_matrix(e),
                       ma.coordinates_of_matrix(h),
                       ma.coordinates_of_matrix(f))
    rep = ma.defining_representation()
    base = sl2_decompose(rep, emb)
    for _ in range(3):
        g = [[Scalar(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        if rank(g) != 3:
            continue
        gi = inverse(g)
        mats = [mat_mul(mat_mul(g, [list(r) for r in m]), gi)
                for m in rep.matrices]
        conj_rep = Representation(ma.algebra, mats)
        assert sl2_decompose(conj_rep, emb) == base


def test_principal_matrices_relations():
    for n in range(2, 7):
        e, h, f = principal_sl2_matrices(n)
        comm = mat_mul(e, f)
        fe = mat_mul(f, e)
        assert [[comm[i][j] - fe[i][j] for j in range(n)] for i in range(n)] == h


def test_wedge_square_identity():
    ma = sp_algebra(4)
    rep, pairs = wedge_square_representation(ma)
    assert rep.space_dim == 6
    assert rep.check_identity()


def test_algebra_json_round_trip():
    ma = sl_algebra(2)
    back = LieAlgebra.from_json(ma.algebra.to_json())
    assert back.dim == ma.algebra.dim
    for (i, j), vec in ma.algebra.brackets.items():
        assert tuple(back.bracket_basis(i, j)) == tuple(vec)
