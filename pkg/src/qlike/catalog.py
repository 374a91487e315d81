"""Builders for the worked examples, with their expected answers.

Each entry records where its expectation comes from: "closed-form" (a stated
formula), "cross-check" (derived through an independent identity),
"degenerate-case", or "bookkeeping" (only rank/degree identities are
asserted, no full splitting).  Adjoint expectations are recomputed from the
weight decomposition at run time, never hard-coded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundles import SplittingType
from .errors import InternalError, InvalidInput
from .forms import BinaryForm, parse_form
from .lie import (MatrixAlgebra, Sl2Embedding, builtin_algebra,
                  jacobson_morozov, principal_sl2_matrices, sl2_decompose,
                  sl_algebra, so_algebra, sp_algebra,
                  wedge_square_representation)
from .linalg import identity, kernel_basis, mat_mul, solve_matrix, zeros
from .orbit import GoodQuadruple, normal_bundle, dimension_report
from .polymatrix import PolyMatrix
from .scalars import I, ONE, ZERO, Scalar
from .structures import QLikeStructure


# --------------------------------------------------------------------------
# homogeneous-space quadruples
# --------------------------------------------------------------------------

def build_veronese(k) -> GoodQuadruple:
    """sl(k+1) with its defining representation, the irreducible
    sl(2)-action, U the full space: the degree-k rational normal curve in
    projective k-space."""
    if k < 1:
        raise InvalidInput("veronese builder needs k >= 1")
    ma = sl_algebra(k + 1)
    e, h, f = principal_sl2_matrices(k + 1)
    tau = Sl2Embedding(ma.algebra, ma.coordinates_of_matrix(e),
                       ma.coordinates_of_matrix(h),
                       ma.coordinates_of_matrix(f))
    u_basis = [tuple(row) for row in identity(k + 1)]
    return GoodQuadruple(ma.algebra, ma.defining_representation(), tau,
                         tuple(u_basis), name="veronese:%d" % k)


def so3_triple_matrices(n):
    """The sl(2)-triple inside antisymmetric so(n) supported on the first
    three coordinates: H = -2i A12, E = A13 + i A23, F = -A13 + i A23."""
    def a(i, j):
        m = zeros(n, n)
        m[i][j] = ONE
        m[j][i] = Scalar(-1)
        return m

    def lincomb(*terms):
        out = zeros(n, n)
        for c, m in terms:
            for r in range(n):
                for s in range(n):
                    if not m[r][s].is_zero():
                        out[r][s] = out[r][s] + c * m[r][s]
        return out

    h = lincomb((Scalar(0, -2), a(0, 1)))
    e = lincomb((ONE, a(0, 2)), (I, a(1, 2)))
    f = lincomb((Scalar(-1), a(0, 2)), (I, a(1, 2)))
    return e, h, f


def build_so(n) -> GoodQuadruple:
    """so(n) with its defining representation; the sl(2) is the rotation
    block on the first three coordinates and U is their span."""
    if n < 5:
        raise InvalidInput("so builder needs n >= 5")
    ma = so_algebra(n)
    e, h, f = so3_triple_matrices(n)
    tau = Sl2Embedding(ma.algebra, ma.coordinates_of_matrix(e),
                       ma.coordinates_of_matrix(h),
                       ma.coordinates_of_matrix(f))
    u_basis = [tuple(row) for row in identity(n)[:3]]
    return GoodQuadruple(ma.algebra, ma.defining_representation(), tau,
                         tuple(u_basis), name="so:%d" % n)


def build_sp(two_m) -> GoodQuadruple:
    """sp(2m) acting on wedge^2 of the defining space.

    Symplectic basis (e_1..e_m, f_1..f_m); p1 = <e1, e2>, p2 = <f1, f2>;
    U is the wedge-orthocomplement of wedge^2 p1 + wedge^2 p2 inside
    ker(omega) of wedge^2(p1 + p2)."""
    if two_m < 4 or two_m % 2:
        raise InvalidInput("sp builder needs even 2m >= 4")
    m = two_m // 2
    ma = sp_algebra(two_m)
    # sl(2) acting on p1 and dually on p2, zero elsewhere
    def tau_mat(x):
        big = zeros(two_m, two_m)
        for r in range(2):
            for c in range(2):
                v = x[r][c]
                if not v.is_zero():
                    big[r][c] = v          # action on e1, e2
                    big[m + c][m + r] = -v # minus transpose on f1, f2
        return big

    e2 = [[ZERO, ONE], [ZERO, ZERO]]
    h2 = [[ONE, ZERO], [ZERO, Scalar(-1)]]
    f2 = [[ZERO, ZERO], [ONE, ZERO]]
    tau = Sl2Embedding(ma.algebra,
                       ma.coordinates_of_matrix(tau_mat(e2)),
                       ma.coordinates_of_matrix(tau_mat(h2)),
                       ma.coordinates_of_matrix(tau_mat(f2)))
    sigma, pairs = wedge_square_representation(ma)
    index = {p: a for a, p in enumerate(pairs)}
    dim_e = len(pairs)

    def unit(p, coeff=ONE):
        v = [ZERO] * dim_e
        v[index[p]] = coeff
        return v

    u1 = unit((0, m + 1))                       # e1 ^ f2
    u2 = unit((1, m))                           # e2 ^ f1
    u3 = unit((0, m))                           # e1 ^ f1 - e2 ^ f2
    u3[index[(1, m + 1)]] = Scalar(-1)
    return GoodQuadruple(ma.algebra, sigma, tau, (tuple(u1), tuple(u2),
                                                  tuple(u3)),
                         name="sp:%d" % two_m)


def named_nilpotent(ma: MatrixAlgebra, spec: str):
    """Named nilpotents for sl(n): "principal" (regular) and "minimal"."""
    n = len(ma.basis_matrices[0])
    m = zeros(n, n)
    if spec == "principal":
        for i in range(n - 1):
            m[i + 1][i] = ONE
    elif spec == "minimal":
        m[n - 1][0] = ONE
    else:
        raise InvalidInput("unknown nilpotent spec %r" % spec)
    return ma.coordinates_of_matrix(m)


def build_adjoint(algebra_name, nilpotent_spec) -> GoodQuadruple:
    """Adjoint quadruple through a nilpotent: the sl(2) comes from the
    Jacobson-Morozov solver and U is its image."""
    ma = builtin_algebra(algebra_name)
    if isinstance(nilpotent_spec, str):
        y = named_nilpotent(ma, nilpotent_spec)
        name = "adjoint:%s:%s" % (algebra_name, nilpotent_spec)
    else:
        y = list(nilpotent_spec)
        name = "adjoint:%s:custom" % algebra_name
    tau = jacobson_morozov(ma.algebra, y, assume_semisimple=True)
    sigma = ma.algebra.adjoint_representation()
    u_basis = (tuple(tau.e), tuple(tau.h), tuple(tau.f))
    return GoodQuadruple(ma.algebra, sigma, tau, u_basis, name=name,
                         nilpotent=tuple(tau.f), adjoint=True)


def adjoint_expected(q: GoodQuadruple) -> SplittingType:
    """(-2 + sum_j j a_j) copies of degree one, with the multiplicities
    recomputed live from the weight decomposition."""
    mult = sl2_decompose(q.sigma, q.tau)
    count = -2 + sum(j * a for j, a in mult.items())
    if count < 0:
        raise InternalError("adjoint multiplicity count fell below zero")
    return SplittingType.of([1] * count)


# --------------------------------------------------------------------------
# structure fixtures
# --------------------------------------------------------------------------

def _left_quaternion_matrices(k):
    """Left multiplication by i, j, k on H^k in the real basis
    (1, i, j, k) per quaternionic coordinate."""
    blk_i = [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
    blk_j = [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]
    blk_k = [[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]

    def blow(blk):
        n = 4 * k
        out = zeros(n, n)
        for b in range(k):
            for r in range(4):
                for c in range(4):
                    if blk[r][c]:
                        out[4 * b + r][4 * b + c] = Scalar(blk[r][c])
        return out

    return blow(blk_i), blow(blk_j), blow(blk_k)


def _eigenspace_minus_i(m):
    """Kernel of (m + i), i.e. the -i eigenspace of a complex structure."""
    n = len(m)
    shifted = [[m[r][c] + (I if r == c else ZERO) for c in range(n)]
               for r in range(n)]
    return kernel_basis(shifted)


def build_quaternionic(k) -> QLikeStructure:
    """The classical structure on H^k: spheres of -i eigenspaces of the
    compatible complex structures, interpolated exactly from three sample
    points of the sphere ([1:0] -> I, [0:1] -> -I, [1:1] -> J)."""
    if k < 1:
        raise InvalidInput("quaternionic builder needs k >= 1")
    n = 4 * k
    mi, mj, mk = _left_quaternion_matrices(k)
    p0 = _eigenspace_minus_i(mi)                       # columns for z = [1:0]
    neg_i = [[-x for x in row] for row in mi]
    p1 = _eigenspace_minus_i(neg_i)                    # columns for z = [0:1]
    if len(p0) != 2 * k or len(p1) != 2 * k:
        raise InternalError("eigenspace interpolation: wrong eigenspace rank")
    # middle condition: (J + i)(P0 + P1 M) = 0 determines M uniquely
    ji = [[mj[r][c] + (I if r == c else ZERO) for c in range(n)]
          for r in range(n)]
    a = mat_mul(ji, [list(col) for col in zip(*p1)])
    b = mat_mul(ji, [list(col) for col in zip(*p0)])
    m_sol = solve_matrix(a, [[-x for x in row] for row in b])
    if m_sol is None:
        raise InternalError("eigenspace interpolation inconsistent")
    p1m = mat_mul([list(col) for col in zip(*p1)], m_sol)
    cols = []
    for a_idx in range(2 * k):
        col = []
        for r in range(n):
            col.append(BinaryForm(1, (p0[a_idx][r], p1m[r][a_idx])))
        cols.append(col)
    spanning = PolyMatrix.from_columns(n, cols, [1] * (2 * k))
    S = QLikeStructure(n, 2 * k, spanning, conjugation=None,
                       complex_mode=False)
    # the K sample point must come out right or the interpolation is broken
    zk = spanning.evaluate(ONE, I)
    ek = _eigenspace_minus_i(mk)
    from .linalg import rank, span_equal
    fiber = [[zk[r][c] for r in range(n)] for c in range(2 * k)]
    if not span_equal(fiber, ek):
        raise InternalError("eigenspace interpolation missed the third "
                            "complex structure")
    return S


def build_conic_r3() -> QLikeStructure:
    """Degree-two structure on a three-dimensional real space, conjugation
    antidiagonal(1, -1, 1)."""
    col = [parse_form("z0^2"), parse_form("z0*z1"), parse_form("z1^2")]
    spanning = PolyMatrix.from_columns(3, [col], [2])
    conj = [[0, 0, 1], [0, -1, 0], [1, 0, 0]]
    return QLikeStructure(3, 1, spanning, conj, complex_mode=False)


def build_twisted_plane_c4() -> QLikeStructure:
    """Complex-mode line family (z0^2, z0 z1, z1^2, 0) in C^4."""
    col = [parse_form("z0^2"), parse_form("z0*z1"), parse_form("z1^2"),
           BinaryForm.zero(2)]
    spanning = PolyMatrix.from_columns(4, [col], [2])
    return QLikeStructure(4, 1, spanning, None, complex_mode=True)


# --------------------------------------------------------------------------
# the catalog
# --------------------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    kind: str                     # "quadruple" | "structure"
    build: object                 # thunk
    expected_normal: object = None        # SplittingType | "live-adjoint" | None
    expected_source: str = ""
    expected_dim_z: int = None
    expected_label: str = None
    expected_minus: SplittingType = None
    derived_checks: dict = field(default_factory=dict)


def catalog_entries():
    entries = [
        CatalogEntry("veronese:1", "quadruple", lambda: build_veronese(1),
                     SplittingType.of([]), "degenerate-case",
                     expected_dim_z=1),
        CatalogEntry("veronese:2", "quadruple", lambda: build_veronese(2),
                     SplittingType.of([4]), "closed-form", expected_dim_z=2),
        CatalogEntry("veronese:3", "quadruple", lambda: build_veronese(3),
                     SplittingType.of([5, 5]), "closed-form",
                     expected_dim_z=3),
        CatalogEntry("veronese:4", "quadruple", lambda: build_veronese(4),
                     SplittingType.of([6, 6, 6]), "closed-form",
                     expected_dim_z=4),
        CatalogEntry("veronese:5", "quadruple", lambda: build_veronese(5),
                     SplittingType.of([7, 7, 7, 7]), "closed-form",
                     expected_dim_z=5),
        CatalogEntry("so:5", "quadruple", lambda: build_so(5),
                     SplittingType.of([2, 2]), "cross-check",
                     expected_dim_z=3),
        CatalogEntry("so:6", "quadruple", lambda: build_so(6),
                     None, "bookkeeping", expected_dim_z=4,
                     derived_checks={"rank": 3, "sum": 6}),
        CatalogEntry("sp:4", "quadruple", lambda: build_sp(4),
                     SplittingType.of([2, 2]), "closed-form",
                     expected_dim_z=3),
        CatalogEntry("sp:6", "quadruple", lambda: build_sp(6),
                     SplittingType.of([2, 2, 1, 1, 1, 1]), "closed-form",
                     expected_dim_z=7),
        CatalogEntry("adjoint:sl(2):principal", "quadruple",
                     lambda: build_adjoint("sl(2)", "principal"),
                     "live-adjoint", "closed-form", expected_dim_z=1),
        CatalogEntry("adjoint:sl(3):principal", "quadruple",
                     lambda: build_adjoint("sl(3)", "principal"),
                     "live-adjoint", "closed-form", expected_dim_z=5),
        CatalogEntry("adjoint:sl(3):minimal", "quadruple",
                     lambda: build_adjoint("sl(3)", "minimal"),
                     "live-adjoint", "closed-form", expected_dim_z=3),
        CatalogEntry("adjoint:sl(4):principal", "quadruple",
                     lambda: build_adjoint("sl(4)", "principal"),
                     "live-adjoint", "closed-form", expected_dim_z=11),
        CatalogEntry("adjoint:sl(4):minimal", "quadruple",
                     lambda: build_adjoint("sl(4)", "minimal"),
                     "live-adjoint", "closed-form", expected_dim_z=5),
        CatalogEntry("quaternionic:1", "structure",
                     lambda: build_quaternionic(1),
                     expected_label="quaternionic",
                     expected_minus=SplittingType.of([-1, -1])),
        CatalogEntry("quaternionic:2", "structure",
                     lambda: build_quaternionic(2),
                     expected_label="quaternionic",
                     expected_minus=SplittingType.of([-1, -1, -1, -1])),
        CatalogEntry("conic-r3", "structure", build_conic_r3,
                     expected_label="rho-star-quaternionic",
                     expected_minus=SplittingType.of([-2])),
        CatalogEntry("twisted-plane-c4", "structure", build_twisted_plane_c4,
                     expected_label="general",
                     expected_minus=SplittingType.of([-2])),
    ]
    return entries


def entry_by_name(name):
    for e in catalog_entries():
        if e.name == name:
            return e
    raise InvalidInput("no catalog entry named %r" % name)


def run_quadruple_entry(entry: CatalogEntry) -> dict:
    q = entry.build()
    expected = entry.expected_normal
    source = entry.expected_source
    if expected == "live-adjoint":
        expected = adjoint_expected(q)
    report = normal_bundle(q, expected=expected, expected_source=source)
    dims = dimension_report(q, report)
    result = {
        "name": entry.name,
        "normal": report.to_json(),
        "dimension": dims,
        "ok": (report.match is not False) and report.nonnegative,
    }
    if entry.expected_dim_z is not None:
        result["dim_z_ok"] = (report.dim_z == entry.expected_dim_z)
        result["ok"] = result["ok"] and result["dim_z_ok"]
    for key, want in entry.derived_checks.items():
        if key == "rank":
            got = report.normal.rank
        elif key == "sum":
            got = report.normal.degree
        else:
            continue
        result["derived_%s_ok" % key] = (got == want)
        result["ok"] = result["ok"] and (got == want)
    return result


def run_structure_entry(entry: CatalogEntry) -> dict:
    from .structures import analyze, validate
    S = entry.build()
    validation = validate(S)
    result = {"name": entry.name, "validation": validation.to_json()}
    if not validation.passed:
        result["ok"] = False
        return result
    report = analyze(S, validation)
    result["label"] = report.label
    result["splitting"] = report.to_json()["splitting"]
    ok = report.factorization.passed and report.serre_identity
    if entry.expected_label is not None:
        ok = ok and (report.label == entry.expected_label)
    if entry.expected_minus is not None:
        ok = ok and (report.u_minus == entry.expected_minus)
    result["ok"] = ok
    return result


def run_entry(entry: CatalogEntry) -> dict:
    if entry.kind == "quadruple":
        return run_quadruple_entry(entry)
    return run_structure_entry(entry)


def fixture_structures():
    """The three bundled structure fixtures, as (filename, structure)."""
    return [
        ("quaternionic_h1.json", build_quaternionic(1)),
        ("conic_r3.json", build_conic_r3()),
        ("twisted_plane_c4.json", build_twisted_plane_c4()),
    ]


def regenerate_fixtures(outdir) -> list:
    """Write the bundled fixtures deterministically; returns written paths."""
    import json
    import os
    os.makedirs(outdir, exist_ok=True)
    written = []
    for fname, S in fixture_structures():
        path = os.path.join(outdir, fname)
        with open(path, "w") as fh:
            json.dump(S.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")
        written.append(path)
    return written
