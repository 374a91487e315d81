"""Linear quaternionic-like structures.

A structure on U is a holomorphically embedded sphere of k-dimensional
subspaces U^z of the complexification of U, presented by a polynomial
spanning matrix z -> U^z and (in real mode) an antilinear conjugation
x -> C conj(x) compatible with the antipodal map of the sphere.

The module provides validation (rank, reality, immersion, injectivity,
nonsplitting), classification by splitting types, the plus/minus section-space
presentations ("heaven" data and its dual), and the verifier for the
factorization identity psi_plus . psi_minus = rho_plus . iota . rho_minus_star
together with its kernel/cokernel bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundles import (QuotientBundle, SplittingType, SubbundleFamily,
                      annihilator, family_contains, h0_twist,
                      is_split_extension, saturate, splitting_type)
from .errors import InternalError, InvalidInput
from .forms import (BinaryForm, antipodal_transform, form_gcd, format_form,
                    parse_form)
from .linalg import (conj_matrix, identity, inverse, kernel_basis, mat_eq,
                     mat_mul, mat_vec, rank, solve, transpose, zeros)
from .polymatrix import PolyMatrix, generic_rank, solve_combination
from .scalars import ONE, ZERO, Scalar, scalar

SAMPLE_POINTS = ((1, 0), (0, 1), (1, 1), (1, -1), (1, 2))


class QLikeStructure:
    """Immutable spanning-matrix presentation of a sphere of subspaces."""

    __slots__ = ("dim", "k", "spanning", "conjugation", "complex_mode")

    def __init__(self, dim, k, spanning: PolyMatrix, conjugation=None,
                 complex_mode=False):
        if spanning.rows != dim:
            raise InvalidInput("spanning matrix has %d rows, dim is %d"
                               % (spanning.rows, dim))
        if conjugation is not None:
            conjugation = tuple(tuple(scalar(x) for x in row)
                                for row in conjugation)
            if len(conjugation) != dim or any(len(r) != dim for r in conjugation):
                raise InvalidInput("conjugation matrix must be %dx%d" % (dim, dim))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "spanning", spanning)
        object.__setattr__(self, "conjugation", conjugation)
        object.__setattr__(self, "complex_mode", bool(complex_mode))

    def __setattr__(self, name, value):
        raise AttributeError("QLikeStructure is immutable")

    def conjugation_matrix(self):
        if self.conjugation is None:
            return identity(self.dim)
        return [list(row) for row in self.conjugation]

    def to_json(self):
        data = {
            "mode": "complex" if self.complex_mode else "real",
            "dim": self.dim,
            "k": self.k,
            "spanning": [[format_form(f) for f in col]
                         for col in self.spanning.columns()],
        }
        if self.conjugation is not None:
            from .scalars import format_scalar
            data["conjugation"] = [[format_scalar(x) for x in row]
                                   for row in self.conjugation]
        return data

    @staticmethod
    def from_json(data):
        mode = data.get("mode", "real")
        dim = data["dim"]
        cols = [[parse_form(s) for s in col] for col in data["spanning"]]
        spanning = PolyMatrix.from_columns(dim, cols)
        conj = None
        if data.get("conjugation") is not None:
            from .scalars import parse_scalar
            conj = [[parse_scalar(x) for x in row] for row in data["conjugation"]]
        return QLikeStructure(dim, data["k"], spanning, conj,
                              complex_mode=(mode == "complex"))

    def __repr__(self):
        return "QLikeStructure(dim=%d, k=%d, mode=%s)" % (
            self.dim, self.k, "complex" if self.complex_mode else "real")


# --------------------------------------------------------------------------
# validation
# --------------------------------------------------------------------------

@dataclass
class CheckResult:
    name: str
    status: str            # "pass" | "fail" | "warn"
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def add(self, name, status, detail=""):
        self.checks.append(CheckResult(name, status, detail))

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)

    @property
    def warnings(self):
        return [c for c in self.checks if c.status == "warn"]

    def failed_names(self):
        return [c.name for c in self.checks if c.status == "fail"]

    def to_json(self):
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail}
                       for c in self.checks],
        }


def validate(S: QLikeStructure) -> ValidationReport:
    """Run the validity checks in order; rank failure aborts the rest."""
    report = ValidationReport()
    n, k = S.dim, S.k
    if k <= 0 or k >= n:
        report.add("codimension", "fail",
                   "not an embedding of positive codimension family (k=%d, dim=%d)"
                   % (k, n))
        return report
    report.add("codimension", "pass")
    r = generic_rank(S.spanning.transpose_relations())
    if r != k:
        report.add("generic-rank", "fail",
                   "spanning matrix has generic rank %d, expected k=%d" % (r, k))
        return report
    report.add("generic-rank", "pass")

    family = saturate(S.spanning)
    report.add("saturation", "pass",
               "free basis degrees %s" % (list(family.degrees),))

    if not S.complex_mode:
        status, detail = _reality_check(S, family)
        report.add("reality", status, detail)

    gamma = _reduced_pluecker(family)
    if len(gamma) == 1:
        report.add("immersion", "fail", "constant map, not an embedding")
        report.add("injectivity", "fail", "constant map")
    else:
        ok = _immersion_check(gamma)
        report.add("immersion", "pass" if ok else "fail",
                   "" if ok else "critical point on the parameter sphere")
        status, detail = _injectivity_check(gamma)
        report.add("injectivity", status, detail)

    split = is_split_extension(family)
    report.add("nonsplitting", "fail" if split else "pass",
               "holomorphic retraction exists" if split else "")
    return report


def _reality_check(S, family):
    C = S.conjugation_matrix()
    n = S.dim
    cbar = conj_matrix(C)
    prod = mat_mul(C, cbar)
    if not mat_eq(prod, identity(n)):
        return "fail", "C conj(C) is not the identity"
    # C applied to the antipodal transform of the basis must stay in the family
    for col, d in zip(family.columns(), family.degrees):
        twisted = [antipodal_transform(f) for f in col]
        moved = _apply_scalar_matrix(C, twisted)
        if not family_contains(family, moved, d):
            return "fail", "conjugation does not preserve the family"
    return "pass", ""


def _apply_scalar_matrix(M, vec_forms):
    n = len(M)
    out = []
    for i in range(n):
        s = BinaryForm.zero(0)
        for j, f in enumerate(vec_forms):
            c = M[i][j]
            if c.is_zero() or f.is_zero():
                continue
            s = s + f.scale(c)
        out.append(s)
    return out


def _pluecker_coordinates(family: SubbundleFamily):
    """All k x k minors of the basis (rows sorted lexicographically)."""
    n, k = family.ambient, family.rank
    cols = family.columns()
    table = {(): BinaryForm.constant(1)}
    for j in range(k):
        new = {}
        col = cols[j]
        import itertools
        for rows in itertools.combinations(range(n), j + 1):
            acc = None
            for pos, i in enumerate(rows):
                e = col[i]
                if e.is_zero():
                    continue
                sub = table[rows[:pos] + rows[pos + 1:]]
                if sub.is_zero():
                    continue
                term = sub * e
                if pos % 2:
                    term = -term
                acc = term if acc is None else acc + term
            deg = sum(family.degrees[:j + 1])
            new[rows] = acc if acc is not None else BinaryForm.zero(deg)
        table = new
    import itertools
    return [table[rows] for rows in itertools.combinations(range(n), k)]


def _reduced_pluecker(family: SubbundleFamily):
    """A basis of the linear span of the Pluecker coordinate forms.

    Injectivity and immersion of the Grassmann curve are equivalent to those
    of this reduced curve (the coordinates differ by an injective constant
    linear map).
    """
    gamma = [g for g in _pluecker_coordinates(family) if not g.is_zero()]
    if not gamma:
        raise InternalError("Pluecker image vanished on a rank-k family")
    g = gamma[0]
    for extra in gamma[1:]:
        g = form_gcd(g, extra)
        if g.degree == 0:
            break
    if g.degree > 0:
        raise InternalError("saturated family has nonreduced Pluecker image")
    d = gamma[0].degree
    rows = []
    piv = []
    basis = []
    for f in gamma:
        v = list(f.coeffs)
        for row, p in zip(rows, piv):
            c = v[p]
            if not c.is_zero():
                v = [x - c * y for x, y in zip(v, row)]
        p = next((i for i, c in enumerate(v) if not c.is_zero()), None)
        if p is None:
            continue
        inv = v[p].inverse()
        rows.append([x * inv for x in v])
        piv.append(p)
        basis.append(f)
    return basis


# -- univariate helpers over primitive Gaussian-integer pair lists ----------

def _utrim(c):
    while c and c[-1].is_zero():
        c.pop()
    return c


def _immersion_check(gamma):
    """Immersion of the reduced curve, decided chartwise by Wronskian gcds.

    The whole chain runs over primitive integer-pair polynomials (scaling a
    coordinate does not move the Wronskian zero locus)."""
    from .forms import int_pairs_of, ip_deriv, ip_gcd, ip_mul, ip_sub, ip_trim
    for chart in (0, 1):
        polys = []
        for f in gamma:
            coeffs = list(f.coeffs) if chart == 0 else list(reversed(f.coeffs))
            polys.append(ip_trim(int_pairs_of(coeffs)))
        g = None
        done = False
        m = len(polys)
        for a in range(m):
            for b in range(a + 1, m):
                w = ip_sub(ip_mul(polys[a], ip_deriv(polys[b])),
                           ip_mul(polys[b], ip_deriv(polys[a])))
                if not w:
                    continue
                g = w if g is None else ip_gcd(g, w)
                if g is not None and len(g) == 1:
                    done = True
                    break
            if done:
                break
        if g is None:
            return False          # all Wronskians vanish: nowhere an immersion
        if len(g) > 1:
            return False
    return True


def _injectivity_check(gamma):
    """("pass"|"fail"|"warn", detail) for injectivity of the reduced curve.

    Exact route: divide the two-point minors by the diagonal, then eliminate
    one variable by resultants; a constant gcd proves injectivity.  When the
    exact route is inconclusive or oversized, fall back to sampled pair
    distinctness with a warning, as documented.
    """
    beta = len(gamma)
    d = gamma[0].degree
    if d == 1:
        return "pass", ""
    if beta == 2:
        # a degree-d self-map of the sphere is injective only when linear
        return "fail", "curve lies on a line but has degree %d" % d
    from .forms import int_pairs_of, ip_gcd, ip_scale, ip_sub, ip_trim
    ipolys = [ip_trim(int_pairs_of(list(f.coeffs))) for f in gamma]
    polys = [list(f.coeffs) for f in gamma]

    # point at infinity against the affine chart: a common root of the
    # cross terms is a finite parameter whose image equals gamma(infinity)
    inf_vals = [ip[-1] if len(ip) == d + 1 else (0, 0) for ip in ipolys]
    g_inf = None
    for a in range(beta):
        for b in range(a + 1, beta):
            w = ip_sub(ip_scale(ipolys[a], inf_vals[b]),
                       ip_scale(ipolys[b], inf_vals[a]))
            if not w:
                continue
            g_inf = w if g_inf is None else ip_gcd(g_inf, w)
            if len(g_inf) == 1:
                break
        if g_inf is not None and len(g_inf) == 1:
            break
    if g_inf is None:
        return "fail", "curve collapses to the point at infinity"
    if len(g_inf) > 1:
        return "fail", "a finite parameter meets the point at infinity"

    h_list = []
    for a in range(beta):
        for b in range(a + 1, beta):
            h = _bivariate_two_point(polys[a], polys[b], d)
            if h is None:
                continue
            if _bideg(h) == (0, 0):
                return "pass", ""
            h_list.append(h)
            if len(h_list) >= 30:
                break
        if len(h_list) >= 30:
            break
    if not h_list:
        return "fail", "all two-point minors vanish identically"
    if len(h_list) >= 2:
        from .modp import resultant_gcd_is_constant
        if resultant_gcd_is_constant(h_list):
            return "pass", ""
    return _sampled_injectivity(gamma)


def _bideg(h):
    dx = len(h) - 1
    dy = max((len(row) - 1 for row in h if row), default=0)
    return dx, dy


def _bivariate_two_point(pa, pb, d):
    """H(x, y) = (pa(x) pb(y) - pb(x) pa(y)) / (y - x), as rows in x.

    Returned as a list over x-powers of y-coefficient lists; None when the
    minor vanishes identically.  The minor is antisymmetric, so the division
    is exact (synthetic division of the y-polynomial at the root y = x).
    """
    size = d + 1
    G = [[ZERO] * size for _ in range(size)]   # G[i][j]: x^i y^j
    nonzero = False
    for i in range(size):
        ai = pa[i] if i < len(pa) else ZERO
        bi = pb[i] if i < len(pb) else ZERO
        for j in range(size):
            aj = pa[j] if j < len(pa) else ZERO
            bj = pb[j] if j < len(pb) else ZERO
            c = ai * bj - bi * aj
            if not c.is_zero():
                nonzero = True
            G[i][j] = c
    if not nonzero:
        return None
    # c_j(x) = y^j coefficient of G as an x-coefficient list
    c = [[G[i][j] for i in range(size)] for j in range(size)]
    m = size - 1

    def add(u, v):
        return [(u[i] if i < len(u) else ZERO) + (v[i] if i < len(v) else ZERO)
                for i in range(max(len(u), len(v)))]

    q = [None] * m
    q[m - 1] = list(c[m])
    for j in range(m - 1, 0, -1):
        q[j - 1] = add(c[j], [ZERO] + q[j])       # q_{j-1} = c_j + x q_j
    remainder = add(c[0], [ZERO] + q[0])
    if any(not x.is_zero() for x in remainder):
        raise InternalError("two-point minor not divisible by the diagonal")
    dx = max(len(qj) for qj in q)
    H = []
    for i in range(dx):
        H.append(_utrim([qj[i] if i < len(qj) else ZERO for qj in q]))
    while H and not H[-1]:
        H.pop()
    return H if H else None


def _sampled_injectivity(gamma):
    import random
    rng = random.Random(2025)
    pts = []
    while len(pts) < 25:
        a = rng.randint(-40, 40)
        b = rng.randint(-40, 40)
        if (a, b) not in pts and (a or b):
            pts.append((a, b))
    values = [[f.evaluate(Scalar(a), Scalar(b)) for f in gamma] for a, b in pts]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if _projectively_equal(pts[i], pts[j]):
                continue
            if rank([values[i], values[j]]) < 2:
                return "fail", "sampled pair with equal image"
    return "warn", "injectivity: sampled"


def _projectively_equal(p, q):
    return p[0] * q[1] - p[1] * q[0] == 0


# --------------------------------------------------------------------------
# derived families and duality
# --------------------------------------------------------------------------

def minus_family(S: QLikeStructure) -> SubbundleFamily:
    """The tautological subbundle family (saturation of the spanning matrix)."""
    return saturate(S.spanning)


def dualize(S: QLikeStructure) -> QLikeStructure:
    """Structure on the dual space: z maps to the annihilator of U^z."""
    fam = minus_family(S)
    ann = annihilator(fam)
    conj = None
    if not S.complex_mode:
        # kappa*(phi) = D conj(phi) with D = (C^T)^{-1}
        conj = transpose(inverse(S.conjugation_matrix()))
    return QLikeStructure(S.dim, S.dim - S.k, ann.basis, conj,
                          complex_mode=S.complex_mode)


def check_morphism(S: QLikeStructure, S2: QLikeStructure, psi, T) -> bool:
    """Is (psi, T) a morphism, i.e. psi(U^z) inside V^{T(z)} for all z?

    psi is a dim(S2) x dim(S) scalar matrix; T an invertible 2x2 scalar
    matrix acting on the sphere coordinates.  In real mode T must commute
    with the antipodal involution (unit-quaternion Moebius map up to scale).
    """
    T = [[scalar(x) for x in row] for row in T]
    det = T[0][0] * T[1][1] - T[0][1] * T[1][0]
    if det.is_zero():
        raise InvalidInput("T is not invertible")
    real_mode = not (S.complex_mode or S2.complex_mode)
    if real_mode and not _antipodal_equivariant(T):
        raise InvalidInput("T does not commute with the antipodal map")
    fam = minus_family(S)
    fam2 = minus_family(S2)
    moved_cols = []
    for col, d in zip(fam2.columns(), fam2.degrees):
        moved_cols.append([f.substitute(T[0][0], T[0][1], T[1][0], T[1][1])
                           for f in col])
    psi = [[scalar(x) for x in row] for row in psi]
    for col, d in zip(fam.columns(), fam.degrees):
        image = _apply_scalar_matrix(psi, col)
        sol = solve_combination(moved_cols, list(fam2.degrees), image, d)
        if sol is None:
            return False
    return True


def _antipodal_equivariant(T):
    # J conj(T) = lambda T J for some scalar lambda, J the antipodal matrix
    J = [[ZERO, Scalar(-1)], [ONE, ZERO]]
    lhs = mat_mul(J, conj_matrix(T))
    rhs = mat_mul(T, J)
    lam = None
    for i in range(2):
        for j in range(2):
            if not rhs[i][j].is_zero():
                lam = lhs[i][j] / rhs[i][j]
                break
        if lam is not None:
            break
    if lam is None:
        return False
    return mat_eq(lhs, [[x * lam for x in row] for row in rhs])


# --------------------------------------------------------------------------
# heaven-side and minus-side presentations
# --------------------------------------------------------------------------

@dataclass
class HeavenData:
    """Section-space presentation of the quotient side.

    U_plus is H^0 of the quotient bundle with its pairing-tuple basis;
    E_plus = H^0(O(1)) tensor H^0(quotient(-1)); rho_plus multiplies a
    twisted section tuple by a linear form; psi_plus pairs a vector of U
    against the annihilator generators.
    """
    structure: QLikeStructure
    family: SubbundleFamily
    ann: SubbundleFamily
    u_plus_dim: int
    h_plus_dim: int
    e_plus_dim: int
    psi_plus: list
    rho_plus: list
    conj_u_plus: list = None
    conj_h_plus: list = None
    conj_e_plus: list = None


def _ann_offsets(degrees, twist):
    offsets = []
    acc = 0
    for e in degrees:
        offsets.append(acc)
        acc += max(0, e + twist + 1)
    return offsets, acc


def heaven_data(S: QLikeStructure) -> HeavenData:
    fam = minus_family(S)
    ann = annihilator(fam)
    degs = list(ann.degrees)
    n = S.dim
    off0, u_dim = _ann_offsets(degs, 0)
    offm1, h_dim = _ann_offsets(degs, -1)
    e_dim = 2 * h_dim

    # psi_plus: u in U maps to the tuple of pairings <q_j(.), u>
    psi = zeros(u_dim, n)
    for j, e in enumerate(degs):
        qcol = ann.basis.column(j)
        for l in range(n):
            f = qcol[l]
            if f.is_zero():
                continue
            for w, c in enumerate(f.coeffs):
                if not c.is_zero():
                    psi[off0[j] + w][l] = psi[off0[j] + w][l] + c

    # rho_plus: (z_a tensor h) maps to z_a * h, E basis is z_a-major
    rho = zeros(u_dim, e_dim)
    for a in range(2):
        for j, e in enumerate(degs):
            for t in range(max(0, e)):
                col = a * h_dim + offm1[j] + t
                # z0 * monomial(e-1, t) = monomial(e, t); z1 * ... = monomial(e, t+1)
                w = t + a
                rho[off0[j] + w][col] = ONE

    hd = HeavenData(S, fam, ann, u_dim, h_dim, e_dim, psi, rho)

    # genericity: sections vanishing at z plus the image of psi_plus span U_plus
    for z0, z1 in SAMPLE_POINTS[:3]:
        ev = _evaluation_matrix(ann, degs, off0, u_dim, z0, z1)
        vanishing = kernel_basis(ev)
        image_vectors = [list(col) for col in zip(*psi)] if n else []
        if rank(vanishing + image_vectors) != u_dim:
            raise InternalError(
                "plus-side genericity failed at a sample point; "
                "this contradicts a validated structure")

    if not S.complex_mode:
        _attach_conjugations(hd)
    return hd


def _evaluation_matrix(ann, degs, offsets, u_dim, z0, z1):
    """Rows: values (f_j(z))_j of the coordinate basis of U_plus."""
    rows = len(degs)
    ev = zeros(rows, u_dim)
    z0, z1 = scalar(z0), scalar(z1)
    for j, e in enumerate(degs):
        for w in range(e + 1):
            ev[j][offsets[j] + w] = BinaryForm.monomial(e, w).evaluate(z0, z1)
    return ev


def _attach_conjugations(hd: HeavenData):
    """Real mode: induced antilinear involutions on U_plus, H_plus, E_plus.

    kappa(f)_j = (-1)^{e_j} * antipodal(sum_l G_lj f_l) where G expresses the
    conjugated-antipodal annihilator generators in the annihilator basis.
    """
    S = hd.structure
    ann = hd.ann
    degs = list(ann.degrees)
    C = S.conjugation_matrix()
    D = transpose(inverse(C))
    cols = ann.columns()
    G = []
    for j, e in enumerate(degs):
        moved = [antipodal_transform(f) for f in cols[j]]
        moved = _apply_scalar_matrix(D, moved)
        sol = solve_combination(cols, degs, moved, e)
        if sol is None:
            raise InternalError("dual conjugation does not preserve the "
                                "annihilator family")
        G.append(sol)          # G[j][l]: coefficient of q_l, degree e_j - e_l

    hd.conj_u_plus = _conj_matrix_on_sections(degs, G, 0)
    hd.conj_h_plus = _conj_matrix_on_sections(degs, G, -1)
    cu, ch = hd.conj_u_plus, hd.conj_h_plus
    if not mat_eq(mat_mul(cu, conj_matrix(cu)), identity(hd.u_plus_dim)):
        raise InternalError("conjugation on U_plus does not square to +1")
    if ch and not mat_eq(mat_mul(ch, conj_matrix(ch)),
                         [[-x for x in row] for row in identity(hd.h_plus_dim)]):
        raise InternalError("conjugation on H_plus does not square to -1")
    # E = S1 tensor H with the antipodal structure on S1 (z0 -> -z1, z1 -> z0)
    js = [[ZERO, ONE], [Scalar(-1), ZERO]]
    e_dim = hd.e_plus_dim
    h_dim = hd.h_plus_dim
    ce = zeros(e_dim, e_dim)
    for a in range(2):
        for b in range(2):
            c = js[a][b]
            if c.is_zero():
                continue
            for i in range(h_dim):
                for j in range(h_dim):
                    ce[a * h_dim + i][b * h_dim + j] = c * ch[i][j]
    hd.conj_e_plus = ce
    if not mat_eq(mat_mul(ce, conj_matrix(ce)), identity(e_dim)):
        raise InternalError("conjugation on E_plus does not square to +1")
    # psi_plus intertwines kappa_U and the section conjugation
    lhs = mat_mul(hd.psi_plus, C)
    rhs = mat_mul(cu, conj_matrix(hd.psi_plus))
    if not mat_eq(lhs, rhs):
        raise InternalError("psi_plus is not conjugation equivariant")


def _conj_matrix_on_sections(degs, G, twist):
    """Antilinear action on the tuple coordinates at the given twist,
    represented by the matrix A with kappa(x) = A conj(x)."""
    offsets, total = _ann_offsets(degs, twist)
    if total == 0:
        return []
    A = zeros(total, total)
    for j, ej in enumerate(degs):
        sign = -1 if ej % 2 else 1
        for l, el in enumerate(degs):
            g = G[j][l]
            if g.is_zero():
                continue
            # basis monomial (l, t) contributes antipodal(G[j][l] * mono)
            for t in range(max(0, el + twist + 1)):
                mono = BinaryForm.monomial(el + twist, t)
                prod = antipodal_transform(g * mono)
                if sign < 0:
                    prod = -prod
                for w, c in enumerate(prod.coeffs):
                    if not c.is_zero():
                        A[offsets[j] + w][offsets[l] + t] = \
                            A[offsets[j] + w][offsets[l] + t] + c
    return A


@dataclass
class MinusData:
    """Dual-side presentation, obtained from the heaven data of the dual
    structure by transposition."""
    structure: QLikeStructure
    dual_heaven: HeavenData
    u_minus_dim: int
    h_minus_dim: int
    e_minus_dim: int
    psi_minus: list          # U_minus -> U
    rho_minus_star: list     # U_minus -> E_minus


def minus_data(S: QLikeStructure) -> MinusData:
    dual = dualize(S)
    hd = heaven_data(dual)
    md = MinusData(S, hd, hd.u_plus_dim, hd.h_plus_dim, hd.e_plus_dim,
                   transpose(hd.psi_plus), transpose(hd.rho_plus))

    # minus-side genericity: (U_minus)^z meets ker psi_minus trivially
    degs = list(hd.ann.degrees)
    off0, u_dim = _ann_offsets(degs, 0)
    ker_psi = kernel_basis(md.psi_minus)
    for z0, z1 in SAMPLE_POINTS[:3]:
        ev = _evaluation_matrix(hd.ann, degs, off0, u_dim, z0, z1)
        vanishing = kernel_basis(ev)          # (U_plus of dual)^z
        # (U_minus)^z is its annihilator inside the dual coordinates
        family_z = kernel_basis(vanishing) if vanishing else \
            [list(row) for row in identity(u_dim)]
        if not ker_psi:
            continue
        inter = _intersection_dim(family_z, ker_psi)
        if inter != 0:
            raise InternalError(
                "minus-side genericity failed at a sample point; "
                "this contradicts a validated structure")
    return md


def _intersection_dim(basis_a, basis_b):
    if not basis_a or not basis_b:
        return 0
    ra = rank(basis_a)
    rb = rank(basis_b)
    return ra + rb - rank(basis_a + basis_b)


# --------------------------------------------------------------------------
# the factorization identity and its kernel/cokernel bookkeeping
# --------------------------------------------------------------------------

@dataclass
class FactorizationReport:
    solvable: bool
    solution_dim: int
    iso_found: bool
    dims: dict
    facts: dict

    @property
    def passed(self):
        return self.solvable and all(self.facts.values())

    def to_json(self):
        return {
            "solvable": self.solvable,
            "solution_space_dim": self.solution_dim,
            "iso_found": self.iso_found,
            "dims": dict(self.dims),
            "facts": dict(self.facts),
            "passed": self.passed,
        }


def verify_factorization(S: QLikeStructure, hd: HeavenData = None,
                         md: MinusData = None) -> FactorizationReport:
    """Solve for a compatible intertwiner iota with
    psi_plus . psi_minus = rho_plus . iota . rho_minus_star, and check the
    kernel/cokernel correspondences it induces.

    iota is constrained to the compatible shape (canonical S1* ~ S1 twist on
    the first factor, arbitrary on the section factor), which is exactly the
    intertwining condition for the multiplication actions of z0, z1.
    """
    hd = hd or heaven_data(S)
    md = md or minus_data(S)
    if hd.h_plus_dim != md.h_minus_dim:
        raise InternalError("twisted section dimensions disagree "
                            "(Serre-duality dimension identity broken)")
    hp = hd.h_plus_dim
    lhs = mat_mul(hd.psi_plus, md.psi_minus)
    n_unknowns = hp * hp
    rows = hd.u_plus_dim * md.u_minus_dim
    a = zeros(rows, n_unknowns)
    b = [ZERO] * rows
    for i in range(hd.u_plus_dim):
        for j in range(md.u_minus_dim):
            b[i * md.u_minus_dim + j] = lhs[i][j]
    # iota = Omega tensor X, Omega: (z0*, z1*) -> (-z1, z0)
    omega = ((1, Scalar(-1)), (0, ONE))        # column a -> (row a', coeff)
    for g in range(hp):
        for bta in range(hp):
            u = g * hp + bta
            # iota columns: E_minus index (a, beta) -> row (a', g) with coeff
            for acol in range(2):
                arow, coeff = omega[acol]
                col_e = acol * hp + bta
                row_e = arow * hp + g
                # contribution to rho_plus . iota . rho_minus_star
                for i in range(hd.u_plus_dim):
                    rp = hd.rho_plus[i][row_e]
                    if rp.is_zero():
                        continue
                    for j in range(md.u_minus_dim):
                        rm = md.rho_minus_star[col_e][j]
                        if rm.is_zero():
                            continue
                        r = i * md.u_minus_dim + j
                        a[r][u] = a[r][u] + coeff * rp * rm
    x = solve(a, b)
    sol_dim = len(kernel_basis(a)) if n_unknowns else 0
    solvable = x is not None

    dims = _correspondence_dims(hd, md)
    facts = {
        "kernel_dims_match": dims["ker_psi_minus"] == dims["ker_rho_plus"],
        "psi_minus_maps_ker_rho_minus_star_onto_ker_psi_plus":
            _check_fact_c(hd, md),
        "cokernel_dims_match_d":
            dims["coker_rho_minus_star"] == dims["coker_psi_plus"],
        "cokernel_dims_match_e":
            dims["coker_psi_minus"] == dims["coker_rho_plus"],
    }

    iota_found = False
    if solvable:
        X = _find_invertible(x, kernel_basis(a), hp)
        if X is not None:
            iota_found = True
            facts["rho_minus_star_maps_ker_psi_minus_onto_iota_inv_ker_rho_plus"] = \
                _check_fact_b(hd, md, X, omega)
        else:
            facts["rho_minus_star_maps_ker_psi_minus_onto_iota_inv_ker_rho_plus"] = False
    return FactorizationReport(solvable, sol_dim, iota_found, dims, facts)


def _correspondence_dims(hd, md):
    rk_psi_minus = rank(md.psi_minus) if md.psi_minus else 0
    rk_rho_plus = rank(hd.rho_plus) if hd.rho_plus else 0
    rk_rho_minus = rank(md.rho_minus_star) if md.rho_minus_star else 0
    rk_psi_plus = rank(hd.psi_plus) if hd.psi_plus else 0
    return {
        "U": hd.structure.dim,
        "U_plus": hd.u_plus_dim,
        "U_minus": md.u_minus_dim,
        "E": hd.e_plus_dim,
        "H_plus": hd.h_plus_dim,
        "H_minus": md.h_minus_dim,
        "ker_psi_minus": md.u_minus_dim - rk_psi_minus,
        "ker_rho_plus": hd.e_plus_dim - rk_rho_plus,
        "ker_rho_minus_star": md.u_minus_dim - rk_rho_minus,
        "ker_psi_plus": hd.structure.dim - rk_psi_plus,
        "coker_rho_minus_star": md.e_minus_dim - rk_rho_minus,
        "coker_psi_plus": hd.u_plus_dim - rk_psi_plus,
        "coker_psi_minus": hd.structure.dim - rk_psi_minus,
        "coker_rho_plus": hd.u_plus_dim - rk_rho_plus,
    }


def _check_fact_c(hd, md):
    """psi_minus restricted to ker rho_minus_star is a bijection onto
    ker psi_plus."""
    kernel_rms = kernel_basis(md.rho_minus_star)
    images = [mat_vec(md.psi_minus, v) for v in kernel_rms]
    kernel_pp = kernel_basis(hd.psi_plus)
    if len(kernel_rms) != len(kernel_pp):
        return False
    if not images:
        return True
    if rank(images) != len(images):
        return False
    return rank(images + kernel_pp) == len(kernel_pp)


def _check_fact_b(hd, md, X, omega):
    """With iota fixed, rho_minus_star maps ker psi_minus bijectively onto
    iota^{-1}(ker rho_plus)."""
    hp = hd.h_plus_dim
    e_dim = hd.e_plus_dim
    iota = zeros(e_dim, e_dim)
    for acol in range(2):
        arow, coeff = omega[acol]
        for g in range(hp):
            for bta in range(hp):
                iota[arow * hp + g][acol * hp + bta] = coeff * X[g][bta]
    kernel_pm = kernel_basis(md.psi_minus)
    images = [mat_vec(md.rho_minus_star, v) for v in kernel_pm]
    if images and rank(images) != len(images):
        return False
    moved = [mat_vec(iota, v) for v in images]
    kernel_rp = kernel_basis(hd.rho_plus)
    if len(moved) != len(kernel_rp):
        return False
    if not moved:
        return True
    if rank(moved) != len(moved):
        return False
    return rank(moved + kernel_rp) == len(kernel_rp)


def _find_invertible(particular, homogeneous, hp):
    """Search the affine solution family for an invertible hp x hp matrix."""
    if hp == 0:
        return []

    def as_matrix(vec):
        return [[vec[g * hp + bta] for bta in range(hp)] for g in range(hp)]

    def invertible(m):
        return rank(m) == hp

    cand = as_matrix(particular)
    if invertible(cand):
        return cand
    for h in homogeneous:
        for t in range(1, 4):
            vec = [p + Scalar(t) * q for p, q in zip(particular, h)]
            cand = as_matrix(vec)
            if invertible(cand):
                return cand
    if len(homogeneous) >= 2:
        for i in range(len(homogeneous)):
            for j in range(i + 1, len(homogeneous)):
                for s in range(1, 3):
                    for t in range(1, 3):
                        vec = [p + Scalar(s) * u + Scalar(t) * v
                               for p, u, v in zip(particular, homogeneous[i],
                                                  homogeneous[j])]
                        cand = as_matrix(vec)
                        if invertible(cand):
                            return cand
    return None


# --------------------------------------------------------------------------
# analysis / classification
# --------------------------------------------------------------------------

@dataclass
class AnalysisReport:
    validation: ValidationReport
    u_minus: SplittingType
    u_plus: SplittingType
    label: str
    flags: dict
    dims: dict
    factorization: FactorizationReport
    canonical_sequences: dict
    serre_identity: bool

    def to_json(self):
        return {
            "validation": self.validation.to_json(),
            "splitting": {"u_minus": self.u_minus.to_json(),
                          "u_plus": self.u_plus.to_json()},
            "label": self.label,
            "flags": dict(self.flags),
            "dims": dict(self.dims),
            "factorization": self.factorization.to_json(),
            "canonical_sequences": self.canonical_sequences,
            "serre_identity": self.serre_identity,
        }


def analyze(S: QLikeStructure, validation: ValidationReport = None) -> AnalysisReport:
    """Splitting types, classification label, flags, and all verifications."""
    validation = validation or validate(S)
    if not validation.passed:
        raise InvalidInput("structure failed validation: %s"
                           % ", ".join(validation.failed_names()))
    fam = minus_family(S)
    st_minus = splitting_type(fam)
    quotient = QuotientBundle(S.dim, fam)
    st_plus = splitting_type(quotient, cross_check=False)
    if st_minus.degree + st_plus.degree != 0:
        raise InternalError("first Chern additivity failed")

    hd = heaven_data(S)
    md = minus_data(S)
    fact = verify_factorization(S, hd, md)

    all_minus_one = all(a == -1 for a in st_minus.summands)
    all_plus_one = all(a == 1 for a in st_plus.summands)
    if all_minus_one and all_plus_one and S.dim == 2 * S.k:
        label = "quaternionic"
    elif all_minus_one:
        label = "rho-quaternionic"
    elif all_plus_one:
        label = "rho-star-quaternionic"
    else:
        label = "general"

    rho_plus_surjective = rank(hd.rho_plus) == hd.u_plus_dim
    psi_minus_injective = rank(md.psi_minus) == md.u_minus_dim
    rho_minus_star_injective = rank(md.rho_minus_star) == md.u_minus_dim
    flags = {
        "co_cr": label in ("quaternionic", "rho-quaternionic")
                 and rho_plus_surjective,
        "cr": label in ("quaternionic", "rho-star-quaternionic")
              and psi_minus_injective and rho_minus_star_injective,
        "semantics": "interpretive",
    }

    seqs = verify_canonical_for(S, quotient)
    serre = hd.h_plus_dim == md.h_minus_dim
    return AnalysisReport(validation, st_minus, st_plus, label, flags,
                          _correspondence_dims(hd, md), fact, seqs, serre)


def verify_canonical_for(S, quotient):
    from .bundles import verify_canonical_sequences
    st = splitting_type(quotient, cross_check=False)
    if not st.is_nonnegative():
        return {"skipped": "quotient not nonnegative", "ok": True}
    return verify_canonical_sequences(quotient)
