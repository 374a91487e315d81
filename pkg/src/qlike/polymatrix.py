"""Polynomial matrices and the graded kernel engine.

A :class:`PolyMatrix` presents a map of sheaves on the sphere by an n x m
matrix of binary forms, homogeneous of one degree per column.  The engine
below computes free generators of graded solution modules
``{ c : M(z) c(z) = 0 }`` degree by degree: at each degree the new generators
are a complement of the z-multiples of the generators already found, so the
output degrees are minimal.  Kernels of maps into torsion-free modules are
saturated, hence free here (two variables), and the generator count equals
cols - generic rank; the loop stops exactly there.
"""

from __future__ import annotations

import os

from .errors import InternalError
from .forms import BinaryForm, antipodal_transform
from .linalg import kernel_basis
from .scalars import ONE, ZERO, Scalar, scalar

DEFAULT_MAX_DEGREE = 64


def max_degree_cap():
    value = os.environ.get("QLIKE_MAX_DEGREE", "")
    try:
        return int(value) if value else DEFAULT_MAX_DEGREE
    except ValueError:
        return DEFAULT_MAX_DEGREE


class PolyMatrix:
    """Immutable matrix of binary forms, column j homogeneous of degree d_j."""

    __slots__ = ("rows", "cols", "col_degrees", "entries")

    def __init__(self, rows, cols, col_degrees, entries):
        col_degrees = tuple(col_degrees)
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry grid does not match shape %dx%d" % (rows, cols))
        if len(col_degrees) != cols:
            raise ValueError("need %d column degrees" % cols)
        for i in range(rows):
            for j in range(cols):
                e = entries[i][j]
                if not e.is_zero() and e.degree != col_degrees[j]:
                    raise ValueError(
                        "entry (%d, %d) has degree %d, column wants %d"
                        % (i, j, e.degree, col_degrees[j]))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "col_degrees", col_degrees)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMatrix is immutable")

    @staticmethod
    def from_columns(ambient, columns, degrees=None):
        """Build from a list of columns (each a list of `ambient` forms)."""
        cols = len(columns)
        if degrees is None:
            degrees = []
            for col in columns:
                d = 0
                for f in col:
                    if not f.is_zero():
                        d = f.degree
                        break
                degrees.append(d)
        entries = [[columns[j][i] for j in range(cols)] for i in range(ambient)]
        return PolyMatrix(ambient, cols, degrees, entries)

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def evaluate(self, z0, z1):
        z0, z1 = scalar(z0), scalar(z1)
        return [[e.evaluate(z0, z1) for e in row] for row in self.entries]

    def transpose_relations(self):
        """Rows-as-relations view: list of (row forms) used by the engine."""
        return [list(row) for row in self.entries]

    def map_entries(self, fn):
        return PolyMatrix(self.rows, self.cols, self.col_degrees,
                          [[fn(e) for e in row] for row in self.entries])

    def antipodal(self):
        return self.map_entries(antipodal_transform)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.col_degrees, self.entries) == \
               (other.rows, other.cols, other.col_degrees, other.entries)

    def __repr__(self):
        return "PolyMatrix(%dx%d, degrees=%r)" % (self.rows, self.cols,
                                                  list(self.col_degrees))


def generic_rank(rows_of_forms):
    """Generic rank of a matrix of forms, proven by point evaluation.

    A nonzero minor has degree at most the sum of per-column maxima, so
    sampling one more point than that bound realizes the generic rank.
    """
    if not rows_of_forms or not rows_of_forms[0]:
        return 0
    ncols = len(rows_of_forms[0])
    bound = 0
    for j in range(ncols):
        bound += max((row[j].degree for row in rows_of_forms
                      if not row[j].is_zero()), default=0)
    from .linalg import rank as scalar_rank
    best = 0
    for t in range(bound + 1):
        pt = [[e.evaluate(ONE, Scalar(t)) for e in row] for row in rows_of_forms]
        best = max(best, scalar_rank(pt))
        if best == min(len(rows_of_forms), ncols):
            break
    return best


class _Echelon:
    """Incremental row echelon over Q(i) for complement extraction."""

    def __init__(self):
        self.rows = []
        self.pivots = []

    def reduce(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                for j in range(p, len(v)):
                    if not row[j].is_zero():
                        v[j] = v[j] - c * row[j]
        return v

    def try_add(self, vec):
        """Insert vec if independent; returns True when it enlarged the span."""
        v = self.reduce(vec)
        p = None
        for j, c in enumerate(v):
            if not c.is_zero():
                p = j
                break
        if p is None:
            return False
        inv = v[p].inverse()
        v = [x * inv for x in v]
        self.rows.append(v)
        self.pivots.append(p)
        return True


def graded_kernel(relation_rows, n_unknowns, unknown_shifts=None,
                  expected_count=None, cap=None, context="graded kernel"):
    """Minimal free generators of { c : sum_j M[i][j] * c_j = 0 for all i }.

    ``relation_rows`` is a list of rows, each a list of ``n_unknowns`` forms;
    ``unknown_shifts[j]`` twists the grading so that at stage m the unknown
    c_j runs over forms of degree m + shift_j.  Returns a list of
    ``(m, tuple_of_forms)`` pairs sorted by m (ties: discovery order).
    """
    shifts = list(unknown_shifts or [0] * n_unknowns)
    if len(shifts) != n_unknowns:
        raise ValueError("need one shift per unknown")
    if n_unknowns == 0:
        return []
    if expected_count is None:
        rk = generic_rank(relation_rows) if relation_rows else 0
        expected_count = n_unknowns - rk
    if expected_count == 0:
        return []
    hard_cap = max_degree_cap()
    if cap is None:
        cap = hard_cap
    cap = min(cap, hard_cap)

    gens = []
    m = -max(shifts)
    while m <= cap:
        lengths = [max(0, m + s + 1) for s in shifts]
        total = sum(lengths)
        if total > 0:
            offsets = []
            acc = 0
            for L in lengths:
                offsets.append(acc)
                acc += L
            eq_rows = _equation_rows(relation_rows, shifts, lengths, offsets, m)
            sols = kernel_basis(eq_rows) if eq_rows else \
                [[ONE if i == j else ZERO for i in range(total)] for j in range(total)]
            if sols:
                ech = _Echelon()
                for mg, gvec in gens:
                    for mono0 in range(m - mg + 1):
                        mono1 = m - mg - mono0
                        mult = _multiple_coeffs(gvec, mg, shifts, lengths,
                                                offsets, mono0, mono1)
                        ech.try_add(mult)
                for sol in sols:
                    if ech.try_add(sol):
                        vec = _decode(sol, shifts, lengths, offsets, m)
                        gens.append((m, vec))
                        if len(gens) == expected_count:
                            return gens
        m += 1
    raise InternalError("%s did not terminate by degree %d" % (context, cap))


def _equation_rows(relation_rows, shifts, lengths, offsets, m):
    total = sum(lengths)
    out = []
    for row in relation_rows:
        by_degree = {}
        for j, f in enumerate(row):
            if lengths[j] == 0 or f.is_zero():
                continue
            D = f.degree + m + shifts[j]
            block = by_degree.get(D)
            if block is None:
                block = [[ZERO] * total for _ in range(D + 1)]
                by_degree[D] = block
            off = offsets[j]
            for u, a in enumerate(f.coeffs):
                if a.is_zero():
                    continue
                for t in range(lengths[j]):
                    block[u + t][off + t] = block[u + t][off + t] + a
        for D in sorted(by_degree):
            out.extend(by_degree[D])
    return out


def _multiple_coeffs(gvec, mg, shifts, lengths, offsets, mono0, mono1):
    """Coefficient vector of (z0^mono0 z1^mono1) * generator at stage m."""
    total = sum(lengths)
    out = [ZERO] * total
    for j, f in enumerate(gvec):
        if lengths[j] == 0 or f.is_zero():
            continue
        off = offsets[j]
        # multiplying by z0^a z1^b shifts the z1-power index by b
        for u, c in enumerate(f.coeffs):
            if not c.is_zero():
                out[off + u + mono1] = out[off + u + mono1] + c
    return out


def _decode(sol, shifts, lengths, offsets, m):
    vec = []
    for j, L in enumerate(lengths):
        deg = m + shifts[j]
        if L == 0:
            vec.append(BinaryForm.zero(max(deg, 0)))
        else:
            vec.append(BinaryForm(deg, sol[offsets[j]:offsets[j] + L]))
    return tuple(vec)


def graded_kernel_basis(M: PolyMatrix) -> PolyMatrix:
    """Free generators of the syzygy module { c : M(z) c(z) = 0 }.

    Requires uniform column degrees, so that kernel vectors have one degree
    per generator and fit the PolyMatrix type (the generator degree is the
    common degree of its entries, and the generator count is
    cols - generic rank).  Mixed-degree relation systems go through
    :func:`graded_kernel` with explicit unknown shifts instead.
    """
    from .errors import InvalidInput
    if len(set(M.col_degrees)) > 1:
        raise InvalidInput("graded_kernel_basis needs uniform column degrees;"
                           " use graded_kernel with unknown shifts")
    rows = M.transpose_relations()
    rk = generic_rank(rows)
    cap = sum(max(0, d) for d in M.col_degrees) + M.rows + 1
    gens = graded_kernel(rows, M.cols, expected_count=M.cols - rk, cap=cap,
                         context="syzygy computation")
    return PolyMatrix.from_columns(M.cols, [list(v) for _, v in gens],
                                   [m for m, _ in gens])


def annihilator_generators(columns, col_degrees, ambient):
    """Free generators of { g in S^ambient : g . column = 0 for all columns }.

    These are the functional covectors killing the pointwise span of the
    column family; the result is automatically the saturated annihilator
    module.  Returns a list of (degree, covector) pairs.
    """
    relations = []
    for col, d in zip(columns, col_degrees):
        relations.append(list(col))
    rk = generic_rank([[col[l] for l in range(ambient)] for col in columns]) \
        if columns else 0
    cap = sum(max(0, d) for d in col_degrees) + 2
    return graded_kernel(relations, ambient, expected_count=ambient - rk,
                         cap=cap, context="annihilator computation")


def solve_combination(columns, col_degrees, target, target_degree):
    """Write ``target`` as sum_i c_i * columns[i] with deg c_i = target_degree - d_i.

    Returns the coefficient forms, or None when target is not in the module
    generated by the columns.  For a free saturated basis the solution is
    unique when it exists.
    """
    ncols = len(columns)
    ambient = len(target)
    lengths = [max(0, target_degree - d + 1) for d in col_degrees]
    offsets = []
    acc = 0
    for L in lengths:
        offsets.append(acc)
        acc += L
    total = acc
    if total == 0:
        if all(f.is_zero() for f in target):
            return [BinaryForm.zero(max(target_degree - d, 0)) for d in col_degrees]
        return None
    nrows = ambient * (target_degree + 1)
    a = [[ZERO] * total for _ in range(nrows)]
    b = [ZERO] * nrows
    for l in range(ambient):
        base = l * (target_degree + 1)
        tf = target[l]
        if not tf.is_zero():
            if tf.degree != target_degree:
                return None
            for w, c in enumerate(tf.coeffs):
                b[base + w] = c
        for j in range(ncols):
            if lengths[j] == 0:
                continue
            f = columns[j][l]
            if f.is_zero():
                continue
            off = offsets[j]
            for u, cc in enumerate(f.coeffs):
                if cc.is_zero():
                    continue
                for t in range(lengths[j]):
                    a[base + u + t][off + t] = a[base + u + t][off + t] + cc
    from .linalg import solve
    sol = solve(a, b)
    if sol is None:
        return None
    out = []
    for j in range(ncols):
        deg = target_degree - col_degrees[j]
        if lengths[j] == 0:
            out.append(BinaryForm.zero(max(deg, 0)))
        else:
            out.append(BinaryForm(deg, sol[offsets[j]:offsets[j] + lengths[j]]))
    return out


def poly_mat_vec(M: PolyMatrix, vec):
    """Apply a PolyMatrix to a vector of forms (degrees must be compatible)."""
    out = []
    for i in range(M.rows):
        s = BinaryForm.zero(0)
        for j in range(M.cols):
            e = M.entries[i][j]
            f = vec[j]
            if e.is_zero() or f.is_zero():
                continue
            s = s + e * f
        out.append(s)
    return out
