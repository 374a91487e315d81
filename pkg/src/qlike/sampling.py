"""Seeded random generation of valid structures and quadruples.

Everything is driven by `random.Random(seed)` so failures are reproducible;
the generators rejection-sample through the validators.
"""

from __future__ import annotations

import random

from .errors import InvalidInput
from .forms import BinaryForm
from .lie import builtin_algebra, jacobson_morozov
from .orbit import GoodQuadruple
from .polymatrix import PolyMatrix
from .scalars import Scalar, ZERO
from .structures import QLikeStructure, validate


def _random_scalar(rng, span=2):
    return Scalar(rng.randint(-span, span), rng.randint(-span, span))


def _random_form(rng, degree, span=2):
    coeffs = [_random_scalar(rng, span) for _ in range(degree + 1)]
    return BinaryForm(degree, coeffs)


def random_structure(rng: random.Random, max_dim=8, max_degree=3,
                     max_tries=400) -> QLikeStructure:
    """A random valid complex-mode structure (validator-passing, warnings
    allowed), dim <= max_dim and column degrees <= max_degree."""
    for _ in range(max_tries):
        n = rng.randint(3, max_dim)
        k = rng.randint(1, min(n - 1, 4))
        degrees = [rng.randint(1, max_degree) for _ in range(k)]
        cols = [[_random_form(rng, d) for _ in range(n)] for d in degrees]
        try:
            spanning = PolyMatrix.from_columns(n, cols, degrees)
            S = QLikeStructure(n, k, spanning, None, complex_mode=True)
        except Exception:
            continue
        try:
            report = validate(S)
        except Exception:
            continue
        if report.passed:
            return S
    raise InvalidInput("could not sample a valid structure in %d tries"
                       % max_tries)


def random_structures(seed, count, max_dim=8, max_degree=3):
    rng = random.Random(seed)
    return [random_structure(rng, max_dim, max_degree) for _ in range(count)]


_UPPER_UNITS = {
    "sl(3)": [(0, 1), (0, 2), (1, 2)],
    "sl(4)": [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
}


def random_nilpotent(rng: random.Random, algebra_name):
    """A nonzero ad-nilpotent element in coordinates of the built-in basis."""
    ma = builtin_algebra(algebra_name)
    n = len(ma.basis_matrices[0])
    if algebra_name.startswith("sl"):
        while True:
            m = [[ZERO] * n for _ in range(n)]
            nonzero = False
            for (i, j) in _UPPER_UNITS[algebra_name]:
                c = Scalar(rng.randint(-2, 2))
                if not c.is_zero():
                    nonzero = True
                m[i][j] = c
            if nonzero:
                return ma, ma.coordinates_of_matrix(m)
    if algebra_name == "so(5)":
        # N = v w^T - w v^T for isotropic orthogonal v, w is antisymmetric
        # with N^2 = 0; v runs over the isotropic conic in the first three
        # coordinates, w over the fixed isotropic line in the last two.
        while True:
            a = rng.randint(-2, 2)
            b = rng.randint(-2, 2)
            s = rng.randint(-2, 2)
            if (a == 0 and b == 0) or s == 0:
                continue
            v = [Scalar(a * a - b * b), Scalar(0, a * a + b * b),
                 Scalar(2 * a * b), ZERO, ZERO]
            w = [ZERO, ZERO, ZERO, Scalar(s), Scalar(0, s)]
            m = [[v[i] * w[j] - w[i] * v[j] for j in range(5)]
                 for i in range(5)]
            if any(not x.is_zero() for row in m for x in row):
                return ma, ma.coordinates_of_matrix(m)
    raise InvalidInput("no nilpotent sampler for %r" % algebra_name)


def random_adjoint_quadruple(rng: random.Random,
                             pool=("sl(3)", "sl(4)", "so(5)")) -> GoodQuadruple:
    name = rng.choice(list(pool))
    ma, y = random_nilpotent(rng, name)
    tau = jacobson_morozov(ma.algebra, y, assume_semisimple=True)
    return GoodQuadruple(ma.algebra, ma.algebra.adjoint_representation(),
                         tau, (tuple(tau.e), tuple(tau.h), tuple(tau.f)),
                         name="random-adjoint:%s" % name,
                         nilpotent=tuple(tau.f), adjoint=True)


def random_quadruples(seed, count, pool=("sl(3)", "sl(4)", "so(5)")):
    rng = random.Random(seed)
    return [random_adjoint_quadruple(rng, pool) for _ in range(count)]
