"""Exact-arithmetic engine for linear quaternionic-like structures and
homogeneous twistor spheres.

Everything is computed over the Gaussian rationals: binary forms, graded
kernels, subbundle/quotient decompositions over the sphere, section-space
("heaven") presentations, sl(2) representation theory and the normal bundles
of sphere orbits in homogeneous spaces.
"""

from .scalars import Scalar, scalar, parse_scalar, format_scalar
from .forms import (BinaryForm, Z0, Z1, antipodal_transform, form_gcd,
                    parse_form, format_form)
from .polymatrix import PolyMatrix, graded_kernel_basis
from .bundles import (SplittingType, SubbundleFamily, QuotientBundle,
                      saturate, annihilator, h0_twist, splitting_type,
                      subquotient_splitting, is_split_extension,
                      verify_canonical_sequences)
from .structures import (QLikeStructure, validate, analyze, dualize,
                         heaven_data, minus_data, verify_factorization,
                         check_morphism, minus_family)
from .lie import (LieAlgebra, Representation, Sl2Embedding, sl_algebra,
                  so_algebra, sp_algebra, validate_lie, jacobson_morozov,
                  sl2_decompose)
from .orbit import (GoodQuadruple, NormalBundleReport, validate_good_quadruple,
                    veronese_curve, orbit_tangent_family, normal_bundle,
                    dimension_report)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "Scalar", "scalar", "parse_scalar", "format_scalar",
    "BinaryForm", "Z0", "Z1", "antipodal_transform", "form_gcd",
    "parse_form", "format_form",
    "PolyMatrix", "graded_kernel_basis",
    "SplittingType", "SubbundleFamily", "QuotientBundle",
    "saturate", "annihilator", "h0_twist", "splitting_type",
    "subquotient_splitting", "is_split_extension",
    "verify_canonical_sequences",
    "QLikeStructure", "validate", "analyze", "dualize",
    "heaven_data", "minus_data", "verify_factorization", "check_morphism",
    "minus_family",
    "LieAlgebra", "Representation", "Sl2Embedding",
    "sl_algebra", "so_algebra", "sp_algebra",
    "validate_lie", "jacobson_morozov", "sl2_decompose",
    "GoodQuadruple", "NormalBundleReport", "validate_good_quadruple",
    "veronese_curve", "orbit_tangent_family", "normal_bundle",
    "dimension_report",
    "catalog",
    "__version__",
]
