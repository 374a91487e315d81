"""Canonical JSON interchange: structures, quadruples, reports.

JSON dumps are canonical (sorted keys, fixed separators) so identical inputs
produce byte-identical reports; digests are sha256 of the canonical text.
"""

from __future__ import annotations

import hashlib
import json

from .errors import InvalidInput
from .lie import (LieAlgebra, Representation, Sl2Embedding, builtin_algebra,
                  jacobson_morozov, wedge_square_representation)
from .orbit import GoodQuadruple
from .scalars import parse_scalar, scalar
from .structures import QLikeStructure


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def digest(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


def load_structure_file(path) -> QLikeStructure:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput("cannot read structure file %s: %s" % (path, exc))
    try:
        return QLikeStructure.from_json(data)
    except (KeyError, ValueError, TypeError) as exc:
        raise InvalidInput("bad structure file %s: %s" % (path, exc))


def _parse_vector(values):
    return [parse_scalar(v) if isinstance(v, str) else scalar(v)
            for v in values]


def quadruple_from_json(data) -> GoodQuadruple:
    """Assemble a quadruple from its JSON description.

    algebra: a built-in name ("sl(3)", "so(5)", "sp(4)") or a structure
    constant table; representation: "defining" | "adjoint" | "wedge-square"
    (matrix algebras only for the first and last); sl2: explicit {"E","H","F"}
    vectors or {"nilpotent": ...}; u_basis: vectors, "full", or "sl2-image".
    """
    alg_spec = data.get("algebra")
    ma = None
    if isinstance(alg_spec, str):
        ma = builtin_algebra(alg_spec)
        algebra = ma.algebra
    elif isinstance(alg_spec, dict):
        algebra = LieAlgebra.from_json(alg_spec)
    else:
        raise InvalidInput("quadruple JSON needs an 'algebra' entry")

    rep_spec = data.get("representation", "adjoint")
    if rep_spec == "adjoint":
        sigma = algebra.adjoint_representation()
    elif rep_spec == "defining":
        if ma is None:
            raise InvalidInput("'defining' needs a built-in algebra name")
        sigma = ma.defining_representation()
    elif rep_spec == "wedge-square":
        if ma is None:
            raise InvalidInput("'wedge-square' needs a built-in algebra name")
        sigma, _ = wedge_square_representation(ma)
    elif isinstance(rep_spec, dict) and "matrices" in rep_spec:
        mats = [[[scalar(x) if not isinstance(x, str) else parse_scalar(x)
                  for x in row] for row in m] for m in rep_spec["matrices"]]
        sigma = Representation(algebra, mats)
    else:
        raise InvalidInput("bad representation spec %r" % (rep_spec,))

    sl2 = data.get("sl2")
    nilpotent = None
    if isinstance(sl2, dict) and "nilpotent" in sl2:
        spec = sl2["nilpotent"]
        if isinstance(spec, str):
            if ma is None:
                raise InvalidInput("named nilpotents need a built-in algebra")
            from .catalog import named_nilpotent
            y = named_nilpotent(ma, spec)
        else:
            y = _parse_vector(spec)
        tau = jacobson_morozov(algebra, y)
        nilpotent = tuple(tau.f)
    elif isinstance(sl2, dict):
        tau = Sl2Embedding(algebra, _parse_vector(sl2["E"]),
                           _parse_vector(sl2["H"]), _parse_vector(sl2["F"]))
    else:
        raise InvalidInput("quadruple JSON needs an 'sl2' entry")

    u_spec = data.get("u_basis", "sl2-image")
    if u_spec == "full":
        n = sigma.space_dim
        u_basis = [tuple(scalar(1) if i == j else scalar(0) for i in range(n))
                   for j in range(n)]
    elif u_spec == "sl2-image":
        u_basis = [tuple(tau.e), tuple(tau.h), tuple(tau.f)]
        nilpotent = tuple(tau.f)
    else:
        u_basis = [tuple(_parse_vector(v)) for v in u_spec]
    return GoodQuadruple(algebra, sigma, tau, tuple(u_basis),
                         name=data.get("name", "file-quadruple"),
                         nilpotent=nilpotent,
                         adjoint=(rep_spec == "adjoint"))


def load_quadruple_file(path) -> GoodQuadruple:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput("cannot read quadruple file %s: %s" % (path, exc))
    return quadruple_from_json(data)
