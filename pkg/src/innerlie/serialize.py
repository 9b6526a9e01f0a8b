"""JSON wire formats for scalars, matrices, operators, and generator files.

Scalars: "p/q" strings for rationals ("p" when the denominator is 1),
{"re": "p/q", "im": "r/s"} for proper Gaussian rationals.

Matrices: n x n array of scalar entries.

Operators: either a dense n^2 x n^2 array, or a constructor term that the
evaluator expands:

    {"tensor": [A, B]}        a (x) b         (matrices A, B)
    {"ad": A}                 inner derivation of A
    {"sum": [T1, T2, ...]}    operator sum
    {"scale": [s, T]}         scalar multiple
    {"t": [alpha, beta]}      diagonal operator for M_n = M_n^0 + F*1

Generator files for the closure/classify commands are JSON lists whose
entries are operator terms, catalog names ("g", "V1", ..., "so2"), the
one-element dict {"<name>": true}, or {"W": "lambda"} for the W(lambda)
basis; names expand to the full list of basis operators of that space.
"""

from __future__ import annotations

from .catalog import ambient, catalog, w_lambda_op, CATALOG_NAMES
from .errors import DimensionMismatch
from .matrices import MatN, traceless_basis
from .operators import (OperatorN, from_entries, inner_deriv, t_matrix, tensor,
                        vec_row_to_op)
from .scalars import format_scalar, parse_scalar
from .subspaces import Subspace

# CLI-facing aliases for the ambient algebras
AMBIENT_ALIASES = {
    "gl2": "gl_n2", "sl2": "sl_n2", "gl2m1": "gl_n2m1",
    "sl2m1": "sl_n2m1", "so2": "so_n2", "so2m1": "so_n2m1",
}
SPACE_NAMES = tuple(CATALOG_NAMES) + tuple(AMBIENT_ALIASES)


def scalar_to_json(z):
    return format_scalar(z)


def scalar_from_json(obj):
    return parse_scalar(obj)


def matrix_to_json(m: MatN):
    return [[format_scalar(e) for e in row] for row in m.entries]


def matrix_from_json(obj) -> MatN:
    if not isinstance(obj, list):
        raise ValueError("matrix JSON must be a list of rows")
    return MatN([[parse_scalar(e) for e in row] for row in obj])


def operator_to_json(t: OperatorN):
    return matrix_to_json(t.entries())


def operator_from_json(obj, n: int) -> OperatorN:
    """Evaluate a dense matrix or a constructor term to an operator."""
    if isinstance(obj, list):
        return from_entries([[parse_scalar(e) for e in row] for row in obj], n)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"not an operator term: {obj!r}")
    key, val = next(iter(obj.items()))
    if key == "tensor":
        a, b = val
        return tensor(matrix_from_json(a), matrix_from_json(b))
    if key == "ad":
        return inner_deriv(matrix_from_json(val))
    if key == "sum":
        terms = [operator_from_json(v, n) for v in val]
        if not terms:
            raise ValueError("empty operator sum")
        out = terms[0]
        for t in terms[1:]:
            out = out + t
        return out
    if key == "scale":
        s, term = val
        return parse_scalar(s) * operator_from_json(term, n)
    if key == "t":
        alpha, beta = val
        return t_matrix(parse_scalar(alpha), parse_scalar(beta), n)
    raise ValueError(f"unknown operator constructor {key!r}")


def space_by_name(name: str, n: int) -> Subspace:
    if name in AMBIENT_ALIASES:
        return ambient(AMBIENT_ALIASES[name], n)
    return catalog(name, n).space


def generators_from_json(obj, n: int) -> list:
    """Expand a generator-file JSON list into operators."""
    if not isinstance(obj, list):
        raise ValueError("generator file must hold a JSON list")
    out = []
    for entry in obj:
        if isinstance(entry, str):
            space = space_by_name(entry, n)
            out.extend(vec_row_to_op(r, n) for r in space.basis_rows())
            continue
        if isinstance(entry, dict) and len(entry) == 1:
            key, val = next(iter(entry.items()))
            if key == "W":
                lam = parse_scalar(val)
                out.extend(w_lambda_op(a, lam, n) for a in traceless_basis(n))
                continue
            if key in SPACE_NAMES and val is True:
                space = space_by_name(key, n)
                out.extend(vec_row_to_op(r, n) for r in space.basis_rows())
                continue
        out.append(operator_from_json(entry, n))
    return out


def subspace_basis_to_json(s: Subspace):
    return [[format_scalar(e) for e in row] for row in s.basis]
