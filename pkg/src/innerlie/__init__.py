"""Exact computational algebra for operators on M_n containing all inner derivations.

The library constructs, verifies and classifies the Lie and associative
subalgebras of the operator algebra gl(n^2) that contain every inner
derivation of the n-by-n matrix algebra, entirely in exact arithmetic
over the Gaussian rationals.
"""

from .scalars import GaussRational, Rational, gauss_sqrt, format_scalar, parse_scalar
from .subspaces import (Subspace, Vector, rref, member, solve_homogeneous,
                        solve_linear, SpanSolver)
from .matrices import (MatN, unit, identity, trace, transpose, mul, bracket,
                       traceless_part, scalar_part, vectorize, unvectorize,
                       traceless_basis)
from .operators import (OperatorN, tensor, inner_deriv, compose, op_bracket,
                        op_rank, op_trace, apply, in_sl, in_gl_n2m1, in_so,
                        in_so_quantified, t_matrix, identity_op, zero_op,
                        trace_map, trace_against, op_to_vec_row, vec_row_to_op)
from .catalog import (GModule, catalog, ambient, g_algebra, generate_gmodule,
                      w_lambda, w_lambda_op, w_lambda_mu, phi1, phi2, phi3,
                      conjugate, is_highest_weight, is_g_stable,
                      highest_weight_vector, CATALOG_NAMES, AMBIENT_NAMES)
from .closure import (ClosureReport, lie_closure, assoc_closure, is_lie_closed,
                      is_assoc_closed)
from .classify import ClassLabel, classify, construct, canonical_label, KINDS
from .corollaries import (trace_condition_space, trace_condition_value,
                          kernel_is_subalgebra, MultilinearPoly,
                          f_derivation_space, css_space, verify_css_equivalence,
                          rank_floor_check, density_interpolation_check,
                          TensorCertificate, certified_derivation_algebra)
from .errors import (DimensionMismatch, SingularParameter, NotInvertible,
                     HypothesisViolation, ClassificationError, NotContainingG,
                     NotLieClosed, UnsupportedN, Unclassifiable)
from .verify import run_suite

__version__ = "0.1.0"
