"""The catalog of ad-stable modules and ambient algebras inside gl(n^2).

Constructs, as exact subspaces of the n^4-dimensional operator space:

* ``g``            -- all inner derivations (isomorphic to sl(n));
* ``V1`` .. ``V8`` -- the simple g-modules decomposing sl(n^2);
* ``p``, ``q``     -- the maps x -> tr(x)a and x -> tr(xa)1, a traceless;
* ``V4p``          -- the twisted copy of V4 inside V4 + p + q;
* the ambient algebras gl(n^2), sl(n^2), gl(n^2-1), sl(n^2-1), so(n^2),
  so(n^2-1);
* the one-parameter family W(lambda) with g + W(lambda) Lie-closed.

Each module is generated from its highest weight vector by bracket
closure against the Chevalley generators of g; correctness is certified
afterwards by the dimension ledger and stability checks rather than by
weight theory.  For p, q, V4 and V8 an independent explicit span is also
built and compared.

The module dimension table is only certified for n >= 5; for smaller n
all constructions still run but GModule.table_certified is False.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import gint, matrices, operators
from .errors import DimensionMismatch, SingularParameter
from .gint import GArr
from .matrices import MatN, identity, traceless_basis, unit
from .operators import (OperatorN, identity_op, inner_deriv, op_bracket, op_inverse,
                        op_to_vec_row, tensor, trace_against, trace_map, zero_op)
from .scalars import GaussRational, as_gauss
from .subspaces import Subspace, solve_homogeneous
from .closure import closure_loop

CATALOG_NAMES = ("g", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "p", "q", "V4p")
AMBIENT_NAMES = ("gl_n2", "sl_n2", "gl_n2m1", "sl_n2m1", "so_n2", "so_n2m1")

_ALIASES = {"V4prime": "V4p", "V4'": "V4p"}


@dataclass(frozen=True)
class GModule:
    """A named ad-stable subspace with its tabulated data."""
    name: str
    n: int
    space: Subspace
    expected_dim: int
    hwv: OperatorN | None
    table_certified: bool

    @property
    def dim(self) -> int:
        return self.space.dim


def expected_dim(name: str, n: int) -> int:
    m = n * n
    if name in ("g", "V3", "V4", "V7", "p", "q", "V4p"):
        return m - 1
    if name in ("V1", "V2"):
        return (m - 1) * (m - 4) // 4
    if name == "V5":
        return n * n * (n - 1) * (n + 3) // 4
    if name == "V6":
        return n * n * (n + 1) * (n - 3) // 4
    if name == "V8":
        return 1
    raise KeyError(f"unknown module name {name!r}")


# Weight of each highest weight vector, as a map i -> coefficient of eps_i,
# where eps_i reads the i-th diagonal entry (1-based; "n-1"/"n" resolved per n).
_WEIGHTS = {
    "g": {1: 1, "n": -1},
    "V1": {1: 1, 2: 1, "n": -2},
    "V2": {1: 2, "n-1": -1, "n": -1},
    "V3": {1: 1, "n": -1},
    "V4": {1: 1, "n": -1},
    "V5": {1: 2, "n": -2},
    "V6": {1: 1, 2: 1, "n-1": -1, "n": -1},
    "V7": {1: 1, "n": -1},
    "V8": {},
    "p": {1: 1, "n": -1},
    "q": {1: 1, "n": -1},
    "V4p": {1: 1, "n": -1},
}


def weight_functional(name: str, n: int) -> dict:
    """The tabulated highest weight as {diagonal index: coefficient}."""
    out = {}
    for k, v in _WEIGHTS[name].items():
        i = n if k == "n" else (n - 1 if k == "n-1" else k)
        out[i] = out.get(i, 0) + v
    return {i: c for i, c in out.items() if c}


def weight_eigenvalue(name: str, n: int, h: MatN) -> GaussRational:
    """Value of the tabulated weight on a diagonal matrix h."""
    w = weight_functional(name, n)
    val = GaussRational(0)
    for i, c in w.items():
        val = val + c * h[i - 1, i - 1]
    return val


def highest_weight_vector(name: str, n: int) -> OperatorN:
    """The tabulated highest weight vector of the named module."""
    name = _ALIASES.get(name, name)
    e = lambda i, j: unit(n, i, j)
    one = identity(n)
    if name == "g":
        return inner_deriv(e(1, n))
    if name == "V1":
        return tensor(e(1, n), e(2, n)) - tensor(e(2, n), e(1, n))
    if name == "V2":
        return tensor(e(1, n - 1), e(1, n)) - tensor(e(1, n), e(1, n - 1))
    if name == "V3":
        t = zero_op(n)
        for i in range(1, n + 1):
            t = t + tensor(e(1, i), e(i, n)) - tensor(e(i, n), e(1, i))
        return t
    if name == "V4":
        return tensor(e(1, n), one) + tensor(one, e(1, n))
    if name == "V5":
        return tensor(e(1, n), e(1, n))
    if name == "V6":
        return (tensor(e(2, n - 1), e(1, n)) + tensor(e(1, n), e(2, n - 1))
                - tensor(e(1, n - 1), e(2, n)) - tensor(e(2, n), e(1, n - 1)))
    if name == "V7":
        t = zero_op(n)
        for i in range(1, n + 1):
            t = t + tensor(e(1, i), e(i, n)) + tensor(e(i, n), e(1, i))
        return t
    if name == "V8":
        t = tensor(one, one)
        s = zero_op(n)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                s = s + tensor(e(i, j), e(j, i))
        return t - n * s
    if name == "p":
        t = zero_op(n)
        for i in range(1, n + 1):
            t = t + tensor(e(1, i), e(i, n))
        return t
    if name == "q":
        t = zero_op(n)
        for i in range(1, n + 1):
            t = t + tensor(e(i, n), e(1, i))
        return t
    if name == "V4p":
        t = n * (tensor(e(1, n), one) + tensor(one, e(1, n)))
        for i in range(1, n + 1):
            t = t - 2 * (tensor(e(1, i), e(i, n)) + tensor(e(i, n), e(1, i)))
        return t
    raise KeyError(f"unknown module name {name!r}")


@lru_cache(maxsize=None)
def chevalley_generators(n: int) -> tuple:
    """The raising/lowering derivations ad e_{i,i+1}, ad e_{i+1,i} generating g."""
    out = []
    for i in range(1, n):
        out.append(inner_deriv(unit(n, i, i + 1)))
        out.append(inner_deriv(unit(n, i + 1, i)))
    return tuple(out)


def generate_gmodule(seeds, n: int) -> Subspace:
    """Smallest subspace containing the seeds and bracket-stable under g.

    Worklist closure against the 2(n-1) Chevalley generators; since ad is
    a Lie homomorphism, stability under them implies stability under all
    inner derivations.
    """
    seed_rows = []
    for s in seeds:
        row = op_to_vec_row(s) if isinstance(s, OperatorN) else s
        seed_rows.append(row.reshape(n * n, n * n))
    action = [op_to_vec_row(c).reshape(n * n, n * n) for c in chevalley_generators(n)]
    eb, _rounds, _products = closure_loop(action, seed_rows, n, kind="lie")
    return Subspace(eb)


def _explicit_span(name: str, n: int) -> Subspace | None:
    """Independent direct constructions for p, q, V4, V8."""
    if name == "p":
        ops = [trace_map(a) for a in traceless_basis(n)]
    elif name == "q":
        ops = [trace_against(a) for a in traceless_basis(n)]
    elif name == "V4":
        one = identity(n)
        ops = [tensor(a, one) + tensor(one, a) for a in traceless_basis(n)]
    elif name == "V8":
        ops = [highest_weight_vector("V8", n)]
    else:
        return None
    return Subspace.from_rows([op_to_vec_row(t) for t in ops], n ** 4)


@lru_cache(maxsize=None)
def g_algebra(n: int) -> GModule:
    """The algebra of all inner derivations, as a module over itself."""
    if n < 2:
        raise DimensionMismatch("n must be at least 2")
    ops = [inner_deriv(a) for a in traceless_basis(n)]
    space = Subspace.from_rows([op_to_vec_row(t) for t in ops], n ** 4)
    hwv = highest_weight_vector("g", n)
    mod = GModule("g", n, space, expected_dim("g", n), hwv, n >= 5)
    if mod.dim != mod.expected_dim:
        raise AssertionError(f"g at n={n}: dim {mod.dim} != {mod.expected_dim}")
    return mod


@lru_cache(maxsize=None)
def catalog(name: str, n: int) -> GModule:
    """Construct a named module; generated from its highest weight vector."""
    name = _ALIASES.get(name, name)
    if name not in CATALOG_NAMES:
        raise KeyError(f"unknown module name {name!r}")
    if n < 3:
        raise DimensionMismatch("catalog constructions need n >= 3")
    if name == "g":
        return g_algebra(n)
    hwv = highest_weight_vector(name, n)
    space = generate_gmodule([hwv], n)
    explicit = _explicit_span(name, n)
    if explicit is not None and explicit != space:
        raise AssertionError(f"{name} at n={n}: generated span differs from explicit span")
    return GModule(name, n, space, expected_dim(name, n), hwv, n >= 5)


# -- ambient algebras ------------------------------------------------------

def _veci_row(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64).ravel()


@lru_cache(maxsize=None)
def ambient(name: str, n: int) -> Subspace:
    """The named ambient algebra as a subspace of operator coordinates."""
    d = n * n
    width = d * d
    if name == "gl_n2":
        return Subspace.full(width)
    if name == "sl_n2":
        row = GArr(np.eye(d, dtype=np.int64).ravel(), None, 1)
        return solve_homogeneous([row], width)
    if name == "gl_n2m1":
        rows = []
        veci = _veci_row(n)
        diag_pos = np.flatnonzero(veci)
        for r in range(d):
            re = np.zeros(width, dtype=np.int64)
            re[r * d + diag_pos] = 1
            rows.append(GArr(re, None, 1))
        for a in traceless_basis(n):
            ga, _ = matrices.mat_to_garr(a)
            re = np.outer(veci, ga.re.ravel()).ravel()
            rows.append(GArr(re.astype(np.int64), None))
        return solve_homogeneous(rows, width)
    if name == "so_n2":
        perm = operators._swap_perm(n)
        rows = []
        for k in range(d):
            for l in range(k, d):
                re = np.zeros(width, dtype=np.int64)
                re[int(perm[k]) * d + l] += 1
                re[int(perm[l]) * d + k] += 1
                rows.append(GArr(re, None))
        return solve_homogeneous(rows, width)
    if name == "sl_n2m1":
        return ambient("sl_n2", n).intersect(ambient("gl_n2m1", n))
    if name == "so_n2m1":
        return ambient("so_n2", n).intersect(ambient("gl_n2m1", n))
    raise KeyError(f"unknown ambient name {name!r}")


@lru_cache(maxsize=None)
def t0_span(n: int) -> Subspace:
    """The 2-dimensional space of operators diagonal for M_n = M_n^0 + F*1."""
    rows = [op_to_vec_row(t_proj_traceless(n)), op_to_vec_row(t_proj_scalar(n))]
    return Subspace.from_rows(rows, n ** 4)


def t_proj_traceless(n: int) -> OperatorN:
    """x -> traceless part of x (acts as 1 on M_n^0 and 0 on F*1)."""
    return operators.t_matrix(1, 0, n)


def t_proj_scalar(n: int) -> OperatorN:
    """x -> (tr(x)/n) * 1 (acts as 0 on M_n^0 and 1 on F*1)."""
    return operators.t_matrix(0, 1, n)


# -- the W(lambda) family --------------------------------------------------

def w_lambda_mu(lam, n: int) -> GaussRational:
    """The coefficient mu = -2*lambda / (n*lambda + 2); rejects lambda = -2/n."""
    lam = as_gauss(lam)
    den = n * lam + 2
    if den.is_zero():
        raise SingularParameter(f"lambda = -2/{n} is a singular parameter")
    return (-2 * lam) / den


def w_lambda_op(a: MatN, lam, n: int) -> OperatorN:
    """x -> ax + xa + lambda*tr(x)*a + mu*tr(xa)*1 for one traceless a."""
    lam = as_gauss(lam)
    mu = w_lambda_mu(lam, n)
    one = identity(n)
    t = tensor(a, one) + tensor(one, a)
    if not lam.is_zero():
        t = t + lam * trace_map(a)
    if not mu.is_zero():
        t = t + mu * trace_against(a)
    return t


def w_lambda(lam, n: int) -> Subspace:
    """The module W(lambda); g + W(lambda) is closed under the bracket."""
    ops = [w_lambda_op(a, lam, n) for a in traceless_basis(n)]
    return Subspace.from_rows([op_to_vec_row(t) for t in ops], n ** 4)


# -- the intertwiners phi1, phi2, phi3 --------------------------------------

def recover_ad_argument(d: OperatorN) -> MatN:
    """The traceless a with d = ad a; raises if d is not an inner derivation."""
    n = d.n
    re4 = d.num.re.reshape(n, n, n, n)
    pr = np.einsum("iljl->ij", re4)
    pi = None
    if d.num.im is not None:
        pi = np.einsum("iljl->ij", d.num.im.reshape(n, n, n, n))
    ent = []
    for i in range(n):
        row = []
        for j in range(n):
            zr = Fraction(int(pr[i, j]), n * d.den)
            zi = Fraction(0 if pi is None else int(pi[i, j]), n * d.den)
            row.append(GaussRational(zr, zi))
        ent.append(row)
    a = MatN(ent)
    if inner_deriv(a) != OperatorN(d.n, d.num, d.den):
        raise ValueError("operator is not an inner derivation")
    return a


def phi1(d: OperatorN) -> OperatorN:
    """g -> p: sends ad a to the map x -> tr(x) a."""
    return trace_map(recover_ad_argument(d))


def phi2(d: OperatorN) -> OperatorN:
    """g -> q: sends ad a to the map x -> tr(xa) 1."""
    return trace_against(recover_ad_argument(d))


def phi3(d: OperatorN) -> OperatorN:
    """g -> V4: sends ad a to a(x)1 + 1(x)a, i.e. x -> ax + xa."""
    a = recover_ad_argument(d)
    one = identity(d.n)
    return tensor(a, one) + tensor(one, a)


# -- conjugation and highest-weight certification ---------------------------

def conjugate(space: Subspace, t: OperatorN) -> Subspace:
    """{t s t^-1 : s in space}; requires t invertible."""
    n = t.n
    d = n * n
    if space.ambient_dim != d * d:
        raise DimensionMismatch("subspace ambient does not match the operator size")
    tinv = op_inverse(t)
    rows = []
    for r in space.basis_rows():
        m = r.reshape(d, d)
        out = gint.matmul(gint.matmul(t.num, m), tinv.num)
        row = out.ravel()
        gint.content_reduce(row)
        rows.append(row)
    return Subspace.from_rows(rows, d * d)


def is_highest_weight(v: OperatorN, n: int) -> bool:
    """Annihilated by every raising derivation ad e_ij with i < j."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not op_bracket(inner_deriv(unit(n, i, j)), v).is_zero():
                return False
    return True


def is_g_stable(space: Subspace, n: int) -> bool:
    """Brackets with every inner derivation stay inside the subspace."""
    d = n * n
    if space.dim == 0:
        return True
    ann = space.annihilator()
    if ann.re.shape[0] == 0:
        return True
    mat = space.row_matrix()
    stack = mat.reshape(space.dim, d, d)
    for dv in g_algebra(n).space.basis_rows():
        dm = dv.reshape(d, d)
        br = gint.combine((1, 0), gint.matmul(dm, stack), (1, 0), gint.matmul(stack, dm))
        flat = br.reshape(space.dim, d * d)
        ft = GArr(flat.re.T, None if flat.im is None else flat.im.T, flat.bound)
        if not gint.matmul(ann, ft).is_zero():
            return False
    return True
