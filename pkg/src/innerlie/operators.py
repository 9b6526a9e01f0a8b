"""Linear operators on M_n, i.e. the Lie algebra gl(n^2).

An operator is stored as its n^2 x n^2 matrix acting on row-major
vectorized matrices (see ``matrices.vectorize``).  The elementary tensor
a (x) b denotes the map x -> a*x*b; under the vectorization convention its
matrix is kron(a, b^T), and composition obeys
(a (x) b)(c (x) d) = ac (x) db.

Internally the matrix is a primitive-integer array plus a positive
denominator, so operator arithmetic is exact and cheap; rational entries
are materialized only on demand.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from . import gint, matrices
from .errors import DimensionMismatch, NotInvertible
from .gint import GArr, EchelonBasis
from .matrices import MatN, mat_to_garr, garr_to_mat
from .scalars import GaussRational, as_gauss
from .subspaces import Vector, vector_to_garr


class OperatorN:
    """A linear map on M_n held as an exact n^2 x n^2 matrix."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: GArr, den: int = 1, _canonical: bool = False):
        if den <= 0:
            num, den = gint.scalar_mul(num, -1), -den
        if not _canonical:
            g = gcd(gint.content(num), den)
            if g > 1:
                num = GArr(num.re // g, None if num.im is None else num.im // g)
                den //= g
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("OperatorN is immutable")

    @property
    def dim(self) -> int:
        return self.n * self.n

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, OperatorN):
            return NotImplemented
        if self.n != other.n or self.den != other.den:
            return False
        a, b = self.num, other.num
        if not np.array_equal(a.re, b.re):
            return False
        if a.im is None and b.im is None:
            return True
        ai = a.im if a.im is not None else np.zeros_like(a.re)
        bi = b.im if b.im is not None else np.zeros_like(b.re)
        return np.array_equal(ai, bi)

    def __add__(self, other):
        return op_add(self, other)

    def __sub__(self, other):
        return op_add(self, op_scale(other, GaussRational(-1)))

    def __neg__(self):
        return op_scale(self, GaussRational(-1))

    def __mul__(self, scalar):
        return op_scale(self, as_gauss(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)

    def entries(self) -> MatN:
        """The full rational matrix (a MatN of size n^2, for inspection/serialization)."""
        return garr_to_mat(self.num, self.den)

    def __repr__(self):
        return f"OperatorN(n={self.n}, den={self.den})"


def _same_n(s: OperatorN, t: OperatorN):
    if s.n != t.n:
        raise DimensionMismatch(f"operator sizes differ: n={s.n} vs n={t.n}")


# -- constructors --------------------------------------------------------

def zero_op(n: int) -> OperatorN:
    return OperatorN(n, gint.gzeros((n * n, n * n)), 1, _canonical=True)


def identity_op(n: int) -> OperatorN:
    d = n * n
    return OperatorN(n, GArr(np.eye(d, dtype=np.int64), None, 1), 1, _canonical=True)


def tensor(a: MatN, b: MatN) -> OperatorN:
    """The map x -> a*x*b."""
    if a.n != b.n:
        raise DimensionMismatch("tensor factors of different sizes")
    ga, da = mat_to_garr(a)
    gb, db = mat_to_garr(b)
    gbt = GArr(gb.re.T.copy(), None if gb.im is None else gb.im.T.copy(), gb.bound)
    return OperatorN(a.n, gint.kron(ga, gbt), da * db)


def inner_deriv(a: MatN) -> OperatorN:
    """The inner derivation ad a : x -> ax - xa."""
    n = a.n
    ga, da = mat_to_garr(a)
    eye = GArr(np.eye(n, dtype=np.int64), None, 1)
    gat = GArr(ga.re.T.copy(), None if ga.im is None else ga.im.T.copy(), ga.bound)
    left = gint.kron(ga, eye)
    right = gint.kron(eye, gat)
    num = gint.combine((1, 0), left, (1, 0), right)
    return OperatorN(n, num, da)


def mul_left(a: MatN) -> OperatorN:
    """x -> a*x."""
    return tensor(a, matrices.identity(a.n))


def mul_right(b: MatN) -> OperatorN:
    """x -> x*b."""
    return tensor(matrices.identity(b.n), b)


def trace_map(a: MatN) -> OperatorN:
    """x -> tr(x) * a."""
    n = a.n
    ga, da = mat_to_garr(a)
    veci = np.eye(n, dtype=np.int64).ravel()
    re = np.outer(ga.re.ravel(), veci)
    im = None if ga.im is None else np.outer(ga.im.ravel(), veci)
    return OperatorN(n, GArr(re, im), da)


def trace_against(a: MatN) -> OperatorN:
    """x -> tr(x*a) * 1."""
    n = a.n
    ga, da = mat_to_garr(a)
    veci = np.eye(n, dtype=np.int64).ravel()
    at_re = ga.re.T.ravel()
    re = np.outer(veci, at_re)
    im = None if ga.im is None else np.outer(veci, ga.im.T.ravel())
    return OperatorN(n, GArr(re, im), da)


def t_matrix(alpha, beta, n: int) -> OperatorN:
    """The operator acting as alpha on the traceless part and beta on F*1."""
    alpha, beta = as_gauss(alpha), as_gauss(beta)
    d = 1
    for q in (alpha.re, alpha.im, beta.re, beta.im):
        d = d * q.denominator // gcd(d, q.denominator)
    dd = n * n
    eye = np.eye(dd, dtype=object)
    jj = np.outer(np.eye(n, dtype=object).ravel(), np.eye(n, dtype=object).ravel())
    ar, ai = int(alpha.re * d), int(alpha.im * d)
    br, bi = int(beta.re * d), int(beta.im * d)
    re = ar * (n * eye - jj) + br * jj
    im = None
    if ai or bi:
        im = ai * (n * eye - jj) + bi * jj
    return OperatorN(n, gint.from_int_array(re, im), n * d)


def from_entries(entries, n: int | None = None) -> OperatorN:
    """Operator from a dense n^2 x n^2 matrix of scalars."""
    m = MatN(entries)
    if n is None:
        r = int(round(m.n ** 0.5))
        if r * r != m.n:
            raise DimensionMismatch(f"matrix size {m.n} is not a perfect square")
        n = r
    elif m.n != n * n:
        raise DimensionMismatch(f"matrix size {m.n}, expected {n * n}")
    g, den = mat_to_garr(m)
    return OperatorN(n, g, den)


# -- arithmetic -----------------------------------------------------------

def op_add(s: OperatorN, t: OperatorN) -> OperatorN:
    _same_n(s, t)
    l = s.den * t.den // gcd(s.den, t.den)
    a = gint.scalar_mul(s.num, l // s.den)
    b = gint.scalar_mul(t.num, l // t.den)
    return OperatorN(s.n, gint.add(a, b), l)


def op_scale(t: OperatorN, c) -> OperatorN:
    c = as_gauss(c)
    d = c.re.denominator
    d = d * c.im.denominator // gcd(d, c.im.denominator)
    num = gint.scalar_mul(t.num, int(c.re * d), int(c.im * d))
    return OperatorN(t.n, num, t.den * d)


def compose(s: OperatorN, t: OperatorN) -> OperatorN:
    """The composite map x -> s(t(x))."""
    _same_n(s, t)
    return OperatorN(s.n, gint.matmul(s.num, t.num), s.den * t.den)


def op_bracket(s: OperatorN, t: OperatorN) -> OperatorN:
    _same_n(s, t)
    st = gint.matmul(s.num, t.num)
    ts = gint.matmul(t.num, s.num)
    return OperatorN(s.n, gint.combine((1, 0), st, (1, 0), ts), s.den * t.den)


def apply(t: OperatorN, x: MatN) -> MatN:
    if x.n != t.n:
        raise DimensionMismatch(f"operator on M_{t.n} applied to a {x.n} x {x.n} matrix")
    gx, dx = mat_to_garr(x)
    col = gx.reshape(-1, 1)
    out = gint.matmul(t.num, col).reshape(t.n, t.n)
    return garr_to_mat(out, t.den * dx)


def op_trace(t: OperatorN) -> GaussRational:
    tr_re = int(np.trace(t.num.re))
    tr_im = 0 if t.num.im is None else int(np.trace(t.num.im))
    return GaussRational(Fraction(tr_re, t.den), Fraction(tr_im, t.den))


def op_rank(t: OperatorN) -> int:
    """Rank of the operator as a linear map M_n -> M_n."""
    eb = EchelonBasis(t.dim)
    for i in range(t.dim):
        row = GArr(t.num.re[i].copy(),
                   None if t.num.im is None else t.num.im[i].copy())
        eb.insert(row)
    return eb.dim


def op_inverse(t: OperatorN) -> OperatorN:
    d = t.dim
    eb = EchelonBasis(2 * d)
    dt = object if t.num.re.dtype == object else np.int64
    for i in range(d):
        re = np.zeros(2 * d, dtype=dt)
        re[:d] = t.num.re[i]
        re[d + i] = 1
        im = None
        if t.num.im is not None:
            im = np.zeros(2 * d, dtype=dt)
            im[:d] = t.num.im[i]
        eb.insert(GArr(re, im))
    if eb.dim < d or any(p >= d for p in eb.pivots):
        raise NotInvertible("operator is singular")
    inv = [[None] * d for _ in range(d)]
    for row, piv, lead in zip(eb.rows, eb.pivots, eb.leads):
        lam = GaussRational(lead[0], lead[1])
        for c in range(d):
            zr = int(row.re[d + c])
            zi = 0 if row.im is None else int(row.im[d + c])
            inv[piv][c] = GaussRational(zr, zi) / lam * t.den
    m = MatN(inv)
    g, den = mat_to_garr(m)
    return OperatorN(t.n, g, den)


# -- vectorized-coordinate bridge (ambient dimension n^4) -----------------

def op_to_vec_row(t: OperatorN) -> GArr:
    """The operator as a primitive integer coordinate row of length n^4.

    Scale (the denominator) is dropped: span arithmetic is projective.
    """
    row = t.num.ravel()
    row = GArr(row.re.copy(), None if row.im is None else row.im.copy())
    gint.content_reduce(row)
    return row


def op_to_vector(t: OperatorN) -> Vector:
    """Exact rational coordinate vector of length n^4 (keeps scale)."""
    return matrices.vectorize(t.entries())


def vec_row_to_op(v, n: int) -> OperatorN:
    d = n * n
    if isinstance(v, GArr):
        if v.re.shape[0] != d * d:
            raise DimensionMismatch(f"coordinate length {v.re.shape[0]}, expected {d * d}")
        num = GArr(v.re.reshape(d, d).copy(),
                   None if v.im is None else v.im.reshape(d, d).copy())
        return OperatorN(n, num, 1)
    if not isinstance(v, Vector):
        v = Vector(v)
    m = matrices.unvectorize(v, d)
    return from_entries(m.entries, n)


# -- membership predicates -------------------------------------------------

def in_sl(t: OperatorN) -> bool:
    """Trace-zero operators: membership in sl(n^2)."""
    return op_trace(t).is_zero()


def in_gl_n2m1(t: OperatorN) -> bool:
    """Operators preserving the splitting M_n = M_n^0 + F*1 and killing 1."""
    n = t.n
    veci = np.eye(n, dtype=np.int64).ravel()
    img = gint.matmul(t.num, GArr(veci, None, 1).reshape(-1, 1))
    if not img.is_zero():
        return False
    # tr(T(x)) = 0 for traceless x <=> the row functional vecI @ num is a
    # multiple of the trace functional itself
    w = gint.matmul(GArr(veci, None, 1).reshape(1, -1), t.num)
    wre = w.re.reshape(n, n)
    wim = None if w.im is None else w.im.reshape(n, n)
    offdiag = ~np.eye(n, dtype=bool)
    if wre[offdiag].any() or (wim is not None and wim[offdiag].any()):
        return False
    dre = np.diag(wre)
    if any(int(x) != int(dre[0]) for x in dre):
        return False
    if wim is not None:
        dim_ = np.diag(wim)
        if any(int(x) != int(dim_[0]) for x in dim_):
            return False
    return True


def _swap_perm(n: int):
    d = n * n
    p = np.empty(d, dtype=np.intp)
    for r in range(n):
        for c in range(n):
            p[r * n + c] = c * n + r
    return p


def in_so(t: OperatorN) -> bool:
    """Skew-adjointness for the trace form, via the Gram-permutation identity."""
    p = _swap_perm(t.n)
    a = t.num.re[p, :]
    if (a + a.T).any():
        return False
    if t.num.im is not None:
        b = t.num.im[p, :]
        if (b + b.T).any():
            return False
    return True


def in_so_quantified(t: OperatorN) -> bool:
    """Test oracle for in_so: quantify tr(T(x)y + xT(y)) = 0 over basis pairs."""
    n = t.n
    units = [matrices.unit(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    images = [apply(t, u) for u in units]
    for x, tx in zip(units, images):
        for y, ty in zip(units, images):
            val = matrices.trace(matrices.mul(tx, y)) + matrices.trace(matrices.mul(x, ty))
            if not val.is_zero():
                return False
    return True


def kernel_subspace(t: OperatorN):
    """ker(T) as a subspace of vectorized M_n (ambient n^2)."""
    from .subspaces import solve_homogeneous
    rows = [GArr(t.num.re[i].copy(), None if t.num.im is None else t.num.im[i].copy())
            for i in range(t.dim)]
    return solve_homogeneous(rows, t.dim)
