"""Exact Gaussian-integer array kernels.

Everything upstream (subspaces, operators, closures) reduces to row
operations on vectors with Gaussian-integer entries.  A vector or matrix
is held as a ``GArr``: a real int64 numpy array plus an optional imaginary
part (``None`` for purely real data, which is the common case).  Scaling
is projective -- the engine never divides, it cross-multiplies and strips
integer content, so all arithmetic stays exact.

Overflow policy: every ``GArr`` carries a conservative upper bound on the
absolute value of its entries.  Operations check predicted bounds first;
when int64 would overflow, the array is escalated to dtype=object (Python
big ints) and shrunk back once content reduction makes entries small.
Matrix products additionally use float64 BLAS when the predicted bound
fits below 2**53, where float arithmetic on integers is still exact.
"""

from __future__ import annotations

import math
from functools import reduce

import numpy as np

INT64_LIMIT = 1 << 62
FLOAT_EXACT_LIMIT = 1 << 53
# content-reduce a working row once its entry bound passes this
REDUCE_AT = 1 << 48


class GArr:
    """An integer array with an optional imaginary component."""

    __slots__ = ("re", "im", "bound")

    def __init__(self, re, im=None, bound=None):
        self.re = re
        self.im = im
        if bound is None:
            bound = _actual_max_parts(re, im)
        self.bound = bound

    @property
    def shape(self):
        return self.re.shape

    def copy(self) -> "GArr":
        return GArr(self.re.copy(), None if self.im is None else self.im.copy(), self.bound)

    def is_zero(self) -> bool:
        if self.re.any():
            return False
        return self.im is None or not self.im.any()

    def reshape(self, *shape) -> "GArr":
        return GArr(self.re.reshape(*shape),
                    None if self.im is None else self.im.reshape(*shape), self.bound)

    def ravel(self) -> "GArr":
        return GArr(self.re.ravel(), None if self.im is None else self.im.ravel(), self.bound)

    def __repr__(self):
        return f"GArr(shape={self.re.shape}, complex={self.im is not None}, bound={self.bound})"


def _arr_max(arr) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return max((abs(int(x)) for x in arr.flat), default=0)
    return int(np.abs(arr).max())


def _actual_max_parts(re, im) -> int:
    m = _arr_max(re)
    if im is not None:
        m = max(m, _arr_max(im))
    return m


def refresh_bound(a: GArr) -> None:
    a.bound = _actual_max_parts(a.re, a.im)


def gzeros(shape) -> GArr:
    return GArr(np.zeros(shape, dtype=np.int64), None, 0)


def from_int_array(re, im=None) -> GArr:
    """Build a GArr from plain integer array-likes; picks int64 or object dtype."""
    re_l = np.asarray(re, dtype=object)
    bound = max((abs(int(x)) for x in re_l.flat), default=0)
    im_l = None
    if im is not None:
        im_l = np.asarray(im, dtype=object)
        bound = max(bound, max((abs(int(x)) for x in im_l.flat), default=0))
        if not any(int(x) for x in im_l.flat):
            im_l = None
    if bound < INT64_LIMIT:
        re_a = re_l.astype(np.int64)
        im_a = None if im_l is None else im_l.astype(np.int64)
    else:
        re_a = re_l
        im_a = im_l
    return GArr(re_a, im_a, bound)


def _to_object(a: GArr) -> None:
    if a.re.dtype != object:
        a.re = a.re.astype(object)
    if a.im is not None and a.im.dtype != object:
        a.im = a.im.astype(object)


def _try_shrink(a: GArr) -> None:
    if a.re.dtype == object and a.bound < INT64_LIMIT:
        a.re = a.re.astype(np.int64)
        if a.im is not None:
            a.im = a.im.astype(np.int64)


def _gcd_arr(arr) -> int:
    if arr.size == 0:
        return 0
    if arr.dtype == object:
        return reduce(math.gcd, (abs(int(x)) for x in arr.flat), 0)
    return int(np.gcd.reduce(np.abs(arr), axis=None))


def content(a: GArr) -> int:
    """The rational-integer content (gcd of all real and imaginary parts)."""
    g = _gcd_arr(a.re)
    if a.im is not None:
        g = math.gcd(g, _gcd_arr(a.im))
    return g


def _gauss_divmod_nearest(a, b):
    """Remainder of nearest-lattice-point division in Z[i]; |r|^2 <= |b|^2 / 2."""
    ar, ai = a
    br, bi = b
    nb = br * br + bi * bi
    qr = _round_nearest(ar * br + ai * bi, nb)
    qi = _round_nearest(ai * br - ar * bi, nb)
    return (ar - qr * br + qi * bi, ai - qr * bi - qi * br)


def _round_nearest(a: int, b: int) -> int:
    # nearest integer to a/b for b > 0
    return (2 * a + b) // (2 * b)


def gauss_gcd(a, b):
    """gcd of two Gaussian integers (up to units), Euclidean algorithm."""
    while b != (0, 0):
        a, b = b, _gauss_divmod_nearest(a, b)
    return a


def gaussian_content(a: GArr):
    """A gcd in Z[i] of all entries, as (re, im); (0, 0) for the zero array.

    For purely real arrays this is the rational integer content; for
    complex arrays a common Gaussian factor such as 1+i is also found,
    which rational content alone would miss.
    """
    if a.im is None:
        return (_gcd_arr(a.re), 0)
    g = (0, 0)
    re, im = a.re.ravel(), a.im.ravel()
    for k in range(re.shape[0]):
        zr, zi = int(re[k]), int(im[k])
        if zr == 0 and zi == 0:
            continue
        g = gauss_gcd(g, (zr, zi)) if g != (0, 0) else (zr, zi)
        if g[0] * g[0] + g[1] * g[1] == 1:
            return g
    return g


def content_reduce(a: GArr):
    """Divide out the Gaussian-integer content in place; returns it.

    Keeps rows primitive over Z[i], which both bounds coefficient growth
    and is what makes the echelon form a canonical certificate over Q(i).
    """
    if a.im is None:
        g = _gcd_arr(a.re)
        if g > 1:
            a.re //= g
        refresh_bound(a)
        _try_shrink(a)
        return (max(g, 1), 0)
    gr, gi = gaussian_content(a)
    if (gr, gi) == (0, 0):
        a.im = None
        refresh_bound(a)
        return (1, 0)
    norm = gr * gr + gi * gi
    if norm > 1:
        re = a.re
        im = a.im
        if re.dtype != object and (a.bound * max(abs(gr), abs(gi))) >= INT64_LIMIT:
            re = re.astype(object)
            im = im.astype(object)
        new_re = (re * gr + im * gi) // norm
        new_im = (im * gr - re * gi) // norm
        a.re, a.im = new_re, new_im
    if not a.im.any():
        a.im = None
    refresh_bound(a)
    _try_shrink(a)
    return (gr, gi) if norm > 1 else (1, 0)


def scalar_mul(a: GArr, cr: int, ci: int = 0) -> GArr:
    """Return (cr + ci*i) * a."""
    nb = (abs(cr) + abs(ci)) * a.bound
    if nb >= INT64_LIMIT and a.re.dtype != object:
        a = a.copy()
        _to_object(a)
    if ci == 0:
        re = a.re * cr
        im = None if a.im is None else a.im * cr
    elif a.im is None:
        re = a.re * cr
        im = a.re * ci
    else:
        re = a.re * cr - a.im * ci
        im = a.re * ci + a.im * cr
    return GArr(re, im, nb)


def add(a: GArr, b: GArr) -> GArr:
    nb = a.bound + b.bound
    if nb >= INT64_LIMIT:
        if a.re.dtype != object:
            a = a.copy()
            _to_object(a)
        if b.re.dtype != object:
            b = b.copy()
            _to_object(b)
    re = a.re + b.re
    if a.im is None and b.im is None:
        im = None
    elif a.im is None:
        im = b.im.copy()
    elif b.im is None:
        im = a.im.copy()
    else:
        im = a.im + b.im
        if not im.any():
            im = None
    return GArr(re, im, nb)


def combine(p, v: GArr, c, r: GArr) -> GArr:
    """Return p*v - c*r for Gaussian-integer scalars p=(pr,pi), c=(cr,ci).

    The row-operation primitive of the elimination engine.
    """
    pr, pi = p
    cr, ci = c
    nb = (abs(pr) + abs(pi)) * v.bound + (abs(cr) + abs(ci)) * r.bound
    if nb >= INT64_LIMIT:
        if v.re.dtype != object:
            v = v.copy()
            _to_object(v)
        if r.re.dtype != object:
            r = r.copy()
            _to_object(r)
    vr, vi, rr, ri = v.re, v.im, r.re, r.im
    if pi == 0 and ci == 0 and vi is None and ri is None:
        return GArr(pr * vr - cr * rr, None, nb)

    zr = pr * vr - cr * rr
    if pi and vi is not None:
        zr = zr - pi * vi
    if ci and ri is not None:
        zr = zr + ci * ri

    zi = None
    if pr and vi is not None:
        zi = pr * vi
    if pi:
        t = pi * vr
        zi = t if zi is None else zi + t
    if cr and ri is not None:
        t = cr * ri
        zi = -t if zi is None else zi - t
    if ci:
        t = ci * rr
        zi = -t if zi is None else zi - t
    if zi is not None and not zi.any():
        zi = None
    return GArr(zr, zi, nb)


def canonical_unit(lr: int, li: int):
    """The unit u in {1, i, -1, -i} with u*(lr+li*i) in the quadrant re>0, im>=0."""
    if li == 0:
        return (1, 0) if lr > 0 else (-1, 0)
    if lr == 0:
        # i*(li*i) = -li ; -i*(li*i) = li
        return (0, -1) if li > 0 else (0, 1)
    if lr > 0 and li > 0:
        return (1, 0)
    if lr < 0 and li < 0:
        return (-1, 0)
    if lr > 0:  # li < 0: i*(lr+li*i) = -li + lr*i, both positive
        return (0, 1)
    return (0, -1)  # lr < 0, li > 0: -i*(lr+li*i) = li - lr*i


def apply_unit(a: GArr, u) -> GArr:
    ur, ui = u
    if ur == 1 and ui == 0:
        return a
    return scalar_mul(a, ur, ui)


def gdot(a: GArr, b: GArr):
    """Exact bilinear pairing sum_k a_k*b_k (no conjugation); returns (re, im)."""
    n = a.re.shape[-1]
    nb = 2 * n * a.bound * b.bound
    ar, ai, br, bi = a.re, a.im, b.re, b.im
    if nb >= INT64_LIMIT:
        ar = ar.astype(object)
        br = br.astype(object)
        ai = None if ai is None else ai.astype(object)
        bi = None if bi is None else bi.astype(object)
    re = int(ar @ br)
    im = 0
    if ai is not None and bi is not None:
        re -= int(ai @ bi)
    if ai is not None:
        im += int(ai @ br)
    if bi is not None:
        im += int(ar @ bi)
    return re, im


def _matmul_component(a, b, bound):
    """Exact product of two plain integer 2-D arrays."""
    if a.dtype == object or b.dtype == object or bound >= INT64_LIMIT:
        return a.astype(object) @ b.astype(object)
    if bound < FLOAT_EXACT_LIMIT and a.shape[0] * a.shape[-1] * b.shape[-1] > 20000:
        # float64 matmul is exact for integer values below 2**53 and uses BLAS
        out = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(out).astype(np.int64)
    return a @ b


def matmul(a: GArr, b: GArr) -> GArr:
    """Exact matrix product; shapes follow numpy matmul."""
    k = a.re.shape[-1]
    nb = 2 * k * a.bound * b.bound
    if a.im is None and b.im is None:
        return GArr(_matmul_component(a.re, b.re, nb), None, nb)
    if a.im is None:
        return GArr(_matmul_component(a.re, b.re, nb),
                    _matmul_component(a.re, b.im, nb), nb)
    if b.im is None:
        return GArr(_matmul_component(a.re, b.re, nb),
                    _matmul_component(a.im, b.re, nb), nb)
    re = _matmul_component(a.re, b.re, nb) - _matmul_component(a.im, b.im, nb)
    im = _matmul_component(a.re, b.im, nb) + _matmul_component(a.im, b.re, nb)
    if not im.any():
        im = None
    return GArr(re, im, nb)


def kron(a: GArr, b: GArr) -> GArr:
    """Exact Kronecker product."""
    nb = 2 * a.bound * b.bound
    ar, ai, br, bi = a.re, a.im, b.re, b.im
    if nb >= INT64_LIMIT:
        ar = ar.astype(object)
        br = br.astype(object)
        ai = None if ai is None else ai.astype(object)
        bi = None if bi is None else bi.astype(object)
    if ai is None and bi is None:
        return GArr(np.kron(ar, br), None, nb)
    if ai is None:
        return GArr(np.kron(ar, br), np.kron(ar, bi), nb)
    if bi is None:
        return GArr(np.kron(ar, br), np.kron(ai, br), nb)
    re = np.kron(ar, br) - np.kron(ai, bi)
    im = np.kron(ar, bi) + np.kron(ai, br)
    if not im.any():
        im = None
    return GArr(re, im, nb)


class EchelonBasis:
    """Incremental reduced row-echelon basis over Q(i) with integer rows.

    Rows are primitive (integer content 1) and unit-normalized so that the
    leading entry lies in the quadrant re>0, im>=0; pivot columns of other
    rows are fully cleared.  Under these conventions two spans are equal
    iff their stored rows are identical, which makes the basis a canonical
    certificate of the subspace.

    ``pivot_limit`` restricts which columns may serve as pivots; columns at
    or beyond the limit act as passive bookkeeping (used for coordinate
    tracking and Zassenhaus-style intersections).
    """

    __slots__ = ("width", "pivot_limit", "rows", "pivots", "leads")

    def __init__(self, width: int, pivot_limit: int | None = None):
        self.width = width
        self.pivot_limit = width if pivot_limit is None else pivot_limit
        self.rows: list[GArr] = []
        self.pivots: list[int] = []
        self.leads: list[tuple[int, int]] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def copy(self) -> "EchelonBasis":
        eb = EchelonBasis(self.width, self.pivot_limit)
        eb.rows = [r.copy() for r in self.rows]
        eb.pivots = list(self.pivots)
        eb.leads = list(self.leads)
        return eb

    @staticmethod
    def _value_at(v: GArr, c: int):
        vr = int(v.re[c])
        vi = 0 if v.im is None else int(v.im[c])
        return vr, vi

    def reduce(self, v: GArr) -> GArr:
        """Eliminate every pivot coordinate of ``v``; returns the residual."""
        v = v.copy()
        rows, pivots, leads = self.rows, self.pivots, self.leads
        for i in range(len(rows)):
            c = pivots[i]
            val = self._value_at(v, c)
            if val[0] == 0 and val[1] == 0:
                continue
            v = combine(leads[i], v, val, rows[i])
            if v.bound >= REDUCE_AT:
                content_reduce(v)
        return v

    def _lead_col(self, v: GArr) -> int | None:
        nz = np.flatnonzero(v.re)
        best = int(nz[0]) if nz.size else None
        if v.im is not None:
            nzi = np.flatnonzero(v.im)
            if nzi.size:
                ci = int(nzi[0])
                best = ci if best is None else min(best, ci)
        if best is not None and best < self.pivot_limit:
            return best
        return None

    def _normalize(self, v: GArr, c: int) -> GArr:
        content_reduce(v)
        lr, li = self._value_at(v, c)
        v = apply_unit(v, canonical_unit(lr, li))
        refresh_bound(v)
        _try_shrink(v)
        return v

    def insert(self, v: GArr) -> int | None:
        """Add ``v`` to the span; returns its pivot column, or None if dependent."""
        w = self.reduce(v)
        c = self._lead_col(w)
        if c is None:
            return None
        w = self._normalize(w, c)
        lead = self._value_at(w, c)
        # clear the new pivot column from existing rows
        for i in range(len(self.rows)):
            val = self._value_at(self.rows[i], c)
            if val[0] == 0 and val[1] == 0:
                continue
            row = combine(lead, self.rows[i], val, w)
            row = self._normalize(row, self.pivots[i])
            self.rows[i] = row
            self.leads[i] = self._value_at(row, self.pivots[i])
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < c:
            pos += 1
        self.rows.insert(pos, w)
        self.pivots.insert(pos, c)
        self.leads.insert(pos, lead)
        return c

    def insert_many(self, vecs) -> int:
        added = 0
        for v in vecs:
            if self.insert(v) is not None:
                added += 1
        return added

    def contains_vec(self, v: GArr) -> bool:
        return self.reduce(v).is_zero()

    def equals(self, other: "EchelonBasis") -> bool:
        if self.width != other.width or self.pivots != other.pivots:
            return False
        for a, b in zip(self.rows, other.rows):
            if not np.array_equal(a.re, b.re):
                return False
            if (a.im is None) != (b.im is None):
                if not (a.im is None or not a.im.any()) or not (b.im is None or not b.im.any()):
                    return False
            elif a.im is not None and not np.array_equal(a.im, b.im):
                return False
        return True


class IncrementalKernel:
    """Common null space of a growing set of linear constraint rows.

    Starts at the full space and shrinks by one dimension per informative
    constraint; an uninformative constraint costs one batch of dot
    products.  Deterministic: the eliminated basis vector is always the
    first one with a nonzero pairing against the constraint.
    """

    __slots__ = ("n", "rows")

    def __init__(self, nunknowns: int):
        self.n = nunknowns
        eye = np.eye(nunknowns, dtype=np.int64)
        self.rows = [GArr(eye[i].copy(), None, 1) for i in range(nunknowns)]

    @property
    def dim(self) -> int:
        return len(self.rows)

    def add_constraint(self, c: GArr) -> bool:
        """Intersect with the hyperplane {x : c.x = 0}; True if dim dropped."""
        vals = [gdot(r, c) for r in self.rows]
        j0 = None
        for j, (vr, vi) in enumerate(vals):
            if vr or vi:
                j0 = j
                break
        if j0 is None:
            return False
        piv_row = self.rows[j0]
        piv_val = vals[j0]
        new_rows = []
        for j, r in enumerate(self.rows):
            if j == j0:
                continue
            val = vals[j]
            if val[0] == 0 and val[1] == 0:
                new_rows.append(r)
                continue
            row = combine(piv_val, r, val, piv_row)
            content_reduce(row)
            new_rows.append(row)
        self.rows = new_rows
        return True

    def add_constraints(self, cs) -> int:
        dropped = 0
        for c in cs:
            if self.add_constraint(c):
                dropped += 1
        return dropped

    def annihilates(self, c: GArr) -> bool:
        """True if every kernel basis vector pairs to zero with ``c``."""
        return all(v == (0, 0) for v in (gdot(r, c) for r in self.rows))
