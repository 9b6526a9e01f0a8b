"""Canonical subspace arithmetic over Q(i).

A ``Subspace`` is the row space of a canonical reduced row-echelon basis:
leading entries 1, pivot columns cleared, pivot columns strictly
increasing.  Canonical form makes equality a plain entrywise comparison,
so subspace identities are certified exactly, never probabilistically.

Internally rows are primitive Gaussian-integer vectors (see ``gint``);
the rational leading-1 view is materialized only on demand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

import numpy as np

from . import gint
from .errors import DimensionMismatch
from .gint import EchelonBasis, GArr, IncrementalKernel
from .scalars import GaussRational, as_gauss


class Vector:
    """A dense exact vector in a fixed ambient dimension."""

    __slots__ = ("entries", "ambient_dim")

    def __init__(self, entries, ambient_dim=None):
        entries = tuple(as_gauss(e) for e in entries)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "ambient_dim", len(entries) if ambient_dim is None else ambient_dim)
        if len(entries) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector has {len(entries)} entries, ambient dimension is {self.ambient_dim}")

    def __setattr__(self, *a):
        raise AttributeError("Vector is immutable")

    def __len__(self):
        return self.ambient_dim

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __repr__(self):
        return f"Vector([{', '.join(str(e) for e in self.entries)}])"


def vector_to_garr(v) -> GArr:
    """Clear denominators: the primitive integer vector spanning the same line."""
    if isinstance(v, GArr):
        return v
    if not isinstance(v, Vector):
        v = Vector(v)
    den = 1
    for e in v.entries:
        den = den * e.re.denominator // _gcd(den, e.re.denominator)
        den = den * e.im.denominator // _gcd(den, e.im.denominator)
    re = [int(e.re * den) for e in v.entries]
    im = [int(e.im * den) for e in v.entries]
    return gint.from_int_array(re, im if any(im) else None)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def garr_to_vector(row: GArr, scale: GaussRational | None = None) -> Vector:
    """Rational view of an integer row, optionally divided by ``scale``."""
    n = row.re.shape[0]
    re = row.re
    im = row.im
    out = []
    for k in range(n):
        z = GaussRational(int(re[k]), 0 if im is None else int(im[k]))
        out.append(z if scale is None else z / scale)
    return Vector(out)


class Subspace:
    """An exactly represented subspace with a canonical RREF basis."""

    __slots__ = ("_eb", "_basis_cache", "_ann_cache", "_row_mat_cache")

    def __init__(self, eb: EchelonBasis):
        object.__setattr__(self, "_eb", eb)
        object.__setattr__(self, "_basis_cache", None)
        object.__setattr__(self, "_ann_cache", None)
        object.__setattr__(self, "_row_mat_cache", None)

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    # -- construction ----------------------------------------------------
    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(EchelonBasis(ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        eb = EchelonBasis(ambient_dim)
        eye = np.eye(ambient_dim, dtype=np.int64)
        eb.rows = [GArr(eye[i].copy(), None, 1) for i in range(ambient_dim)]
        eb.pivots = list(range(ambient_dim))
        eb.leads = [(1, 0)] * ambient_dim
        return cls(eb)

    @classmethod
    def from_rows(cls, rows, ambient_dim: int) -> "Subspace":
        """Span of integer rows (GArr); rows are copied into canonical form."""
        eb = EchelonBasis(ambient_dim)
        for r in rows:
            if r.re.shape[0] != ambient_dim:
                raise DimensionMismatch("row width differs from ambient dimension")
            eb.insert(r)
        return cls(eb)

    @classmethod
    def from_vectors(cls, vectors, ambient_dim: int | None = None) -> "Subspace":
        vectors = list(vectors)
        if ambient_dim is None:
            if not vectors:
                raise DimensionMismatch("ambient dimension required for an empty span")
            ambient_dim = len(vectors[0]) if not isinstance(vectors[0], GArr) else vectors[0].re.shape[0]
        rows = [vector_to_garr(v) for v in vectors]
        return cls.from_rows(rows, ambient_dim)

    # -- basic queries -----------------------------------------------------
    @property
    def ambient_dim(self) -> int:
        return self._eb.width

    @property
    def dim(self) -> int:
        return self._eb.dim

    @property
    def pivots(self) -> tuple:
        return tuple(self._eb.pivots)

    @property
    def basis(self) -> tuple:
        """Canonical RREF basis as rational Vectors (leading entries 1)."""
        if self._basis_cache is None:
            out = []
            for row, lead in zip(self._eb.rows, self._eb.leads):
                out.append(garr_to_vector(row, GaussRational(lead[0], lead[1])))
            object.__setattr__(self, "_basis_cache", tuple(out))
        return self._basis_cache

    def basis_rows(self) -> list:
        """The primitive integer rows (internal representation, read-only)."""
        return self._eb.rows

    def row_matrix(self) -> GArr:
        """Basis rows stacked into one (dim x ambient) integer matrix."""
        if self._row_mat_cache is None:
            object.__setattr__(self, "_row_mat_cache", stack_rows(self._eb.rows, self.ambient_dim))
        return self._row_mat_cache

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._eb.equals(other._eb)

    def __hash__(self):
        key = []
        for row, piv in zip(self._eb.rows, self._eb.pivots):
            key.append((piv, row.re.tobytes() if row.re.dtype != object else tuple(row.re)))
        return hash((self.ambient_dim, tuple(self._eb.pivots)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    # -- membership --------------------------------------------------------
    def _check_ambient(self, n, what="operand"):
        if n != self.ambient_dim:
            raise DimensionMismatch(
                f"{what} lives in dimension {n}, subspace in {self.ambient_dim}")

    def member(self, v) -> bool:
        """True iff v lies in the span."""
        g = vector_to_garr(v)
        self._check_ambient(g.re.shape[0], "vector")
        if g.is_zero():
            return True
        ann = self._ann_cache
        if ann is not None:
            return gint.matmul(ann, g.reshape(-1, 1)).is_zero()
        return self._eb.contains_vec(g)

    def __contains__(self, v):
        return self.member(v)

    def annihilator(self) -> GArr:
        """Integer matrix A with self = {x : A x = 0}; cached.

        Speeds up repeated membership tests against a fixed subspace:
        one exact mat-vec instead of a full row reduction.
        """
        if self._ann_cache is None:
            object.__setattr__(self, "_ann_cache", _annihilator_rows(self._eb))
        return self._ann_cache

    def contains_rows(self, mat: GArr) -> bool:
        """Batch membership for the rows of an integer matrix."""
        if mat.re.size == 0:
            return True
        ann = self.annihilator()
        if ann.re.shape[0] == 0:
            return True
        mt = GArr(mat.re.T, None if mat.im is None else mat.im.T, mat.bound)
        return gint.matmul(ann, mt).is_zero()

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other.ambient_dim, "subspace")
        if other.dim > self.dim:
            return False
        return self.contains_rows(other.row_matrix())

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)

    # -- lattice operations --------------------------------------------------
    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other.ambient_dim, "subspace")
        eb = self._eb.copy()
        for r in other._eb.rows:
            eb.insert(r)
        return Subspace(eb)

    __add__ = sum

    def intersect_hyperplane(self, c: GArr) -> "Subspace":
        """Intersection with {x : c.x = 0}, one elimination pass over the basis."""
        self._check_ambient(c.re.shape[0], "constraint")
        vals = [gint.gdot(r, c) for r in self._eb.rows]
        j0 = None
        for j, v in enumerate(vals):
            if v != (0, 0):
                j0 = j
                break
        if j0 is None:
            return self
        piv_row = self._eb.rows[j0]
        rows = []
        for j, r in enumerate(self._eb.rows):
            if j == j0:
                continue
            if vals[j] == (0, 0):
                rows.append(r)
            else:
                row = gint.combine(vals[j0], r, vals[j], piv_row)
                gint.content_reduce(row)
                rows.append(row)
        return Subspace.from_rows(rows, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus intersection; satisfies the dimension formula exactly."""
        self._check_ambient(other.ambient_dim, "subspace")
        n = self.ambient_dim
        eb = EchelonBasis(2 * n)
        for r in self._eb.rows:
            eb.insert(_pad_row(r, n, duplicate=True))
        for r in other._eb.rows:
            eb.insert(_pad_row(r, n, duplicate=False))
        out = EchelonBasis(n)
        for row, piv in zip(eb.rows, eb.pivots):
            if piv >= n:
                right = GArr(row.re[n:].copy(),
                             None if row.im is None else row.im[n:].copy())
                out.insert(right)
        return Subspace(out)

    __and__ = intersect


def _pad_row(r: GArr, n: int, duplicate: bool) -> GArr:
    re = np.zeros(2 * n, dtype=r.re.dtype)
    re[:n] = r.re
    if duplicate:
        re[n:] = r.re
    im = None
    if r.im is not None:
        im = np.zeros(2 * n, dtype=r.im.dtype)
        im[:n] = r.im
        if duplicate:
            im[n:] = r.im
    return GArr(re, im, r.bound)


def stack_rows(rows, width: int) -> GArr:
    """Stack GArr rows into one matrix GArr (homogeneous dtype)."""
    if not rows:
        return gint.gzeros((0, width))
    use_object = any(r.re.dtype == object for r in rows)
    dt = object if use_object else np.int64
    re = np.zeros((len(rows), width), dtype=dt)
    has_im = any(r.im is not None for r in rows)
    im = np.zeros((len(rows), width), dtype=dt) if has_im else None
    bound = 0
    for i, r in enumerate(rows):
        re[i] = r.re
        if r.im is not None:
            im[i] = r.im
        bound = max(bound, r.bound)
    return GArr(re, im, bound)


def _annihilator_rows(eb: EchelonBasis) -> GArr:
    """Kernel of the RREF basis matrix, as primitive integer rows."""
    n = eb.width
    piv_set = set(eb.pivots)
    free_cols = [c for c in range(n) if c not in piv_set]
    out_rows = []
    for f in free_cols:
        ent = {f: GaussRational(1)}
        for row, piv, lead in zip(eb.rows, eb.pivots, eb.leads):
            vr = int(row.re[f])
            vi = 0 if row.im is None else int(row.im[f])
            if vr or vi:
                ent[piv] = -(GaussRational(vr, vi) / GaussRational(lead[0], lead[1]))
        den = 1
        for z in ent.values():
            den = den * z.re.denominator // _gcd(den, z.re.denominator)
            den = den * z.im.denominator // _gcd(den, z.im.denominator)
        re = [0] * n
        im = [0] * n
        has_im = False
        for c, z in ent.items():
            re[c] = int(z.re * den)
            iv = int(z.im * den)
            im[c] = iv
            has_im = has_im or iv != 0
        out_rows.append(gint.from_int_array(re, im if has_im else None))
    return stack_rows(out_rows, n)


# -- module-level operation surface ------------------------------------------


def rref(rows, ambient_dim: int | None = None):
    """Canonical reduced row-echelon span of the given vectors.

    Returns (Subspace, rank).  Rows may be Vectors, iterables of scalars,
    or integer GArr rows; all must share one ambient dimension.
    """
    rows = list(rows)
    widths = set()
    for r in rows:
        widths.add(r.re.shape[0] if isinstance(r, GArr) else len(r))
    if len(widths) > 1:
        raise DimensionMismatch(f"rows of mixed ambient dimensions {sorted(widths)}")
    if ambient_dim is None:
        if not widths:
            raise DimensionMismatch("ambient dimension required for an empty row list")
        ambient_dim = widths.pop()
    elif widths and widths != {ambient_dim}:
        raise DimensionMismatch(
            f"rows have ambient dimension {widths.pop()}, expected {ambient_dim}")
    s = Subspace.from_vectors(rows, ambient_dim)
    return s, s.dim


def member(s: Subspace, v) -> bool:
    return s.member(v)


def solve_homogeneous(constraint_rows, nunknowns: int | None = None) -> Subspace:
    """The kernel {x : A x = 0} of the given constraint rows, canonical."""
    rows = [vector_to_garr(r) if not isinstance(r, GArr) else r for r in constraint_rows]
    if nunknowns is None:
        if not rows:
            raise DimensionMismatch("number of unknowns required for an empty system")
        nunknowns = rows[0].re.shape[0]
    ker = IncrementalKernel(nunknowns)
    for r in rows:
        if r.re.shape[0] != nunknowns:
            raise DimensionMismatch("constraint width differs from number of unknowns")
        ker.add_constraint(r)
    return Subspace.from_rows(ker.rows, nunknowns)


def kernel_to_subspace(ker: IncrementalKernel) -> Subspace:
    return Subspace.from_rows(ker.rows, ker.n)


def solve_linear(a_rows, b):
    """One exact solution x of A x = b, or None if inconsistent.

    Free variables are set to zero.  ``a_rows`` are the rows of A;
    ``b`` matches their count.
    """
    rows = [vector_to_garr(r) if not isinstance(r, GArr) else r for r in a_rows]
    b = [as_gauss(x) for x in b]
    if len(rows) != len(b):
        raise DimensionMismatch("right-hand side length differs from row count")
    if not rows:
        return []
    n = rows[0].re.shape[0]
    eb = EchelonBasis(n + 1)
    for r, bi in zip(rows, b):
        den = bi.re.denominator
        den = den * bi.im.denominator // _gcd(den, bi.im.denominator)
        scaled = gint.scalar_mul(r, den)
        re = np.zeros(n + 1, dtype=object)
        re[:n] = scaled.re
        re[n] = int(bi.re * den)
        im_part = None
        if scaled.im is not None or bi.im != 0:
            im_part = np.zeros(n + 1, dtype=object)
            if scaled.im is not None:
                im_part[:n] = scaled.im
            im_part[n] = int(bi.im * den)
        eb.insert(gint.from_int_array(re, im_part))
    sol = [GaussRational(0)] * n
    for row, piv, lead in zip(eb.rows, eb.pivots, eb.leads):
        if piv == n:
            return None  # pivot in the augmented column: inconsistent
        vr = int(row.re[n])
        vi = 0 if row.im is None else int(row.im[n])
        sol[piv] = GaussRational(vr, vi) / GaussRational(lead[0], lead[1])
    return sol


class SpanSolver:
    """Coordinate extraction against a fixed list of spanning rows.

    Wraps an augmented echelon basis so that, given v in the span, the
    coefficients c with v = sum_i c_i * rows_i are recovered exactly.
    """

    def __init__(self, rows, width: int):
        rows = [vector_to_garr(r) if not isinstance(r, GArr) else r for r in rows]
        self.width = width
        self.nrows = len(rows)
        self._eb = EchelonBasis(width + self.nrows + 1, pivot_limit=width)
        for i, r in enumerate(rows):
            ext = np.zeros(width + self.nrows + 1, dtype=r.re.dtype)
            ext[:width] = r.re
            ext[width + i] = 1
            im = None
            if r.im is not None:
                im = np.zeros(width + self.nrows + 1, dtype=r.im.dtype)
                im[:width] = r.im
            self._eb.insert(GArr(ext, im))

    def coordinates(self, v) -> "list[GaussRational] | None":
        """Coefficients of v over the spanning rows, or None if v is outside."""
        g = vector_to_garr(v) if not isinstance(v, GArr) else v
        if g.re.shape[0] != self.width:
            raise DimensionMismatch("vector width differs from solver ambient")
        ext = np.zeros(self._eb.width, dtype=g.re.dtype)
        ext[:self.width] = g.re
        ext[-1] = 1
        im = None
        if g.im is not None:
            im = np.zeros(self._eb.width, dtype=g.im.dtype)
            im[:self.width] = g.im
        resid = self._eb.reduce(GArr(ext, im))
        if resid.re[:self.width].any() or (resid.im is not None and resid.im[:self.width].any()):
            return None
        mu = GaussRational(int(resid.re[-1]), 0 if resid.im is None else int(resid.im[-1]))
        if mu.is_zero():
            return None  # cannot happen for independent tracking column
        out = []
        for i in range(self.nrows):
            c = self.width + i
            vr = int(resid.re[c])
            vi = 0 if resid.im is None else int(resid.im[c])
            out.append(-(GaussRational(vr, vi) / mu))
        return out
