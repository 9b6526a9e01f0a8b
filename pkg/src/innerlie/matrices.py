"""The matrix algebra M_n: units, trace, products, commutators.

Also fixes the vectorization convention used everywhere downstream: the
matrix entry (i, j) (1-based) maps to coordinate k = (i-1)*n + j of a
row-major vector of length n^2.  Every serialized operator matrix depends
on this ordering, so it is part of the wire format.
"""

from __future__ import annotations

from fractions import Fraction

from . import gint
from .errors import DimensionMismatch
from .gint import GArr
from .scalars import GaussRational, as_gauss
from .subspaces import Vector


class MatN:
    """An n x n matrix with exact Gaussian-rational entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(as_gauss(e) for e in row) for row in entries)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, *a):
        raise AttributeError("MatN is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, MatN):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        _same_size(self, other)
        return MatN([[a + b for a, b in zip(ra, rb)]
                     for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other):
        _same_size(self, other)
        return MatN([[a - b for a, b in zip(ra, rb)]
                     for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self):
        return MatN([[-a for a in row] for row in self.entries])

    def __mul__(self, scalar):
        s = as_gauss(scalar)
        return MatN([[a * s for a in row] for row in self.entries])

    __rmul__ = __mul__

    def __matmul__(self, other):
        return mul(self, other)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"MatN({self.n}, [{body}])"


def _same_size(x: MatN, y: MatN):
    if x.n != y.n:
        raise DimensionMismatch(f"matrix sizes differ: {x.n} vs {y.n}")


def zero(n: int) -> MatN:
    return MatN([[0] * n for _ in range(n)])


def unit(n: int, i: int, j: int) -> MatN:
    """The matrix unit e_ij, with 1-based indices."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise DimensionMismatch(f"unit index ({i},{j}) out of range for n={n}")
    rows = [[0] * n for _ in range(n)]
    rows[i - 1][j - 1] = 1
    return MatN(rows)


def identity(n: int) -> MatN:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return MatN(rows)


def trace(x: MatN) -> GaussRational:
    t = GaussRational(0)
    for i in range(x.n):
        t = t + x.entries[i][i]
    return t


def transpose(x: MatN) -> MatN:
    return MatN([[x.entries[j][i] for j in range(x.n)] for i in range(x.n)])


def mul(x: MatN, y: MatN) -> MatN:
    _same_size(x, y)
    n = x.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = GaussRational(0)
            for k in range(n):
                a = x.entries[i][k]
                if a.is_zero():
                    continue
                s = s + a * y.entries[k][j]
            row.append(s)
        out.append(row)
    return MatN(out)


def bracket(x: MatN, y: MatN) -> MatN:
    return mul(x, y) - mul(y, x)


def scalar_part(x: MatN) -> GaussRational:
    """The coefficient of the identity in x = traceless_part(x) + c*1."""
    return trace(x) / GaussRational(x.n)


def traceless_part(x: MatN) -> MatN:
    c = scalar_part(x)
    return x - c * identity(x.n)


def vectorize(x: MatN) -> Vector:
    return Vector([x.entries[i][j] for i in range(x.n) for j in range(x.n)])


def unvectorize(v, n: int) -> MatN:
    ent = list(v)
    if len(ent) != n * n:
        raise DimensionMismatch(f"vector length {len(ent)} is not {n}*{n}")
    return MatN([ent[i * n:(i + 1) * n] for i in range(n)])


def traceless_basis(n: int) -> list:
    """Basis of M_n^0: off-diagonal units then consecutive diagonal differences."""
    out = [unit(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i in range(1, n):
        out.append(unit(n, i, i) - unit(n, i + 1, i + 1))
    return out


def random_matrix(n: int, rnd, lo: int = -3, hi: int = 3, traceless: bool = False) -> MatN:
    """Small-integer random matrix (deterministic given the Random instance)."""
    m = MatN([[rnd.randint(lo, hi) for _ in range(n)] for _ in range(n)])
    return traceless_part(m) * n if traceless else m


# -- integer bridge -----------------------------------------------------

def mat_to_garr(x: MatN):
    """Return (GArr, den) with x = garr/den, den > 0, content coprime to den."""
    den = 1
    for row in x.entries:
        for e in row:
            den = _lcm(den, e.re.denominator)
            den = _lcm(den, e.im.denominator)
    re = [[int(e.re * den) for e in row] for row in x.entries]
    has_im = any(e.im != 0 for row in x.entries for e in row)
    im = [[int(e.im * den) for e in row] for row in x.entries] if has_im else None
    return gint.from_int_array(re, im), den


def garr_to_mat(g: GArr, den: int = 1) -> MatN:
    n = g.re.shape[0]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            zr = int(g.re[i, j])
            zi = 0 if g.im is None else int(g.im[i, j])
            row.append(GaussRational(Fraction(zr, den), Fraction(zi, den)))
        out.append(row)
    return MatN(out)


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)
