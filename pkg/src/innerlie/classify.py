"""Decision procedure for Lie subalgebras of gl(n^2) containing g.

Every proper Lie subalgebra of gl(n^2) that contains all inner
derivations is, for n >= 5, one of:

* sl(n^2);
* l + F*t with t diagonal for the splitting M_n = M_n^0 + F*1, where l is
  - sl(n^2-1) + Z,
  - so(n^2-1) + Z,
  - g + Z,            for Z a sum of some of {p, q, V8},
  - t0 * so(n^2) * t0^-1   (scalar t only),
  - g + W(lambda)          (scalar t only).

``classify`` identifies the entry and recovers its parameters; every
verdict is self-certifying: the labeled algebra is reconstructed with
``construct`` and compared for exact subspace equality before the label
is returned.

Parameter conventions (needed because different raw parameters can name
the same algebra):

* t_ratio (the alpha/beta of the conjugating operator) is reported with
  positive real part, ties broken by positive imaginary part; only its
  square is an invariant of the subspace.
* The F*t direction is reported as (alpha, beta) reduced modulo the V8
  direction (1, 1-n^2) whenever V8 lies in l -- all choices outside V8
  yield the same algebra then -- and scaled so its first nonzero
  coordinate is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gint
from .catalog import (ambient, catalog, g_algebra, t_proj_scalar, t_proj_traceless,
                      w_lambda, w_lambda_mu)
from .errors import (DimensionMismatch, NotContainingG, NotLieClosed, Unclassifiable,
                     UnsupportedN)
from .gint import GArr
from .matrices import traceless_basis
from .operators import op_to_vec_row, t_matrix, trace_against, trace_map
from .scalars import GaussRational, as_gauss, gauss_sqrt
from .subspaces import SpanSolver, Subspace

LIST_KINDS = tuple(f"LIST_{blk}_{k}" for blk in ("I", "II", "III") for k in range(1, 7))
KINDS = ("SL_N2",) + LIST_KINDS + ("SO_CONJ", "G_PLUS_W")

# which of (p, q, V8) each list index adjoins
_Z_BY_INDEX = {1: (), 2: ("p",), 3: ("q",), 4: ("V8",), 5: ("p", "V8"), 6: ("q", "V8")}
_INDEX_BY_FLAGS = {(False, False, False): 1, (True, False, False): 2,
                   (False, True, False): 3, (False, False, True): 4,
                   (True, False, True): 5, (False, True, True): 6}


@dataclass(frozen=True)
class ClassLabel:
    """A classification verdict with recovered parameters."""
    kind: str
    lam: GaussRational | None = None
    t_ratio: GaussRational | None = None
    ft: tuple | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.kind == "G_PLUS_W") != (self.lam is not None):
            raise ValueError("lam is set exactly for G_PLUS_W")
        if (self.kind == "SO_CONJ") != (self.t_ratio is not None):
            raise ValueError("t_ratio is set exactly for SO_CONJ")
        if self.ft is not None:
            a, b = self.ft
            object.__setattr__(self, "ft", (as_gauss(a), as_gauss(b)))

    def describe(self) -> str:
        base = {
            "SL_N2": "sl(n^2)",
            "SO_CONJ": f"t so(n^2) t^-1, t_ratio={self.t_ratio}",
            "G_PLUS_W": f"g + W({self.lam})",
        }.get(self.kind)
        if base is None:
            blk, k = self.kind.split("_")[1], int(self.kind.split("_")[2])
            stem = {"I": "sl(n^2-1)", "II": "so(n^2-1)", "III": "g"}[blk]
            parts = [stem] + list(_Z_BY_INDEX[k])
            base = " + ".join(parts)
        if self.ft is not None:
            base += f" + F*t({self.ft[0]}, {self.ft[1]})"
        return base


def _v8_direction(n: int):
    return (GaussRational(1), GaussRational(1 - n * n))


def _normalize_first_nonzero(a: GaussRational, b: GaussRational):
    if not a.is_zero():
        return (GaussRational(1), b / a)
    if not b.is_zero():
        return (GaussRational(0), GaussRational(1))
    raise ValueError("ft direction is zero")


def _proportional(u, v) -> bool:
    """u proportional to v as 2-vectors over Q(i)."""
    return (u[0] * v[1] - u[1] * v[0]).is_zero()


def canonical_t_ratio(r: GaussRational) -> GaussRational:
    if r.re < 0 or (r.re == 0 and r.im < 0):
        return -r
    return r


def canonical_label(label: ClassLabel, n: int) -> ClassLabel:
    """The representative returned by classify for the same subalgebra."""
    kind = label.kind
    t_ratio = None if label.t_ratio is None else canonical_t_ratio(label.t_ratio)
    ft = label.ft
    if ft is not None:
        a, b = ft
        if a.is_zero() and b.is_zero():
            ft = None
    if ft is None:
        return ClassLabel(kind, label.lam, t_ratio, None)
    if kind == "SL_N2":
        raise ValueError("sl(n^2) admits no F*t extension inside gl(n^2)")
    if kind in ("SO_CONJ", "G_PLUS_W"):
        if not _proportional(ft, (GaussRational(1), GaussRational(1))):
            raise ValueError("only scalar t extends a conjugated so(n^2) or g + W(lambda)")
        return ClassLabel(kind, label.lam, t_ratio, (GaussRational(1), GaussRational(1)))
    v8dir = _v8_direction(n)
    blk, k = kind.split("_")[1], int(kind.split("_")[2])
    if _proportional(ft, v8dir):
        # the extension direction is V8 itself: fold it into the list entry
        if k in (1, 2, 3):
            return ClassLabel(f"LIST_{blk}_{k + 3}", label.lam, t_ratio, None)
        return ClassLabel(kind, label.lam, t_ratio, None)
    if k in (4, 5, 6):
        # modulo V8 every remaining direction is the same extension
        return ClassLabel(kind, label.lam, t_ratio, (GaussRational(0), GaussRational(1)))
    return ClassLabel(kind, label.lam, t_ratio, _normalize_first_nonzero(*ft))


# -- construction ------------------------------------------------------------


def _z_space(names, n: int) -> "Subspace | None":
    s = None
    for nm in names:
        sp = catalog(nm, n).space
        s = sp if s is None else s.sum(sp)
    return s


@lru_cache(maxsize=None)
def _construct_base(kind: str, lam, t_ratio, n: int) -> Subspace:
    if kind == "SL_N2":
        return ambient("sl_n2", n)
    if kind == "SO_CONJ":
        if t_ratio is None or t_ratio.is_zero():
            raise ValueError("SO_CONJ requires a nonzero t_ratio")
        rho = t_ratio * t_ratio
        rows = [op_to_vec_row(rho * trace_map(a) - trace_against(a))
                for a in traceless_basis(n)]
        w = Subspace.from_rows(rows, n ** 4)
        return ambient("so_n2m1", n).sum(w)
    if kind == "G_PLUS_W":
        return g_algebra(n).space.sum(w_lambda(lam, n))
    blk, k = kind.split("_")[1], int(kind.split("_")[2])
    stem = {"I": ambient("sl_n2m1", n), "II": ambient("so_n2m1", n),
            "III": g_algebra(n).space}[blk]
    z = _z_space(_Z_BY_INDEX[k], n)
    return stem if z is None else stem.sum(z)


def construct(label: ClassLabel, n: int) -> Subspace:
    """The labeled subalgebra as an exact subspace; validates parameters."""
    if n < 5:
        raise UnsupportedN("the classification list is only valid for n >= 5")
    base = _construct_base(label.kind, label.lam, label.t_ratio, n)
    if label.ft is None:
        return base
    a, b = label.ft
    if a.is_zero() and b.is_zero():
        return base
    if label.kind == "SL_N2":
        raise ValueError("sl(n^2) admits no F*t extension inside gl(n^2)")
    if label.kind in ("SO_CONJ", "G_PLUS_W") and not _proportional(
            label.ft, (GaussRational(1), GaussRational(1))):
        raise ValueError("only scalar t extends a conjugated so(n^2) or g + W(lambda)")
    t = t_matrix(a, b, n)
    return base.sum(Subspace.from_rows([op_to_vec_row(t)], n ** 4))


# -- classification -----------------------------------------------------------


@lru_cache(maxsize=None)
def _pq_solver(n: int) -> SpanSolver:
    """Coordinates over [so(n^2-1) | p | q] for conjugation-ratio recovery."""
    rows = list(ambient("so_n2m1", n).basis_rows())
    rows += [op_to_vec_row(trace_map(a)) for a in traceless_basis(n)]
    rows += [op_to_vec_row(trace_against(a)) for a in traceless_basis(n)]
    return SpanSolver(rows, n ** 4)


@lru_cache(maxsize=None)
def _gw_solver(n: int) -> SpanSolver:
    """Coordinates over [g | V4 | p | q] for W(lambda) parameter recovery."""
    from .matrices import identity
    from .operators import tensor
    one = identity(n)
    rows = list(g_algebra(n).space.basis_rows())
    rows += [op_to_vec_row(tensor(a, one) + tensor(one, a)) for a in traceless_basis(n)]
    rows += [op_to_vec_row(trace_map(a)) for a in traceless_basis(n)]
    rows += [op_to_vec_row(trace_against(a)) for a in traceless_basis(n)]
    return SpanSolver(rows, n ** 4)


def _block_ratio(num, den):
    """Exact scalar c with num = c * den componentwise, else None."""
    c = None
    for u, v in zip(num, den):
        if v.is_zero():
            if not u.is_zero():
                return None
            continue
        r = u / v
        if c is None:
            c = r
        elif c != r:
            return None
    return c if c is not None else None


def _spot_check_lie_closed(s: Subspace, n: int, max_rows: int = 26):
    """Cheap deterministic bracket sampling; full certainty comes from
    the reconstruction equality at the end of classify."""
    d = n * n
    rows = s.basis_rows()
    if len(rows) < 2:
        return
    idx = sorted(set(np.linspace(0, len(rows) - 1, min(max_rows, len(rows)), dtype=int).tolist()))
    ann = s.annihilator()
    mats = [rows[i].reshape(d, d) for i in idx]
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            br = gint.combine((1, 0), gint.matmul(mats[i], mats[j]),
                              (1, 0), gint.matmul(mats[j], mats[i]))
            v = br.ravel()
            gint.content_reduce(v)
            if not gint.matmul(ann, v.reshape(-1, 1)).is_zero():
                raise NotLieClosed(
                    f"bracket of basis rows {idx[i]} and {idx[j]} leaves the span")


def _recover_ft(s: Subspace, l: Subspace, v8_in_l: bool, n: int):
    """The F*t coset direction of s = l + F*t inside the diagonal family."""
    wa = op_to_vec_row(t_proj_traceless(n))
    wb = op_to_vec_row(t_proj_scalar(n))
    ann = s.annihilator()
    c1 = gint.matmul(ann, wa.reshape(-1, 1))
    c2 = gint.matmul(ann, wb.reshape(-1, 1))
    rows = []
    k = c1.re.shape[0]
    for i in range(k):
        re = [int(c1.re[i, 0]), int(c2.re[i, 0])]
        im = [0 if c1.im is None else int(c1.im[i, 0]),
              0 if c2.im is None else int(c2.im[i, 0])]
        rows.append(gint.from_int_array(re, im if any(im) else None))
    from .subspaces import solve_homogeneous
    x = solve_homogeneous(rows, 2)
    if v8_in_l:
        if x.dim != 2:
            raise Unclassifiable("trace direction missing from the diagonal family")
        return (GaussRational(0), GaussRational(1))
    if x.dim != 1:
        raise Unclassifiable("trace direction missing from the diagonal family")
    a, b = x.basis[0][0], x.basis[0][1]
    tr = a * (n * n - 1) + b
    if tr.is_zero():
        raise Unclassifiable("diagonal direction found inside sl(n^2) only")
    return _normalize_first_nonzero(a, b)


def classify(s: Subspace, n: int) -> ClassLabel:
    """Identify which list entry ``s`` equals and recover its parameters.

    Preconditions: n >= 5, s contains every inner derivation, s is a Lie
    subalgebra.  Containment is verified outright; closedness is spot
    checked (NotLieClosed on a witnessed violation) and then certified
    a posteriori, since the final reconstruction equality only holds for
    genuine list entries.
    """
    if n < 5:
        raise UnsupportedN("the classification list is only valid for n >= 5")
    d4 = n ** 4
    if s.ambient_dim != d4:
        raise DimensionMismatch(f"subspace ambient {s.ambient_dim}, expected {d4}")
    if s.dim == d4:
        raise Unclassifiable("the full gl(n^2) is not a proper subalgebra")
    g = g_algebra(n).space
    if not s.contains(g):
        raise NotContainingG("input does not contain all inner derivations")
    _spot_check_lie_closed(s, n)

    # split off the trace direction: l = s intersect sl(n^2)
    trace_row = GArr(np.eye(n * n, dtype=np.int64).ravel(), None, 1)
    l = s.intersect_hyperplane(trace_row)
    has_ft = l.dim != s.dim
    if has_ft and l.dim + 1 != s.dim:
        raise Unclassifiable("trace functional misbehaves on the input")

    label = _classify_traceless(l, n)
    if has_ft:
        v8_in_l = l.contains(catalog("V8", n).space)
        ft = _recover_ft(s, l, v8_in_l, n)
        label = ClassLabel(label.kind, label.lam, label.t_ratio, ft)

    if construct(label, n) != s:
        raise Unclassifiable(f"reconstruction of {label.describe()} does not match the input")
    return label


def _classify_traceless(l: Subspace, n: int) -> ClassLabel:
    """Classify l <= sl(n^2) containing g (the trace-free part of the input)."""
    if l == ambient("sl_n2", n):
        return ClassLabel("SL_N2")
    p_in = l.contains(catalog("p", n).space)
    q_in = l.contains(catalog("q", n).space)
    v8_in = l.contains(catalog("V8", n).space)

    if l.contains(ambient("sl_n2m1", n)):
        if p_in and q_in:
            raise Unclassifiable("p + q inside a proper subalgebra of sl(n^2)")
        return ClassLabel(f"LIST_I_{_INDEX_BY_FLAGS[(p_in, q_in, v8_in)]}")

    if p_in and q_in:
        raise Unclassifiable("p + q inside a proper subalgebra of sl(n^2)")

    if l.contains(ambient("so_n2m1", n)):
        base = ambient("so_n2m1", n).dim
        zdim = (n * n - 1) * (int(p_in) + int(q_in)) + int(v8_in)
        if l.dim == base + zdim:
            return ClassLabel(f"LIST_II_{_INDEX_BY_FLAGS[(p_in, q_in, v8_in)]}")
        if l.dim == base + (n * n - 1) and not (p_in or q_in or v8_in):
            return _recover_so_conj(l, n)
        raise Unclassifiable("dimension fits no entry over so(n^2-1)")

    base = g_algebra(n).space.dim
    zdim = (n * n - 1) * (int(p_in) + int(q_in)) + int(v8_in)
    if l.dim == base + zdim:
        return ClassLabel(f"LIST_III_{_INDEX_BY_FLAGS[(p_in, q_in, v8_in)]}")
    if l.dim == 2 * base and not (p_in or q_in or v8_in):
        return _recover_g_plus_w(l, n)
    raise Unclassifiable("dimension fits no entry over g")


def _recover_so_conj(l: Subspace, n: int) -> ClassLabel:
    m = n * n - 1
    solver = _pq_solver(n)
    base = ambient("so_n2m1", n).dim
    for row in l.basis_rows():
        coords = solver.coordinates(row)
        if coords is None:
            raise Unclassifiable("input is not inside so(n^2-1) + p + q")
        cp = coords[base:base + m]
        cq = coords[base + m:base + 2 * m]
        if all(c.is_zero() for c in cp) and all(c.is_zero() for c in cq):
            continue
        if all(c.is_zero() for c in cq):
            raise Unclassifiable("p-only component cannot come from conjugating so(n^2)")
        ratio = _block_ratio(cp, cq)
        if ratio is None:
            raise Unclassifiable("p and q components are not proportional")
        rho = -ratio
        r = gauss_sqrt(rho)
        if r is None or r.is_zero():
            raise Unclassifiable("conjugating ratio squared is not a square in Q(i)")
        return ClassLabel("SO_CONJ", t_ratio=r)
    raise Unclassifiable("no component outside so(n^2-1) found")


def _recover_g_plus_w(l: Subspace, n: int) -> ClassLabel:
    m = n * n - 1
    solver = _gw_solver(n)
    for row in l.basis_rows():
        coords = solver.coordinates(row)
        if coords is None:
            raise Unclassifiable("input is not inside g + V4 + p + q")
        c4 = coords[m:2 * m]
        cp = coords[2 * m:3 * m]
        cq = coords[3 * m:4 * m]
        if all(c.is_zero() for c in c4):
            continue
        lam = _block_ratio(cp, c4)
        mu = _block_ratio(cq, c4)
        if lam is None or mu is None:
            raise Unclassifiable("components are not scalar multiples of the V4 part")
        if mu != w_lambda_mu(lam, n):
            raise Unclassifiable("the bracket-coefficient identity fails for the recovered lambda")
        return ClassLabel("G_PLUS_W", lam=lam)
    raise Unclassifiable("no component outside g found")
