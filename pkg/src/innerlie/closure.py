"""Smallest Lie / associative subalgebras containing given operators.

The closure loop maintains a canonical echelon basis and a FIFO worklist
of newly added basis vectors.  Each new vector is multiplied against the
generator set only: iterated left-normed brackets span the generated Lie
subalgebra (by the Jacobi identity), and words in the generators span the
generated associative subalgebra, so generator-only products reach the
same closure with far fewer candidates than all-pairs bracketing.  The
all-pairs predicates ``is_lie_closed`` / ``is_assoc_closed`` stay fully
independent of this shortcut and are used to certify results.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from . import gint
from .errors import DimensionMismatch
from .gint import EchelonBasis, GArr
from .operators import OperatorN, op_to_vec_row
from .subspaces import Subspace


@dataclass(frozen=True)
class ClosureReport:
    closure: Subspace
    rounds: int
    products_computed: int


def _as_mats(gens, n):
    """Generator operators as primitive integer (n^2, n^2) arrays."""
    mats = []
    for g in gens:
        if isinstance(g, OperatorN):
            if g.n != n:
                raise DimensionMismatch(f"generator has n={g.n}, expected {n}")
            row = op_to_vec_row(g)
        elif isinstance(g, GArr):
            row = g
        else:
            raise TypeError(f"cannot use {type(g).__name__} as a closure generator")
        d = n * n
        if row.re.shape[-1] != d * d and row.re.shape != (d, d):
            raise DimensionMismatch("generator size mismatch")
        mats.append(row.reshape(d, d))
    return mats


def _insert_track(eb: EchelonBasis, v: GArr):
    """Insert and return a snapshot of the stored canonical row (or None)."""
    c = eb.insert(v)
    if c is None:
        return None
    i = bisect_left(eb.pivots, c)
    return eb.rows[i].copy()


def _sub(a: GArr, b: GArr) -> GArr:
    return gint.combine((1, 0), a, (1, 0), b)


def closure_loop(action_mats, seeds, n, *, kind: str):
    """Generic worklist closure; ``kind`` selects bracket or two-sided products.

    Returns (EchelonBasis, rounds, products_computed).  Deterministic:
    candidates are generated in FIFO order over the worklist and in input
    order over the generators.
    """
    d = n * n
    width = d * d
    eb = EchelonBasis(width)
    frontier = []
    for s in seeds:
        snap = _insert_track(eb, s.ravel())
        if snap is not None:
            frontier.append(snap)
    rounds = 0
    products = 0
    full = False
    while frontier and not full:
        rounds += 1
        nxt = []
        for w in frontier:
            wm = w.reshape(d, d)
            for a in action_mats:
                cands = []
                if kind == "lie":
                    products += 1
                    cands.append(_sub(gint.matmul(a, wm), gint.matmul(wm, a)))
                else:
                    products += 2
                    cands.append(gint.matmul(a, wm))
                    cands.append(gint.matmul(wm, a))
                for cand in cands:
                    cv = cand.ravel()
                    gint.content_reduce(cv)
                    snap = _insert_track(eb, cv)
                    if snap is not None:
                        nxt.append(snap)
                        if eb.dim == width:
                            full = True
                if full:
                    break
            if full:
                break
        frontier = nxt
    return eb, rounds, products


def lie_closure(gens, n: int) -> ClosureReport:
    """Smallest bracket-closed subspace containing the span of ``gens``."""
    mats = _as_mats(gens, n)
    eb, rounds, products = closure_loop(mats, mats, n, kind="lie")
    return ClosureReport(Subspace(eb), rounds, products)


def assoc_closure(gens, n: int) -> ClosureReport:
    """Smallest composition-closed subspace containing span(gens).

    Non-unital: the closure is the span of words of length >= 1 in the
    generators; the identity is not adjoined.
    """
    mats = _as_mats(gens, n)
    eb, rounds, products = closure_loop(mats, mats, n, kind="assoc")
    return ClosureReport(Subspace(eb), rounds, products)


def _pairwise_closed(s: Subspace, n: int, kind: str) -> bool:
    d = n * n
    if s.ambient_dim != d * d:
        raise DimensionMismatch(f"subspace ambient {s.ambient_dim}, expected {d * d}")
    dim = s.dim
    if dim == 0:
        return True
    ann = s.annihilator()
    if ann.re.shape[0] == 0:
        return True
    mat = s.row_matrix()
    stack = mat.reshape(dim, d, d)
    for i in range(dim):
        mi = GArr(stack.re[i], None if stack.im is None else stack.im[i], stack.bound)
        lo = i if kind == "lie" else 0
        tail = GArr(stack.re[lo:], None if stack.im is None else stack.im[lo:], stack.bound)
        left = gint.matmul(mi, tail)
        right = gint.matmul(tail, mi)
        if kind == "lie":
            prods = _sub(left, right)
            k = prods.re.shape[0]
            flat = prods.reshape(k, d * d)
            ft = GArr(flat.re.T, None if flat.im is None else flat.im.T, flat.bound)
            if not gint.matmul(ann, ft).is_zero():
                return False
        else:
            for prods in (left, right):
                k = prods.re.shape[0]
                flat = prods.reshape(k, d * d)
                ft = GArr(flat.re.T, None if flat.im is None else flat.im.T, flat.bound)
                if not gint.matmul(ann, ft).is_zero():
                    return False
    return True


def is_lie_closed(s: Subspace, n: int) -> bool:
    """All pairwise brackets of basis elements stay inside the span."""
    return _pairwise_closed(s, n, "lie")


def is_assoc_closed(s: Subspace, n: int) -> bool:
    """All pairwise composites of basis elements stay inside the span."""
    return _pairwise_closed(s, n, "assoc")
