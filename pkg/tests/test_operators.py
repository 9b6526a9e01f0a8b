import random

import pytest

from innerlie import matrices as M, operators as O
from innerlie.errors import DimensionMismatch, NotInvertible
from innerlie.scalars import GaussRational as G


def test_tensor_action():
    n = 4
    e = lambda i, j: M.unit(n, i, j)
    t = O.tensor(e(1, 2), e(3, 4))
    assert O.apply(t, e(2, 3)) == e(1, 4)
    assert O.tensor(M.identity(n), M.identity(n)) == O.identity_op(n)


def test_tensor_trace_sum():
    # sum_ij e_ij (x) e_ji acts as x -> tr(x) * 1
    n = 2
    s = O.zero_op(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = s + O.tensor(M.unit(n, i, j), M.unit(n, j, i))
    assert O.apply(s, M.unit(n, 1, 1)) == M.identity(n)
    rnd = random.Random(0)
    x = M.random_matrix(n, rnd)
    assert O.apply(s, x) == M.trace(x) * M.identity(n)


def test_inner_derivations():
    n = 4
    e = lambda i, j: M.unit(n, i, j)
    d = O.inner_deriv(e(1, 2))
    assert O.apply(d, e(2, 1)) == e(1, 1) - e(2, 2)
    assert O.inner_deriv(M.identity(n)).is_zero()
    rnd = random.Random(2)
    for _ in range(8):
        a = M.random_matrix(3, rnd)
        b = M.random_matrix(3, rnd)
        assert O.op_bracket(O.inner_deriv(a), O.inner_deriv(b)) \
            == O.inner_deriv(M.bracket(a, b))


def test_compose_tensor_law():
    rnd = random.Random(3)
    for _ in range(8):
        a, b, c, d = (M.random_matrix(3, rnd) for _ in range(4))
        assert O.compose(O.tensor(a, b), O.tensor(c, d)) \
            == O.tensor(M.mul(a, c), M.mul(d, b))
    e = lambda i, j: M.unit(2, i, j)
    assert O.compose(O.tensor(e(1, 2), e(2, 1)), O.tensor(e(2, 1), e(1, 2))) \
        == O.tensor(e(1, 1), e(1, 1))


def test_bilinearity_and_jacobi():
    rnd = random.Random(4)
    for _ in range(5):
        a, b, c = (O.tensor(M.random_matrix(2, rnd), M.random_matrix(2, rnd))
                   for _ in range(3))
        jac = (O.op_bracket(a, O.op_bracket(b, c))
               + O.op_bracket(b, O.op_bracket(c, a))
               + O.op_bracket(c, O.op_bracket(a, b)))
        assert jac.is_zero()


def test_op_rank_examples():
    assert O.op_rank(O.tensor(M.unit(2, 1, 1), M.unit(2, 1, 1))) == 1
    # kernel of ad(e11-e22) on M_2 is the diagonal matrices
    d = O.inner_deriv(M.unit(2, 1, 1) - M.unit(2, 2, 2))
    assert O.op_rank(d) == 2
    assert O.kernel_subspace(d).dim == 2


def test_two_sided_multiplication_rank_floor():
    # x -> ex + xf has rank >= n unless e = -f is scalar
    rnd = random.Random(6)
    for n in (3, 4):
        for _ in range(6):
            e = M.random_matrix(n, rnd)
            f = M.random_matrix(n, rnd)
            if M.traceless_part(e).is_zero() and (e + f).is_zero():
                continue
            t = O.tensor(e, M.identity(n)) + O.tensor(M.identity(n), f)
            if t.is_zero():
                continue
            assert O.op_rank(t) >= n


def test_membership_predicates():
    n = 4
    e = lambda i, j: M.unit(n, i, j)
    skew = O.tensor(e(1, 2), e(3, 4)) - O.tensor(e(3, 4), e(1, 2))
    assert O.in_so(skew)
    assert O.in_so_quantified(skew)
    assert not O.in_so(O.tensor(e(1, 2), e(3, 4)))
    rnd = random.Random(7)
    for _ in range(5):
        d = O.inner_deriv(M.random_matrix(n, rnd))
        assert O.in_gl_n2m1(d) and O.in_sl(d) and O.in_so(d)
    assert not O.in_sl(O.identity_op(n))
    assert O.op_trace(O.identity_op(n)) == G(n * n)
    assert not O.in_gl_n2m1(O.identity_op(n))


def test_in_so_gram_vs_quantified():
    # the closed-form test agrees with the quantified oracle on random inputs
    rnd = random.Random(8)
    n = 3
    for _ in range(12):
        t = O.tensor(M.random_matrix(n, rnd), M.random_matrix(n, rnd))
        u = t - O.tensor(M.random_matrix(n, rnd), M.random_matrix(n, rnd))
        assert O.in_so(u) == O.in_so_quantified(u)
        skew = t - _transpose_tensor(t, n)
        assert O.in_so(skew) == O.in_so_quantified(skew)


def _transpose_tensor(t, n):
    # swap-conjugate: matrix of the adjoint for the trace form
    import numpy as np
    from innerlie import gint
    from innerlie.operators import OperatorN, _swap_perm
    p = _swap_perm(n)
    re = t.num.re[p, :][:, p].T.copy()
    im = None if t.num.im is None else t.num.im[p, :][:, p].T.copy()
    return OperatorN(n, gint.GArr(re, im), t.den)


def test_so_closed_under_bracket_spotcheck():
    rnd = random.Random(9)
    n = 3
    for _ in range(6):
        a = O.tensor(M.random_matrix(n, rnd), M.random_matrix(n, rnd))
        b = O.tensor(M.random_matrix(n, rnd), M.random_matrix(n, rnd))
        u = a - _transpose_tensor(a, n)
        v = b - _transpose_tensor(b, n)
        assert O.in_so(u) and O.in_so(v)
        assert O.in_so(O.op_bracket(u, v))


def test_t_matrix():
    n = 4
    tm = O.t_matrix(2, 3, n)
    assert O.apply(tm, M.identity(n)) == 3 * M.identity(n)
    assert O.apply(tm, M.unit(n, 1, 2)) == 2 * M.unit(n, 1, 2)
    assert O.t_matrix(1, 1, n) == O.identity_op(n)
    inv = O.op_inverse(tm)
    assert inv == O.t_matrix(G(1) / 2, G(1) / 3, n)
    with pytest.raises(NotInvertible):
        O.op_inverse(O.t_matrix(0, 1, n))


def test_size_mismatch():
    with pytest.raises(DimensionMismatch):
        O.compose(O.identity_op(2), O.identity_op(3))
    with pytest.raises(DimensionMismatch):
        O.apply(O.identity_op(2), M.identity(3))


def test_vec_row_round_trip():
    rnd = random.Random(10)
    for _ in range(5):
        t = O.tensor(M.random_matrix(2, rnd), M.random_matrix(2, rnd))
        v = O.op_to_vector(t)
        assert O.vec_row_to_op(v, 2) == t
