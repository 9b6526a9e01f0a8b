import random
from fractions import Fraction

import pytest

from innerlie import corollaries as cor
from innerlie import matrices as M, operators as O
from innerlie.catalog import g_algebra, w_lambda_op
from innerlie.errors import HypothesisViolation
from innerlie.matrices import identity, mul, unit, vectorize
from innerlie.operators import apply, inner_deriv, kernel_subspace, op_rank, tensor
from innerlie.scalars import GaussRational as G


def test_trace_condition_small():
    # computed kernel at n=3 coincides with the derivations (observed; the
    # general statement is only asserted for n >= 5)
    s = cor.trace_condition_space(3)
    assert s == g_algebra(3).space
    rnd = random.Random(31)
    d = inner_deriv(M.random_matrix(3, rnd))
    x, y, z = (M.random_matrix(3, rnd) for _ in range(3))
    assert cor.trace_condition_value(d, x, y, z).is_zero()


def test_trace_condition_violator():
    n = 5
    t = tensor(unit(n, 1, 1), unit(n, 2, 2)) - tensor(unit(n, 2, 2), unit(n, 1, 1))
    val = cor.trace_condition_value(t, unit(n, 1, 2), unit(n, 2, 3), unit(n, 3, 1))
    assert val == G(1)


def test_kernel_witnesses():
    n = 5
    e = lambda i, j: unit(n, i, j)
    r = tensor(e(1, 2), e(3, 4)) - tensor(e(3, 4), e(1, 2))
    ker = kernel_subspace(r)
    assert ker.member(vectorize(e(2, 1))) and ker.member(vectorize(e(1, 3)))
    assert not ker.member(vectorize(e(2, 3)))
    ok, witness = cor.kernel_is_subalgebra(r)
    assert not ok and witness is not None
    u, v = witness
    assert ker.member(vectorize(u)) and ker.member(vectorize(v))
    assert not ker.member(vectorize(mul(u, v)))

    rnd = random.Random(5)
    ok, _ = cor.kernel_is_subalgebra(inner_deriv(M.random_matrix(n, rnd)))
    assert ok


def test_kernel_witness_gaussian():
    n = 5
    w = w_lambda_op(unit(n, 1, 2), G(1), n)
    x = unit(n, 1, 1) - unit(n, 2, 2) + G(0, 1) * (unit(n, 3, 3) - unit(n, 4, 4))
    assert apply(w, x).is_zero()
    assert not apply(w, mul(x, x)).is_zero()
    ok, _ = cor.kernel_is_subalgebra(w)
    assert not ok


def test_multilinear_poly_validation():
    with pytest.raises(ValueError):
        cor.MultilinearPoly(2, (((1, 1), G(1)),))
    with pytest.raises(ValueError):
        cor.MultilinearPoly(2, (((1, 2), G(0)),))
    with pytest.raises(HypothesisViolation):
        cor.MultilinearPoly(1, (((1,), G(1)),))


def test_f_derivation_small_dims():
    g3 = g_algebra(3).space
    rep = cor.f_derivation_space(cor.XY, 3)
    assert rep.space == g3 and rep.full_enumeration
    rep = cor.f_derivation_space(cor.XY_COMMUTATOR, 3)
    assert rep.space.dim == 8 and rep.space == g3
    rep = cor.f_derivation_space(cor.XY_COMMUTATOR, 3, require_unital_kill=False)
    assert rep.space.dim == 9
    assert rep.space.contains(g3)


def test_f_derivation_oracle_agrees():
    # solutions satisfy the identity on random (non-basis) tuples as well
    rep = cor.f_derivation_space(cor.XYZ, 2, seed=1)
    rnd = random.Random(77)
    for row in rep.space.basis_rows():
        t = O.vec_row_to_op(row, 2)
        xs = [M.random_matrix(2, rnd) for _ in range(3)]
        assert cor.f_derivation_value(cor.XYZ, t, xs).is_zero()


def test_f_derivation_degree_guard():
    f = cor.MultilinearPoly.from_monomials(6, [tuple(range(1, 7))])
    with pytest.raises(HypothesisViolation):
        cor.f_derivation_space(f, 3)


def test_css_space_and_certificates():
    rep = cor.verify_css_equivalence(2)
    assert rep.passed and rep.css_dim == 9
    rep = cor.verify_css_equivalence(3)
    assert rep.passed and rep.css_dim == 64
    for cert in cor.certified_derivation_algebra(2).basis_certificates:
        left, right = cert.side_sums()
        assert left.is_zero() and right.is_zero()
        assert len(cert.pairs) <= 4


def test_conforming_sum_is_certified_and_inside():
    n = 3
    rnd = random.Random(41)
    css = cor.css_space(n)
    for _ in range(5):
        cert = cor.conforming_sum(M.random_matrix(n, rnd), M.random_matrix(n, rnd))
        t = cert.operator()
        assert cert.verify(t)
        assert apply(t, identity(n)).is_zero()
        assert css.member(O.op_to_vec_row(t))


def test_simple_css_membership():
    # composites of inner derivations kill 1 and land in the traceless part
    n = 3
    css = cor.css_space(n)
    t = O.compose(inner_deriv(unit(n, 1, 2)), inner_deriv(unit(n, 2, 1)))
    assert css.member(O.op_to_vec_row(t))


def test_two_term_rank():
    n = 5
    t = cor.two_term_trace_map(unit(n, 1, 2), unit(n, 2, 1))
    assert op_rank(t) == 2
    rnd = random.Random(51)
    for _ in range(5):
        t = cor.two_term_trace_map(M.random_matrix(n, rnd), M.random_matrix(n, rnd))
        assert op_rank(t) <= 2


def test_rank_floor_inner_derivation_example():
    n = 5
    d = inner_deriv(unit(n, 1, 2))
    assert kernel_subspace(d).dim == 17
    assert op_rank(d) == 8 >= n - 2


def test_rank_floor_report():
    rep = cor.rank_floor_check(G(0), 5, samples=25, seed=2)
    assert rep.passed and rep.min_rank_seen >= rep.floor == 3


def test_density_small():
    rep = cor.density_interpolation_check(3, points=4, instances=8, seed=3)
    assert rep.passed and rep.solved == 8
