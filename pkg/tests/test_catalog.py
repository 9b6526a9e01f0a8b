import random
from fractions import Fraction

import pytest

from innerlie import matrices as M, operators as O
from innerlie.catalog import (CATALOG_NAMES, ambient, catalog, conjugate, g_algebra,
                              generate_gmodule, highest_weight_vector,
                              is_g_stable, is_highest_weight, phi1, phi2, phi3,
                              t0_span, w_lambda, w_lambda_mu, w_lambda_op)
from innerlie.errors import SingularParameter
from innerlie.operators import (inner_deriv, op_bracket, op_to_vec_row, t_matrix,
                                tensor, trace_against, trace_map)
from innerlie.scalars import GaussRational as G
from innerlie.subspaces import Subspace


def test_g_algebra_small():
    g = g_algebra(3)
    assert g.dim == 8 == g.expected_dim
    assert not g.table_certified
    for row in g.space.basis_rows():
        t = O.vec_row_to_op(row, 3)
        assert O.in_sl(t) and O.in_gl_n2m1(t) and O.in_so(t)


def test_catalog_dims_n4():
    # the dimension formulas hold for n=4 as well, still flagged uncertified
    for name in CATALOG_NAMES:
        m = catalog(name, 4)
        assert m.dim == m.expected_dim, name
        assert not m.table_certified


def test_generate_gmodule_seed_examples():
    n = 4
    g = g_algebra(n)
    full = generate_gmodule([highest_weight_vector("g", n)], n)
    assert full == g.space
    v8 = generate_gmodule([highest_weight_vector("V8", n)], n)
    assert v8.dim == 1


def test_explicit_spans_match():
    # catalog already cross-checks p, q, V4, V8 against direct constructions
    for name in ("p", "q", "V4", "V8"):
        assert catalog(name, 3).dim == catalog(name, 3).expected_dim


def test_ambient_dims():
    n = 3
    assert ambient("gl_n2", n).dim == 81
    assert ambient("sl_n2", n).dim == 80
    assert ambient("gl_n2m1", n).dim == 64
    assert ambient("sl_n2m1", n).dim == 63
    assert ambient("so_n2", n).dim == 36
    assert ambient("so_n2m1", n).dim == 28


def test_highest_weight_examples():
    n = 5
    assert is_highest_weight(highest_weight_vector("V2", n), n)
    assert is_highest_weight(highest_weight_vector("V6", n), n)
    assert not is_highest_weight(inner_deriv(M.unit(n, 2, 1)), n)


def test_phi_maps():
    n = 4
    e12 = M.unit(n, 1, 2)
    d = inner_deriv(e12)
    assert phi3(d) == tensor(e12, M.identity(n)) + tensor(M.identity(n), e12)
    assert phi1(d) == trace_map(e12)
    assert phi2(d) == trace_against(e12)
    e1n = M.unit(n, 1, n)
    assert O.apply(phi1(inner_deriv(e1n)), M.identity(n)) == n * e1n
    with pytest.raises(ValueError):
        phi1(tensor(e12, e12))


def test_phi_equivariance():
    n = 3
    rnd = random.Random(13)
    for phi in (phi1, phi2, phi3):
        for _ in range(4):
            a = M.random_matrix(n, rnd, traceless=True)
            c = M.random_matrix(n, rnd, traceless=True)
            lhs = op_bracket(inner_deriv(c), phi(inner_deriv(a)))
            rhs = phi(inner_deriv(M.bracket(c, a)))
            assert lhs == rhs


def test_w_lambda_family():
    n = 5
    assert w_lambda(0, n) == catalog("V4", n).space
    mu = w_lambda_mu(G(1), n)
    assert mu == G(Fraction(-2, 7))
    assert (n * G(1) * mu + 2 * G(1) + 2 * mu).is_zero()
    assert w_lambda(1, n).dim == n * n - 1
    with pytest.raises(SingularParameter):
        w_lambda(Fraction(-2, n), n)


def test_w_lambda_bracket_identity():
    # [w_a, w_b] is the inner derivation of [a, b] when the coefficient
    # identity holds, so g + W(lambda) closes
    n = 4
    rnd = random.Random(3)
    lam = G(1)
    for _ in range(4):
        a = M.random_matrix(n, rnd, traceless=True)
        b = M.random_matrix(n, rnd, traceless=True)
        br = op_bracket(w_lambda_op(a, lam, n), w_lambda_op(b, lam, n))
        assert br == inner_deriv(M.bracket(a, b))


def test_conjugate():
    n = 4
    so2 = ambient("so_n2", n)
    assert conjugate(so2, O.identity_op(n)) == so2
    t = t_matrix(2, 1, n)
    moved = conjugate(so2, t)
    assert moved.dim == so2.dim
    assert moved != so2
    v3 = catalog("V3", n).space
    pq = catalog("p", n).space.sum(catalog("q", n).space)
    for r in (G(2), G(1, 1)):
        w = conjugate(v3, t_matrix(r, 1, n))
        assert pq.contains(w)
        assert is_g_stable(w, n)


def test_t0_span():
    n = 3
    t0 = t0_span(n)
    assert t0.dim == 2
    assert t0.member(op_to_vec_row(O.identity_op(n)))
    assert t0.member(op_to_vec_row(highest_weight_vector("V8", n)))


def test_module_stability_small():
    n = 3
    for name in ("V1", "V5", "p", "q"):
        assert is_g_stable(catalog(name, n).space, n)


def test_unknown_name():
    with pytest.raises(KeyError):
        catalog("V9", 5)
    with pytest.raises(KeyError):
        ambient("xx", 5)
