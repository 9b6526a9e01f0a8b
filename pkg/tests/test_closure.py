import random

from innerlie import matrices as M, operators as O
from innerlie.catalog import ambient, catalog, g_algebra
from innerlie.closure import (assoc_closure, is_assoc_closed, is_lie_closed,
                              lie_closure)
from innerlie.matrices import identity, traceless_basis, unit
from innerlie.operators import inner_deriv, tensor
from innerlie.subspaces import Subspace


def test_lie_closure_of_offdiagonal_derivations():
    # brackets of off-diagonal ad e_ij recover the diagonal part: all of g
    n = 3
    gens = [inner_deriv(unit(n, i, j))
            for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    rep = lie_closure(gens, n)
    assert rep.closure == g_algebra(n).space
    assert rep.rounds >= 1 and rep.products_computed > 0


def test_assoc_closure_idempotent_generator():
    rep = assoc_closure([O.identity_op(2)], 2)
    assert rep.closure.dim == 1


def test_assoc_closure_derivations():
    for n, want in ((2, 9), (3, 64)):
        rep = assoc_closure([inner_deriv(a) for a in traceless_basis(n)], n)
        assert rep.closure.dim == want == (n * n - 1) ** 2


def test_multiplication_algebra_is_everything():
    n = 3
    gens = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            gens.append(tensor(unit(n, i, j), identity(n)))
            gens.append(tensor(identity(n), unit(n, i, j)))
    rep = assoc_closure(gens, n)
    assert rep.closure.dim == n ** 4
    assert rep.closure == Subspace.full(n ** 4)


def test_closure_idempotence_and_monotonicity():
    n = 3
    rnd = random.Random(17)
    for _ in range(6):
        gens = [tensor(M.random_matrix(n, rnd, -1, 1), M.random_matrix(n, rnd, -1, 1))
                for _ in range(2)]
        rep = lie_closure(gens, n)
        again = lie_closure([O.vec_row_to_op(r, n) for r in rep.closure.basis_rows()], n)
        assert again.closure == rep.closure
        bigger = lie_closure(gens + [inner_deriv(M.random_matrix(n, rnd, -1, 1))], n)
        assert bigger.closure.contains(rep.closure)


def test_assoc_contains_lie_closure_of_bracket_closed_span():
    n = 2
    gens = [inner_deriv(a) for a in traceless_basis(n)]
    lie = lie_closure(gens, n)
    assoc = assoc_closure([O.vec_row_to_op(r, n) for r in lie.closure.basis_rows()], n)
    assert assoc.closure.contains(lie.closure)


def test_closed_predicates_small():
    n = 3
    so2 = ambient("so_n2", n)
    assert is_lie_closed(so2, n)
    g = g_algebra(n).space
    v3 = catalog("V3", n).space
    assert not is_lie_closed(g.sum(v3), n)
    glm1 = ambient("gl_n2m1", n)
    assert is_assoc_closed(glm1, n)
    assert is_assoc_closed(glm1.sum(catalog("p", n).space), n)
    assert not is_assoc_closed(g, n)


def test_closure_report_determinism():
    n = 3
    gens = [inner_deriv(unit(n, 1, 2)), inner_deriv(unit(n, 2, 1)),
            inner_deriv(unit(n, 2, 3)), inner_deriv(unit(n, 3, 2))]
    a = lie_closure(gens, n)
    b = lie_closure(gens, n)
    assert a.closure == b.closure
    assert (a.rounds, a.products_computed) == (b.rounds, b.products_computed)
