from fractions import Fraction as F

import pytest

from griesskit import linalg
from griesskit.algebra import conformal_vector, is_ising, is_virasoro, sigma_image, tau_apply
from griesskit.family import (
    NINE,
    ForbiddenType,
    _sigma_u_sum,
    abxy_3A_identities,
    build_xn,
    dispatch_abxy,
    expand_u4,
    frame_relations_check,
    matsuo_axes,
    nine_point_gram,
    omega_charge,
    omega_n,
    xn_dim,
)
from griesskit.virasoro import central_charge


def test_xn_dimensions(xn):
    for n in range(4):
        assert xn(n).algebra.dim == xn_dim(n)


def test_cap_and_negative():
    with pytest.raises(ValueError):
        build_xn(13)
    with pytest.raises(ValueError):
        build_xn(-1)


@pytest.mark.parametrize("n", range(0, 5))
def test_xn_charge_solver_agrees_with_closed_form(xn, n):
    X = xn(n)
    A = X.algebra
    solved = conformal_vector(A, [A.basis(i) for i in range(A.dim)])
    assert solved.element == omega_n(X, n).element
    assert solved.central_charge == omega_charge(n) == F((n + 2) * (5 * n + 29), 5 * (n + 7))


def test_nested_omegas_in_x8(xn):
    X = xn(8)
    for k in range(9):
        vv = omega_n(X, k)
        assert vv.central_charge == omega_charge(k)


@pytest.mark.parametrize("k", range(1, 9))
def test_f_frame_charges(xn, k):
    X = xn(8)
    f = X.f(k)
    assert is_virasoro(X.algebra, f)
    assert 2 * X.algebra.inner(f, f) == central_charge(k + 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_frame_relations(xn, n):
    assert frame_relations_check(xn(n)).all_zero()


def test_transports_are_miyamoto_maps(xn):
    assert all(xn(3).verify_transports().values())


def test_matsuo_axes_are_ising(xn):
    X = xn(3)
    assert all(is_ising(X.algebra, X[k]) for k in matsuo_axes(X))
    assert len(matsuo_axes(X)) == 6


def test_abxy_2A(abxy2a):
    T = abxy2a
    A = T.algebra
    B = T.basis_list()
    assert conformal_vector(A, B).central_charge == F(52, 15)
    assert linalg.determinant(A.gram(B)) == F(3 ** 25 * 11 ** 5, 2 ** 81 * 5)
    f = T.f()
    assert is_virasoro(A, f) and 2 * A.inner(f, f) == F(11, 12)
    assert T.eta() == conformal_vector(A, B).element


def test_abxy_3A(abxy3a):
    T = abxy3a
    A = T.algebra
    assert A.dim == 18
    assert conformal_vector(A, T.spanning_set()).central_charge == F(228, 55)
    assert linalg.determinant(A.gram(T.basis_list())) == F(3 ** 52 * 11 * 13 ** 6, 2 ** 138 * 5 ** 3)
    xi = T.xi()
    assert is_virasoro(A, xi) and 2 * A.inner(xi, xi) == F(52, 55)


def test_ternary_relation(abxy3a):
    T = abxy3a
    A = T.algebra
    nine = sum((A[k] for k in NINE), A.zero())
    assert (T["u1"] + T["u2"] + T["u3"] + T["u4"] - F(32, 45) * nine).is_zero()
    ker = linalg.nullspace(nine_point_gram())
    assert len(ker) == 1


def test_abxy_3A_identities(abxy3a):
    assert abxy_3A_identities(abxy3a).failures() == []


def test_printed_ground_circle_coefficient_leaves_residual(abxy3a):
    T = abxy3a
    A = T.algebra
    e, u = A["a"], T["u3"]
    lhs = sigma_image(A, e, u + tau_apply(A, e, u))
    assert lhs == A.element(expand_u4(_sigma_u_sum("a")))
    assert lhs != A.element(expand_u4(_sigma_u_sum("a", F(-8, 45))))


@pytest.mark.parametrize("t", ["1A", "2A", "2B", "3A"])
def test_dispatch_allowed(t):
    D = dispatch_abxy(t)
    assert all(is_ising(D.algebra, v) for v in D.generators.values())


@pytest.mark.parametrize("t", ["3C", "4A", "4B", "5A", "6A"])
def test_dispatch_forbidden(t):
    with pytest.raises(ForbiddenType):
        dispatch_abxy(t)


def test_dispatch_unknown():
    with pytest.raises(ValueError):
        dispatch_abxy("9Z")
