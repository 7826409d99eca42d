import random
from math import factorial

import pytest
from hypothesis import given, strategies as st

from griesskit.algebra import compose, miyamoto_sigma, miyamoto_tau
from griesskit.algebra import MiyamotoMap
from griesskit.groups import (
    AxisSet,
    ClosureBudgetExceeded,
    PermGroup,
    brute_force_order,
    close_axes,
    conjugation_failures,
    group_report,
    perm_inv,
    perm_mul,
    perm_order,
    permutation_image,
    product_order_table,
    three_transposition_verdict,
)
from griesskit.family import matsuo_axes, matsuo_part


def perms(n):
    return st.permutations(list(range(n))).map(tuple)


@given(st.integers(2, 7).flatmap(lambda n: st.lists(perms(n), min_size=1, max_size=3)))
def test_schreier_sims_matches_brute_force(gens):
    n = len(gens[0])
    assert PermGroup(n, gens).order() == brute_force_order(n, gens)


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_perm_helpers(pq):
    p, q = pq
    e = tuple(range(len(p)))
    assert perm_mul(p, perm_inv(p)) == e
    assert perm_mul(perm_mul(p, q), perm_inv(q)) == p
    k = perm_order(p)
    r = e
    for _ in range(k):
        r = perm_mul(r, p)
    assert r == e


def test_membership_and_orbit():
    G = PermGroup(4, [(1, 0, 2, 3), (1, 2, 0, 3)])
    assert G.order() == 6
    assert G.contains((2, 1, 0, 3))
    assert not G.contains((0, 1, 3, 2))
    assert sorted(G.orbit(0)) == [0, 1, 2]
    assert PermGroup(4, [(1, 0, 2, 3), (0, 2, 3, 1)]).order() == 24


def test_larger_symmetric_group():
    rng = random.Random(3)
    n = 9
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    assert PermGroup(n, gens).order() == factorial(n)
    p = list(range(n))
    rng.shuffle(p)
    assert PermGroup(n, gens).contains(tuple(p))


def test_2A_sigma_group(catalog):
    A = catalog["2A"].algebra
    S = close_axes(A, [A["a"], A["b"]], "sigma")
    assert len(S.axes) == 3
    assert permutation_image(S).group.order() == 6


def test_6A_group(catalog):
    A = catalog["6A"].algebra
    S = close_axes(A, [A["e0"], A["e1"]])
    assert len(S.axes) == 7
    ta, tb = miyamoto_tau(A, A["e0"]), miyamoto_tau(A, A["e1"])
    sx = miyamoto_sigma(A, A["x"])
    img = permutation_image(S, [compose(ta, sx), tb.matrix])
    assert img.faithful and img.group.order() == 12
    # tau_a tau_b has order 3 on this algebra, so the two taus alone give S_3
    assert permutation_image(S, [ta.matrix, tb.matrix]).group.order() == 6


@pytest.mark.parametrize("name", ["2A", "2B", "3A", "6A"])
def test_conjugation_covariance_on_axis_sets(catalog, name):
    C = catalog[name]
    S = close_axes(C.algebra, C.ising_vectors(), "tau")
    assert conjugation_failures(S) == []


def test_pair_orders_by_type(catalog):
    A = catalog["6A"].algebra
    S = close_axes(A, [A[f"e{i}"] for i in range(6)] + [A["x"]], "tau")
    table = product_order_table(S)
    i0 = S.index(A["e0"])
    assert table[(i0, S.index(A["e1"]))] == 3
    assert table[(i0, S.index(A["e2"]))] == 3
    assert table[(i0, S.index(A["e3"]))] in (1, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matsuo_sigma_groups(xn, n):
    X = xn(n)
    A = X.algebra
    gens = [A[k] for k in matsuo_axes(X)]
    S = close_axes(A, [A["a"], A["b"]], "sigma", circle=False, acting=gens)
    img = permutation_image(S, [S.maps[S.index(g)] for g in gens])
    assert img.faithful
    assert img.group.order() == factorial(n + 1)


@pytest.mark.parametrize("n", [2, 3])
def test_matsuo_three_transpositions(xn, n):
    X = xn(n)
    sub = matsuo_part(X)
    S = close_axes(sub.algebra, [sub.to_sub(X[k]) for k in matsuo_axes(X)], "sigma")
    v = three_transposition_verdict(S)
    assert v.holds and v.witness is None
    rep = group_report(S)
    assert rep["three_transposition"] is True
    assert rep["order"] == factorial(n + 1)


def test_three_transposition_witness(catalog):
    A = catalog["6A"].algebra
    ta, tb = miyamoto_tau(A, A["e0"]), miyamoto_tau(A, A["e1"])
    sx = miyamoto_sigma(A, A["x"])
    twisted = MiyamotoMap(compose(ta, sx), "tau", A["e0"])
    S = AxisSet(A, [A["e0"], A["e1"]], ["tau", "tau"], [twisted, tb], ["a", "b"])
    v = three_transposition_verdict(S)
    assert not v.holds
    assert v.witness == (0, 1, 6)


def test_budget(catalog):
    A = catalog["6A"].algebra
    with pytest.raises(ClosureBudgetExceeded):
        close_axes(A, [A["e0"], A["e1"]], budget=3)
