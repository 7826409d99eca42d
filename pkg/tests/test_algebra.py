from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from griesskit.algebra import (
    GriessAlgebra,
    InvariantViolation,
    NotSigmaType,
    SchemaViolation,
    check_automorphism,
    classify_pair,
    close_subalgebra,
    compose,
    conformal_vector,
    ising_product_residual,
    is_ising,
    matrix_order,
    miyamoto_sigma,
    miyamoto_tau,
    tau_apply,
)
from griesskit.linalg import is_identity

coeff = st.builds(F, st.integers(-20, 20), st.integers(1, 12))


def elements(A):
    return st.lists(coeff, min_size=A.dim, max_size=A.dim).map(A.vector)


def test_asymmetric_table_rejected():
    with pytest.raises(InvariantViolation):
        GriessAlgebra(["p", "q"], {(0, 1): {0: F(1)}, (1, 0): {1: F(1)}}, [[1, 0], [0, 1]])


def test_non_invariant_form_rejected():
    # p*p = q but (p p|q) = 1 differs from (p|p q) = 0
    with pytest.raises(InvariantViolation):
        GriessAlgebra(["p", "q"], {(0, 0): {1: F(1)}}, [[1, 0], [0, 1]])


def test_indefinite_form_rejected():
    with pytest.raises(InvariantViolation):
        GriessAlgebra(["p"], {}, [[F(-1)]])


def test_schema_errors():
    with pytest.raises(SchemaViolation):
        GriessAlgebra.from_dict({"basis": ["p"]})
    A = GriessAlgebra(["p"], {(0, 0): {0: F(2)}}, [[F(1)]])
    data = A.to_dict()
    data["form"] = [["1/0"]]
    with pytest.raises((SchemaViolation, InvariantViolation)):
        GriessAlgebra.from_dict(data)


@pytest.mark.parametrize("name", ["2A", "3A", "6A"])
def test_products_are_commutative_and_form_invariant(catalog, name):
    A = catalog[name].algebra

    @given(elements(A), elements(A), elements(A))
    def check(x, y, z):
        assert x * y == y * x
        assert A.inner(x * y, z) == A.inner(x, y * z)

    check()


@pytest.mark.parametrize("name", ["2A", "2B", "3A", "6A"])
def test_tau_is_involutive_automorphism(catalog, name):
    C = catalog[name]
    A = C.algebra
    for e in C.ising_vectors():
        t = miyamoto_tau(A, e)
        assert check_automorphism(A, t.matrix) is None
        assert is_identity(compose(t, t))
        assert matrix_order(t.matrix) in (1, 2)


def test_sigma_defined_only_on_tau_trivial_axes(catalog):
    A = catalog["6A"].algebra
    s = miyamoto_sigma(A, A["x"])
    assert check_automorphism(A, s.matrix) is None
    assert is_identity(compose(s, s))
    for name, axis in (("6A", "e0"), ("3A", "a")):
        B = catalog[name].algebra
        with pytest.raises(NotSigmaType):
            miyamoto_sigma(B, B[axis])


def test_sigma_of_2A_axis_swaps_the_others(catalog):
    A = catalog["2A"].algebra
    s = miyamoto_sigma(A, A["a"])
    assert s(A["b"]) == A["a.b"]
    assert s(A["a"]) == A["a"]


def test_tau_of_6A_axes_reflects_hexagon(catalog):
    A = catalog["6A"].algebra
    t = miyamoto_tau(A, A["e0"])
    assert [t(A[f"e{i}"]) for i in range(6)] == [A[f"e{(-i) % 6}"] for i in range(6)]


@pytest.mark.parametrize("name", ["2A", "3A", "6A"])
def test_ising_product_identity(catalog, name):
    C = catalog[name]
    A = C.algebra
    for e in C.ising_vectors():
        for i in range(A.dim):
            assert ising_product_residual(A, e, A.basis(i)).is_zero()


def test_classify_pair(catalog):
    A = catalog["6A"].algebra
    kinds = [classify_pair(A, A["e0"], A[f"e{i}"]).name for i in range(4)]
    assert kinds == ["1A", "6A", "3A", "2A"]
    assert classify_pair(A, A["x"], A["e0"]).name == "2A"


def test_closure_of_a_pair(catalog):
    A = catalog["6A"].algebra
    sub = close_subalgebra(A, [A["e0"], A["e2"]])
    assert sub.dim == 4
    B = sub.algebra
    assert all(is_ising(B, sub.to_sub(A[k])) for k in ("e0", "e2", "e4"))


@pytest.mark.parametrize("name,c", [("2A", F(6, 5)), ("2B", F(1)), ("3A", F(58, 35)), ("6A", F(51, 20))])
def test_conformal_solver(catalog, name, c):
    A = catalog[name].algebra
    vv = conformal_vector(A, [A.basis(i) for i in range(A.dim)])
    w = vv.element
    assert vv.central_charge == c
    assert w * w == 2 * w
    assert all(w * A.basis(i) == 2 * A.basis(i) for i in range(A.dim))


@pytest.mark.parametrize("name", ["1A", "2A", "2B", "3A", "6A"])
def test_serialization_roundtrip(catalog, name):
    A = catalog[name].algebra
    text = A.to_json()
    B = GriessAlgebra.from_json(text)
    assert B.same_structure(A)
    assert B.to_json() == text


@given(st.data())
def test_conjugation_covariance(data):
    from griesskit.dihedral import make

    A = make("6A").algebra
    i, j = data.draw(st.integers(0, 5)), data.draw(st.integers(0, 5))
    e, f = A[f"e{i}"], A[f"e{j}"]
    te = miyamoto_tau(A, e)
    g = te(f)
    lhs = miyamoto_tau(A, g).matrix
    rhs = compose(te, miyamoto_tau(A, f), te)
    assert lhs == rhs


def test_literal_six_a_x_product_breaks_invariance(catalog):
    # the product x*e0 printed without brackets
    A = catalog["6A"].algebra
    x, e0, e3 = A["x"], A["e0"], A["e3"]
    bracketed = F(1, 4) * (x + e0 - e3)
    literal = F(1, 4) * x + e0 - e3
    assert x * e0 == bracketed
    assert A.inner(bracketed, e0) == A.inner(x, e0 * e0)
    assert A.inner(literal, e0) != A.inner(x, e0 * e0)


def test_literal_six_a_u_coefficient_breaks_invariance(catalog):
    A = catalog["6A"].algebra
    u, e0 = A["u"], A["e0"]
    good = u * e0
    iu = A.index("u")
    assert good.coords[iu] == F(5, 16)
    coords = list(good.coords)
    coords[iu] = F(-135, 1024)
    printed = A.vector(coords)
    assert A.inner(good, u) == A.inner(e0, u * u)
    assert A.inner(printed, u) != A.inner(e0, u * u)


def test_tau_apply_matches_matrix(catalog):
    A = catalog["3A"].algebra
    t = miyamoto_tau(A, A["a"])
    for i in range(A.dim):
        assert tau_apply(A, A["a"], A.basis(i)) == t(A.basis(i))
