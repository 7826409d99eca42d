from fractions import Fraction as F

import pytest

from griesskit.algebra import close_subalgebra, is_ising, is_virasoro
from griesskit.dihedral import (
    DIHEDRAL_TYPES,
    frame_6A,
    hexagon_identities,
    make,
    metadata_csv,
    three_a_sigma_identities,
)
from griesskit.groups import close_axes

ROWS = {"1A": (256, 1, 1), "2A": (32, 3, 3), "2B": (0, 2, 2), "3A": (13, 4, 3), "6A": (5, 8, 7)}


@pytest.mark.parametrize("name", sorted(ROWS))
def test_catalog_rows(catalog, name):
    C = catalog[name]
    A = C.algebra
    a, b = (A["e0"], A["e1"]) if name == "6A" else (C.ising_vectors()[0], C.ising_vectors()[-1 if name == "1A" else 1])
    ip, dim, count = ROWS[name]
    assert 1024 * A.inner(a, b) == ip
    assert close_subalgebra(A, [a, b]).dim == dim
    assert len(close_axes(A, [a, b]).axes) == count
    assert all(is_ising(A, e) for e in C.ising_vectors())


def test_metadata_only_types():
    for name in ("4A", "5A", "4B", "3C"):
        assert not DIHEDRAL_TYPES[name].full_table_available
        with pytest.raises(ValueError):
            make(name)
    with pytest.raises(ValueError):
        make("7A")


def test_metadata_csv_has_nine_rows():
    lines = metadata_csv().strip().splitlines()
    assert len(lines) == 10
    assert lines[1].startswith("1A,256,1,1,")


def test_3A_virasoro_vector(catalog):
    C = catalog["3A"]
    A = C.algebra
    v = C["v"]
    assert is_virasoro(A, v)
    assert 2 * A.inner(v, v) == F(6, 7)
    assert is_virasoro(A, A["u"]) and 2 * A.inner(A["u"], A["u"]) == F(4, 5)


def test_6A_frame(catalog):
    C = catalog["6A"]
    A = C.algebra
    u, v, f = frame_6A(C)
    assert [2 * A.inner(t, t) for t in (u, v, f)] == [F(4, 5), F(6, 7), F(25, 28)]
    assert (u * v).is_zero() and (u * f).is_zero() and (v * f).is_zero()
    assert all(is_virasoro(A, t) for t in (u, v, f))


def test_3A_sigma_identities(catalog):
    assert three_a_sigma_identities(catalog["3A"]).all_zero()


@pytest.mark.parametrize("shift", range(6))
def test_hexagon_identities(catalog, shift):
    assert hexagon_identities(catalog["6A"], shift).failures() == []


def test_6A_named_orbit(catalog):
    from griesskit.algebra import miyamoto_tau

    C = catalog["6A"]
    A = C.algebra
    ta, tb = miyamoto_tau(A, C["a"]), miyamoto_tau(A, C["b"])
    assert tb(C["a"]) == C["tau_b a"]
    assert ta(C["b"]) == C["tau_a b"]
    assert ta(tb(C["a"])) == C["tau_a tau_b a"]
    assert tb(ta(C["b"])) == C["tau_b tau_a b"]
