from fractions import Fraction as F

import pytest

from griesskit.algebra import is_ising, is_virasoro
from griesskit.lattice import (
    ALLOWED_SCALED,
    OracleMismatch,
    LatticeGriess,
    e8_ising_enumeration,
    e8_pair_values,
    eta_charge,
    eta_frame,
    eta_frame_check,
    f2_vectors,
    w_product_failures,
    m_r_algebra,
    phi_checks,
    root_system,
    s_t_decomposition,
    standard_e8_ising,
    t_charge,
)

COUNTS = {"A1": 1, "A4": 10, "A8": 36, "D4": 12, "D5": 20, "E6": 36, "E7": 63, "E8": 120}


@pytest.mark.parametrize("name,count", sorted(COUNTS.items()))
def test_root_systems(name, count):
    R = root_system(name)
    R.check()
    assert len(R.positive) == count


def test_underscore_names():
    assert root_system("A_5").positive == root_system("A5").positive
    with pytest.raises(ValueError):
        root_system("G2")


@pytest.mark.parametrize("name", [f"A{n}" for n in range(1, 9)] + ["D4"])
def test_oracle_and_decomposition(lattice, name):
    LG = lattice(name)
    assert w_product_failures(LG, stop_after=10 ** 9) == []
    st = s_t_decomposition(LG)
    assert st.c_t == t_charge(LG.R)
    assert st.s + st.t == LG.omega
    assert (st.s * st.t).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_mr_algebra_and_eta_frame(lattice, n):
    LG = lattice(f"A{n}")
    M = m_r_algebra(LG)
    assert M.sub.dim == n * (n + 1) // 2
    assert M.t_kills
    etas = eta_frame(LG)
    assert all(eta_frame_check(LG, etas).values())
    assert [2 * LG.algebra.inner(e, e) for e in etas] == [eta_charge(k) for k in range(1, n + 1)]


def test_corrupted_table_is_caught():
    R = root_system("A2")
    LG = LatticeGriess(R, validate=False)
    A = LG.algebra
    a, b = LG.roots[0], LG.roots[1]
    i, j = LG.xindex[a], LG.xindex[b]
    A._table[i][j] = A._table[j][i] = {}
    A._int_cache = None
    assert w_product_failures(LG)
    import griesskit.lattice as lat

    orig = lat.LatticeGriess

    class Broken(orig):
        def __init__(self, R, validate=True):
            super().__init__(R, validate=False)
            self.algebra._table[i][j] = self.algebra._table[j][i] = {}

    lat.LatticeGriess = Broken
    try:
        with pytest.raises(OracleMismatch):
            lat.build_lattice_griess(R)
    finally:
        lat.LatticeGriess = orig


def test_e8(lattice):
    LG = lattice("E8")
    A = LG.algebra
    assert A.dim == 156
    t = standard_e8_ising(LG)
    assert is_ising(A, t)
    st = s_t_decomposition(LG)
    assert st.c_t == F(1, 2)
    vecs = e8_ising_enumeration(LG)
    assert len({v.vector.coords for v in vecs}) == 496
    hist = e8_pair_values(LG, vecs)
    assert set(hist) <= ALLOWED_SCALED
    assert sum(hist.values()) == 496 * 495 // 2


def test_phi_maps(lattice):
    LG = lattice("E8")
    ys = f2_vectors(8)[:4] + [(1,) * 8]
    assert all(phi_checks(LG, ys).values())


def test_d4_t_vector(lattice):
    LG = lattice("D4")
    t = s_t_decomposition(LG).t
    assert is_virasoro(LG.algebra, t)
    assert 2 * LG.algebra.inner(t, t) == t_charge(LG.R)
