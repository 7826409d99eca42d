from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from griesskit import virasoro as vir


def test_first_charges():
    assert [vir.central_charge(n) for n in range(1, 6)] == [F(1, 2), F(7, 10), F(4, 5), F(6, 7), F(25, 28)]


def test_ising_weights():
    assert {vir.highest_weight(1, *s) for s in vir.sectors(1)} == {0, F(1, 2), F(1, 16)}


def test_ising_fusion():
    # sigma x sigma = 1 + epsilon, epsilon x epsilon = 1
    assert vir.fuse_canonical(1, (1, 2), (1, 2)) == {(1, 1): 1, (1, 3): 1}
    assert vir.fuse_canonical(1, (1, 3), (1, 3)) == {(1, 1): 1}


@given(st.integers(1, 6), st.data())
def test_sector_count_and_weight_symmetry(n, data):
    secs = vir.sectors(n)
    assert len(secs) == (n + 1) * (n + 2) // 2
    r = data.draw(st.integers(1, n + 1))
    s = data.draw(st.integers(1, n + 2))
    assert vir.highest_weight(n, r, s) == vir.highest_weight(n, n + 2 - r, n + 3 - s)


@given(st.integers(1, 5), st.data())
def test_fusion_is_commutative_and_unital(n, data):
    secs = vir.sectors(n)
    a = data.draw(st.sampled_from(secs))
    b = data.draw(st.sampled_from(secs))
    assert vir.fuse_canonical(n, a, b) == vir.fuse_canonical(n, b, a)
    assert vir.fuse_canonical(n, (1, 1), a) == {a: 1}


@given(st.integers(1, 5), st.data())
def test_tau_sign_is_a_grading(n, data):
    secs = vir.sectors(n)
    a = data.draw(st.sampled_from(secs))
    b = data.draw(st.sampled_from(secs))
    for c in vir.fuse_canonical(n, a, b):
        assert vir.tau_sign(n, c) == vir.tau_sign(n, a) * vir.tau_sign(n, b)


@given(st.integers(1, 5), st.data())
def test_sigma_sectors_closed_and_graded(n, data):
    secs = [s for s in vir.sectors(n) if vir.in_sigma_sectors(n, s)]
    a = data.draw(st.sampled_from(secs))
    b = data.draw(st.sampled_from(secs))
    for c in vir.fuse_canonical(n, a, b):
        assert vir.in_sigma_sectors(n, c)
        assert vir.sigma_sign(n, c) == vir.sigma_sign(n, a) * vir.sigma_sign(n, b)


def test_sigma_weights_for_ising():
    assert vir.SigmaSectorSet(1).weights == {0, F(1, 2)}


def test_out_of_range():
    with pytest.raises(vir.IndexOutOfRange):
        vir.central_charge(0)
    with pytest.raises(vir.IndexOutOfRange):
        vir.highest_weight(1, 3, 1)
    with pytest.raises(vir.NotSigmaSector):
        vir.sigma_sign(1, (1, 2))


def test_series_table_is_json_ready():
    import json

    t = vir.series_table(2)
    assert json.loads(json.dumps(t)) == t
    assert t["c"] == "7/10"
