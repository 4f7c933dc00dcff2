"""Smoke tests for the quadswan python module."""

import pytest

import quadswan as qs


def test_version():
    assert qs.__version__


def test_field_data():
    f = qs.make_field(5)
    assert f["disc"] == -20
    assert tuple(f["minpoly"]) == (0, 5)
    with pytest.raises(ValueError, match="NotSquareFree"):
        qs.make_field(12)
    with pytest.raises(ValueError, match="ExcludedD"):
        qs.make_field(3)


def test_splitting_and_legendre():
    assert qs.splitting_type(5, 3) == "split"
    assert qs.splitting_type(5, 5) == "ramified"
    assert qs.splitting_type(2, 5) == "inert"
    assert qs.is_unramified(2, 5)
    assert qs.legendre(2, 11) == -1
    with pytest.raises(ValueError, match="PrimeTwo"):
        qs.splitting_type(5, 2)


def test_unit_groups_match_oracle():
    for d, p in [(5, 3), (2, 5), (5, 5), (7, 11)]:
        assert qs.unit_group_invariants(d, p) == qs.oracle_unit_invariants(d, p)
    assert qs.unit_group_invariants(5, 5) == [20]


def test_analyze_ramified():
    r = qs.analyze(5, 5)
    assert r["splitting"] == "ramified"
    assert r["exact_t"] == [5]
    assert r["upper_rd"] is None
    assert r["d_equals_t"] is False
    assert r["nontrivial"] is True


def test_analyze_inert():
    r = qs.analyze(2, 5)
    assert r["lower_t"] == [3]
    assert r["upper_t"] == [6]
    assert r["lower_rd"] == [3]
    assert r["upper_rd"] == [6]
    assert r["d_equals_t"] is True


def test_scan_rows_sorted():
    rows = qs.scan(5, 3, 13)
    assert [row["p"] for row in rows] == [3, 5, 7, 11, 13]
    nontrivial = qs.scan(5, 3, 13, only_nontrivial=True)
    assert all(row["nontrivial"] for row in nontrivial)


def test_stickelberger():
    assert qs.theta_coefficients(5) == [1, 3, 2, 4]
    assert qs.swan_power_exponent(5) == 2
    assert qs.swan_power_exponent(13) == 6


def test_cyclotomic():
    assert qs.verify_congruence(7)
    assert qs.verify_congruence(97)


def test_group_calculus():
    assert qs.power_subgroup([12], 4) == [3]
    assert qs.torsion_subgroup([12], 4) == [4]
    assert qs.quotient_group([4, 4], [[1, 1]]) == [4]


def test_smith_normal_form_big_integers():
    m = [[2**127, 1], [3, 2**128 + 5]]
    d, u, v = qs.smith_normal_form(m)
    assert d[0][0] == 1
    assert d[1][1] == abs(2**127 * (2**128 + 5) - 3)
    # U*M*V == D, exactly
    um = [[sum(u[i][k] * m[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    umv = [[sum(um[i][k] * v[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert umv == d
