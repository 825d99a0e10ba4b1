"""Smoke tests for the python surface of the C++ core."""

import math

import pytest

import omex


def triangular_numbers_upto(x):
    out = []
    j = 1
    while j * (j + 1) // 2 <= x:
        out.append(j * (j + 1) // 2)
        j += 1
    return out


def test_worked_example_n3():
    assert omex.overpartition_count(3) == 8
    assert omex.overpartition_series(3)[3] == 8
    assert omex.sigma_mex_oracle(3) == 13
    assert omex.sigma_mex_table(1, 3)[3] == 13
    assert omex.sigma_mex_table(1, 3, route="convolution")[3] == 13
    assert omex.smex_series(3) == [1, 3, 6, 13]


def test_series_primitives():
    assert omex.pochhammer(1, 1, 4) == [1, -1, -1, 0, 0]
    assert omex.neg_pochhammer(1, 1, 3) == [1, 1, 1, 2]
    assert omex.jacobi_cube(6) == [1, -3, 0, 5, 0, 0, -7]
    assert omex.triangular_gf(2, 10) == [1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0]


def test_route_agreement():
    product = omex.sigma_mex_table(3, 120)
    convolution = omex.sigma_mex_table(3, 120, route="convolution")
    assert product == convolution
    # coefficients are genuine python ints with arbitrary precision
    big = omex.sigma_mex_table(1, 400)[400]
    assert big > 10**20


def test_oracle_tools():
    parts = [(2, 1, False), (1, 1, True)]  # 2 + overlined 1
    assert omex.min_excludant(parts) == 1
    assert omex.least_r_gap([(1, 3, False)], 2) == 2
    image = omex.staircase_insert([], 2, 2)
    assert image == [(2, 2, False), (1, 2, False)]
    assert omex.colored_distinct_count(3) == 13
    assert len(omex.enumerate_overpartitions(3)) == 8


def test_parity_and_triangular():
    assert omex.parity_predict(3)
    assert not omex.parity_predict(4)
    assert omex.is_triangular(10) == 4
    assert omex.is_triangular(7) is None
    residues = omex.sigma_mex_mod2k(1, 1, 200)
    odd_positions = [n for n in range(1, 201) if residues[n] != 0]
    assert odd_positions == triangular_numbers_upto(200)


def test_asymptotics():
    rows = omex.asym_points(1, [1, 50])
    assert rows[0]["exact"] == 3
    assert rows[0]["estimate"] == pytest.approx(math.exp(math.pi) / 8.0, rel=1e-9)
    assert rows[1]["ratio"] == pytest.approx(1.0, abs=0.25)


def test_eta_certification():
    report = omex.eta_certify(1, 4)
    assert report["level"] == 384
    assert report["weight"] == 4
    assert report["exponents"] == {24: 13, 48: -5}
    assert report["cond_delta_sum"] and report["cond_codelta_sum"]
    assert report["holomorphic"]
    assert all(not order.startswith("-") for order in
               (row["order"] for row in report["cusps"]))

    assert omex.factor_23(12) == (2, 1)
    assert omex.star_value(1, 3, 1) == 9
    assert omex.kronecker_symbol(2, 5) == -1
    assert omex.character_chi(1, 4, 5) == -1

    with pytest.raises(omex.UnsupportedR):
        omex.eta_certify(5, 4)
    with pytest.raises(omex.KTooSmall):
        omex.eta_certify(1, 3)


def test_congruence_and_density():
    report = omex.verify_congruence(1, 3, 8)
    assert report["ok"]
    assert report["first_bad_exponent"] is None

    scan = omex.density_scan(1, 1, 100)
    assert scan["nonzero_count"] == len(triangular_numbers_upto(100)) + 1
    assert scan["triangular_count"] == len(triangular_numbers_upto(100))
    assert 0.0 <= scan["density"] <= 1.0

    warned = omex.density_scan(5, 1, 30)
    assert warned["warning"] == "UnsupportedR"


def test_enumeration_cap():
    with pytest.raises(omex.CapExceeded):
        omex.overpartition_count(51)
    with pytest.raises(omex.CapExceeded):
        omex.sigma_mex_oracle(20, 1, cap=10)
