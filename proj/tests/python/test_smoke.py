"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import hamdisc


def test_basic_ops():
    assert hamdisc.hamming_distance("0101", "0011") == 2
    assert hamdisc.antipode("0101") == "1010"
    assert hamdisc.ball_volume(3, 1) == 4
    assert hamdisc.ball_volume(3, -1) == 0
    assert hamdisc.krawtchouk(3, 3, 1) == -1
    assert hamdisc.ball_intersection(1, 0) == 4
    assert hamdisc.stolarsky_kernel(3, 3) == 6


def test_exact_fractions_cross_the_boundary():
    value = hamdisc.local_discrepancy(["000"], "000", 1)
    assert value == Fraction(1, 2)
    lp = hamdisc.lp_discrepancy(["000", "111"], "uniform", 2.0)
    assert lp["exact"] == Fraction(1, 8)
    assert abs(lp["value"] - 0.3535533905932738) < 1e-12
    assert hamdisc.linf_discrepancy(["000", "111"], [0, 1, 2]) == Fraction(3, 4)


def test_stolarsky_identities():
    uniform = hamdisc.stolarsky_uniform(["000", "111"])
    assert uniform["lhs"] == uniform["rhs"] == Fraction(3)
    hemi = hamdisc.stolarsky_hemisphere(["000", "100"])
    assert hemi["lhs"] == hemi["rhs_mu"] == hemi["rhs_dual"] == Fraction(1)


def test_stolarsky_on_random_codes():
    for seed in range(5):
        code = hamdisc.random_code(7, 20, seed)
        identity = hamdisc.stolarsky_uniform(code)
        assert identity["lhs"] == identity["rhs"]
        hemi = hamdisc.stolarsky_hemisphere(code)
        assert hemi["lhs"] == hemi["rhs_mu"] == hemi["rhs_dual"]


def test_macwilliams_round_trip():
    code = hamdisc.random_code(6, 9, 3)
    spectrum = hamdisc.distance_distribution(code)
    assert sum(spectrum) == 9
    dual = hamdisc.macwilliams_transform(spectrum, 9)
    assert dual[0] == 1
    assert hamdisc.macwilliams_inverse(dual, 9) == spectrum


def test_constructions():
    assert hamdisc.random_code(10, 32, 1) == hamdisc.random_code(10, 32, 1)
    assert sorted(hamdisc.random_code(3, 8, 5)) == sorted(
        format(x, "03b")[::-1] for x in range(8)
    )
    assert hamdisc.hamming_code(2) == ["000", "111"]
    assert len(hamdisc.hamming_complement(3)) == 112
    pairs = hamdisc.antipodal_code(5, 4, False, 2)
    assert hamdisc.hemisphere_discrepancy(pairs, 2.0)["exact"] == 0
    jit = hamdisc.jittered_code(8, 16, 4)
    assert len(set(jit)) == 16


def test_weights_fold():
    folded = hamdisc.fold_weights([Fraction(1, 3)] * 3)
    assert folded == [Fraction(2, 3), Fraction(1, 3), Fraction(0)]


def test_bounds_and_exponent():
    assert abs(hamdisc.jitter_exponent(0.9, 0.1) - 0.30896878345848628) < 1e-12
    report = hamdisc.bound_random(2.0, 16, 10)
    assert report["applicable"]
    assert abs(report["value"] - 13.856406460551018) < 1e-12
    assert not hamdisc.bound_random(2.0, 600, 10)["applicable"]


def test_search_and_characterization():
    result = hamdisc.exhaustive_min(3, 2, "hemisphere:2")
    assert result["exact"] == 0
    assert result["minimizer_count"] == 4
    report = hamdisc.verify_hemisphere_characterization(3, 4)
    assert report["holds"]
    assert report["zero_count"] == 6


def test_infeasible_errors():
    with pytest.raises(hamdisc.InfeasibleError):
        hamdisc.random_code(3, 9, 1)
    with pytest.raises(hamdisc.InfeasibleError):
        hamdisc.exhaustive_min(9, 8, "hemisphere:2", 100)
