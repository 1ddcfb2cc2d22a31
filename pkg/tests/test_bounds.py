import math
from fractions import Fraction as F

import pytest

from ncfsens.bounds import (alternating_zero_coeff, as_cap, bound_report, combined_bound,
                            construct_extremal_lower, construct_extremal_upper, ncf_as_bounds,
                            unate_bound, upper_bound_step, zero_coeff_bounds)
from ncfsens.canalizing import is_ncf, most_dominant_set
from ncfsens.enumeration import enumerate_ncfs
from ncfsens.sensitivity import average_sensitivity
from ncfsens.spectral import transform, zero_coefficient


def test_ncf_as_bounds_examples():
    assert ncf_as_bounds(1) == (1, 1)
    assert ncf_as_bounds(2) == (1, 1)
    assert ncf_as_bounds(3) == (F(3, 4), F(5, 4))
    assert ncf_as_bounds(4) == (F(1, 2), F(5, 4))
    assert ncf_as_bounds(5) == (F(5, 16), F(4, 3) - F(1, 32) + F(1, 96))
    assert ncf_as_bounds(0) == (0, 0)


def test_cap():
    assert as_cap() == F(4, 3)
    uppers = [ncf_as_bounds(k)[1] for k in range(1, 31)]
    assert all(u < F(4, 3) for u in uppers)
    # even and odd subsequences increase towards the cap
    assert all(uppers[j] < uppers[j + 2] for j in range(len(uppers) - 2))
    assert F(4, 3) - uppers[-1] < F(1, 2 ** 29)


def test_upper_solves_induction():
    for k in range(3, 31):
        assert upper_bound_step(ncf_as_bounds(k - 2)[1]) == ncf_as_bounds(k)[1]


def test_zero_coeff_bounds():
    assert zero_coeff_bounds(2) == (F(1, 2), F(1, 2))
    assert zero_coeff_bounds(3) == (F(1, 4), F(3, 4))
    assert zero_coeff_bounds(5) == (F(1, 16), F(15, 16))
    with pytest.raises(ValueError):
        zero_coeff_bounds(1)


def test_alternating_zero_coeff():
    assert alternating_zero_coeff(2) == F(1, 2)
    assert alternating_zero_coeff(3) == F(1, 4)
    assert alternating_zero_coeff(4) == F(3, 8)


def test_combined_bound():
    assert combined_bound(F(1, 2)) == F(7, 6)
    assert combined_bound(1) == F(2, 3)
    with pytest.raises(ValueError):
        combined_bound(F(3, 2))


def test_unate_bound(and_poly):
    assert unate_bound(2, F(1, 2)) == 1.0
    assert average_sensitivity(and_poly) <= F(unate_bound(2, F(1, 2)))
    assert unate_bound(5, 0) == math.sqrt(5)
    with pytest.raises(ValueError):
        unate_bound(2, F(3, 2))


def test_unate_bound_on_ncfs():
    for k in range(1, 5):
        for f, _ in enumerate_ncfs(k):
            assert float(average_sensitivity(f)) <= unate_bound(k, zero_coefficient(f)) + 1e-12


def test_extremal_lower(and_poly):
    assert construct_extremal_lower(2) == and_poly
    for k, expected in [(2, 1), (3, F(3, 4)), (5, F(5, 16))]:
        f = construct_extremal_lower(k)
        assert average_sensitivity(f) == expected
        assert most_dominant_set(f) == set(range(1, k + 1))
        assert abs(zero_coefficient(f)) == 1 - F(1, 2 ** (k - 1))
    f = construct_extremal_lower(3, alpha=(-1, 1, -1), b=-1)
    assert average_sensitivity(f) == F(3, 4)


def test_extremal_lower_recursion():
    # as(k) = (as(k-1) + 2^-(k-2)) / 2 solved for k
    a = F(1)
    for k in range(2, 9):
        a = (a + F(1, 2 ** (k - 2))) / 2
        assert a == F(k, 2 ** (k - 1)) == average_sensitivity(construct_extremal_lower(k))


def test_extremal_upper():
    for k in range(1, 11):
        for beta1 in (1, -1):
            f = construct_extremal_upper(k, beta1=beta1)
            assert average_sensitivity(f) == ncf_as_bounds(k)[1]
            assert abs(zero_coefficient(f)) == alternating_zero_coeff(k)
    f = construct_extremal_upper(4, pi=(3, 1, 4, 2), alpha=(1, -1, -1, 1))
    assert average_sensitivity(f) == F(5, 4)


def test_bound_report(and_poly):
    rep = bound_report(and_poly)
    assert rep.ok
    assert rep.k == 2 and rep.as_value == 1 and rep.zero_abs == F(1, 2)
    assert rep.combined == F(7, 6)
    j = rep.to_json()
    assert j["upper"]["exact"] == "1/1" and j["cap"]["exact"] == "4/3"
    with pytest.raises(ValueError):
        from ncfsens import named_gate
        bound_report(named_gate("XOR", 2))
