import time
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from ncfsens import BooleanFunction, named_gate
from ncfsens.dyadic import Dyadic
from ncfsens.enumeration import enumerate_functions, random_function, make_rng
from ncfsens.spectral import (NotBooleanSpectrum, Spectrum, chi, inverse_transform,
                              parseval_check, transform, zero_coefficient)
from ncfsens.boolfn import assignment, relevant_variables

H = Fraction(1, 2)


def test_chi_examples():
    assert chi(0, 3) == 1
    assert chi(0b11, assignment((1, -1))) == -1
    assert chi(0b01, assignment((-1, 1))) == -1


def test_chi_factorises():
    for U in range(8):
        for A in range(8):
            if A & ~U:
                continue
            for m in range(8):
                assert chi(U, m) == chi(A, m) * chi(U & ~A, m)


def test_transform_examples(and_poly, xor2):
    s = transform(and_poly)
    assert s.coeffs == [H, H, H, -H]
    assert transform(xor2).coeffs == [0, 0, 0, 1]
    assert transform(BooleanFunction.constant(3, 1)).coeffs == [1] + [0] * 7


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transform_matches_defining_sum(n):
    for f in enumerate_functions(n):
        ref = oracles.fourier(oracles.as_dict(f), n)
        s = transform(f)
        assert {U: s[U] for U in range(1 << n)} == ref


@pytest.mark.parametrize("n", [6, 7, 9])
def test_numpy_path_matches_defining_sum(n):
    rng = make_rng(n)
    f = random_function(n, rng)
    ref = oracles.fourier(oracles.as_dict(f), n)
    s = transform(f)
    assert all(s[U] == ref[U] for U in range(1 << n))


def test_inverse_examples(and_poly, xor2):
    assert inverse_transform(transform(xor2)) == xor2
    assert inverse_transform(Spectrum.from_coefficients(2, {0: 1})) == BooleanFunction.constant(2, 1)
    s = Spectrum.from_coefficients(2, {0: H, 1: H, 2: H, 3: -H})
    assert inverse_transform(s).values() == [-1, 1, 1, 1]


def test_inverse_rejects_non_boolean():
    with pytest.raises(NotBooleanSpectrum):
        inverse_transform(Spectrum.from_coefficients(2, {0: H}))


def test_parseval_examples(and_poly):
    assert parseval_check(transform(and_poly))
    assert not parseval_check(Spectrum(2, [0, 0, 0, 0]))


@settings(max_examples=60)
@given(st.integers(0, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** (2 ** n) - 1))))
def test_roundtrip_parseval_and_anchor(nt):
    f = BooleanFunction(*nt)
    s = transform(f)
    assert inverse_transform(s) == f
    assert parseval_check(s)
    assert s[0] == zero_coefficient(f)
    # every coefficient is a multiple of 2^-n bounded by 1
    assert np.all(np.abs(s.raw) <= 1 << f.n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_relevance_via_support(n):
    for f in enumerate_functions(n):
        s = transform(f)
        support = [U for U in range(1 << n) if s.raw[U]]
        for i in range(1, n + 1):
            assert (i in relevant_variables(f)) == any(U >> (i - 1) & 1 for U in support)


def test_spectrum_json_roundtrip(and_poly):
    s = transform(and_poly)
    data = s.to_json()
    assert data["coeffs"][3] == {"U": 3, "num": -1, "log2den": 1, "float": -0.5}
    assert Spectrum.from_json(data) == s
    assert len(transform(named_gate("XOR", 3)).to_json()["coeffs"]) == 1


def test_transform_n20_fast():
    f = random_function(20, make_rng(20))
    t = time.perf_counter()
    s = transform(f)
    assert time.perf_counter() - t < 1.0
    assert s[0] == zero_coefficient(f)
    assert parseval_check(s)
