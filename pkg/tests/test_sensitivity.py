from fractions import Fraction

import pytest

import oracles
from ncfsens import BooleanFunction, named_gate
from ncfsens.boolfn import relevant_variables
from ncfsens.canalizing import NcfSchema, SchemaError, build_ncf, is_ncf
from ncfsens.dyadic import Dyadic
from ncfsens.enumeration import enumerate_functions, enumerate_ncfs, make_rng, random_function
from ncfsens.restriction import restrict
from ncfsens.sensitivity import (SensitivityProfile, as_decomposition, as_ncf_recursive,
                                 average_sensitivity, average_sensitivity_spectral, disagreement,
                                 influence, influence_spectral, xi, zero_coeff_recursive)
from ncfsens.spectral import transform, zero_coefficient

AMD3 = NcfSchema(3, (1, 2, 3), (1, 1, 1), (1, 1, 1))
ALT3 = NcfSchema(3, (1, 2, 3), (1, 1, 1), (-1, 1, -1))


def test_influence_examples(and_poly, xor2):
    assert influence(xor2, 1) == 1
    assert influence(and_poly, 1) == Fraction(1, 2)
    assert influence(BooleanFunction.constant(2, 1), 2) == 0
    assert influence_spectral(transform(xor2), 2) == 1
    assert influence_spectral(transform(and_poly), 1) == Fraction(1, 2)
    assert influence_spectral(transform(BooleanFunction.constant(2, -1)), 1) == 0


def test_average_sensitivity_examples(and_poly, xor2):
    assert average_sensitivity(xor2) == 2
    assert average_sensitivity(transform(xor2)) == 2
    assert average_sensitivity(and_poly) == 1
    amd = build_ncf(3, AMD3)
    assert average_sensitivity(amd) == Fraction(3, 4)
    assert average_sensitivity(transform(amd)) == Fraction(3, 4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_influence_matches_oracle(n):
    for f in enumerate_functions(n):
        d = oracles.as_dict(f)
        s = transform(f)
        for i in range(1, n + 1):
            ref = oracles.influence(d, n, i)
            assert influence(f, i) == ref
            assert influence_spectral(s, i) == ref
        assert average_sensitivity(f) == oracles.avg_sens(d, n)


def test_profile_invariants():
    rng = make_rng(99)
    for n in (3, 6, 9):
        f = random_function(n, rng)
        p = SensitivityProfile.of(f)
        assert p.total == sum(p.influences, Dyadic(0))
        assert p.zero_coeff == transform(f)[0]
        for i, v in enumerate(p.influences, 1):
            assert 0 <= v <= 1
            assert (v == 0) == (i not in relevant_variables(f))


def test_xi_examples(and_poly, xor2):
    assert xi(and_poly, and_poly) == 0
    assert xi(and_poly, -and_poly) == 1
    assert xi(and_poly, xor2) == Fraction(3, 4)
    assert disagreement(and_poly, xor2) == Fraction(3, 4)
    with pytest.raises(ValueError):
        xi(and_poly, BooleanFunction.constant(3, 1))


def test_xi_metric_properties_n2():
    fs = list(enumerate_functions(2))
    for f in fs:
        for g in fs:
            v = xi(f, g)
            assert v == disagreement(f, g)
            assert v == xi(g, f)
            assert 0 <= v <= 1
            for h in fs:
                assert xi(f, h) <= v + xi(g, h)


def test_as_decomposition_examples(and_poly, xor2):
    lhs, rhs = as_decomposition(and_poly, 1)
    assert lhs == rhs == 1
    assert xi(restrict(and_poly, 1, 1), restrict(and_poly, 1, -1)) == Fraction(1, 2)
    # XOR: restrictions are x2 and -x2, each of sensitivity 1, and disagree everywhere
    lhs, rhs = as_decomposition(xor2, 1)
    assert lhs == 2
    assert rhs == Fraction(1, 2) + Fraction(1, 2) + 1
    lhs, rhs = as_decomposition(BooleanFunction.constant(2, 1), 1)
    assert lhs == rhs == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_as_decomposition_exhaustive(n):
    for f in enumerate_functions(n):
        d = oracles.as_dict(f)
        for i in range(1, n + 1):
            lhs, rhs = as_decomposition(f, i)
            assert lhs == oracles.avg_sens(d, n)
            assert lhs == rhs


def test_recursions_examples(and_poly):
    schema = is_ncf(and_poly)
    assert as_ncf_recursive(and_poly, schema) == 1
    assert zero_coeff_recursive(and_poly, schema) == Fraction(1, 2)
    alt = build_ncf(3, ALT3)
    assert as_ncf_recursive(alt, ALT3) == Fraction(5, 4)
    x1 = named_gate("PROJ(1)", 1)
    assert as_ncf_recursive(x1, is_ncf(x1)) == 1
    assert zero_coeff_recursive(x1, is_ncf(x1)) == 0
    amd = build_ncf(3, AMD3)
    assert zero_coeff_recursive(amd, AMD3) == Fraction(3, 4)
    c = BooleanFunction.constant(2, -1)
    assert as_ncf_recursive(c, is_ncf(c)) == 0
    assert zero_coeff_recursive(c, is_ncf(c)) == -1


def test_recursion_rejects_wrong_schema(and_poly):
    with pytest.raises(SchemaError):
        as_ncf_recursive(and_poly, NcfSchema(2, (1, 2), (-1, 1), (1, 1)))
    with pytest.raises(SchemaError):
        zero_coeff_recursive(and_poly, NcfSchema(2, (1, 2), (1, 1), (1, -1)))


def test_canalizing_side_reading_fails(and_poly):
    # restricting to the canalizing side leaves the constant beta_1, which breaks the recursion
    schema = is_ncf(and_poly)
    i, a, b = schema.pi[0], schema.alpha[0], schema.beta[0]
    g = restrict(and_poly, i, a)
    wrong_z = (zero_coefficient(g) + b).halve()
    wrong_as = (average_sensitivity(g) + 1 - zero_coefficient(g) * b).halve()
    assert wrong_z != zero_coefficient(and_poly)
    assert wrong_as != average_sensitivity(and_poly)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_recursions_on_all_ncfs(k):
    for f, schema in enumerate_ncfs(k):
        assert as_ncf_recursive(f, schema) == average_sensitivity_spectral(transform(f))
        assert zero_coeff_recursive(f, schema) == transform(f)[0]
