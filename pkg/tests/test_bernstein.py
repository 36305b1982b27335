import random
from fractions import Fraction

import pytest

from berncert import (
    BernsteinForm,
    CertKind,
    DegreeTooLowError,
    Polynomial,
    bernstein_basis_polynomial,
    barycentric_system,
    cert_status,
    degree_elevate,
    enclosure_bound,
    from_bernstein,
    parse_polynomial,
    standard_simplex,
    to_bernstein,
)
from berncert.polynomials import multinomial, vectors_with_sum
from helpers import rand_point_in, rand_polynomial, rand_simplex


def _std_oracle_coefficient(p, degree, gamma):
    """Closed-form Bernstein coefficient on the standard simplex.

    Expanding 1 = (l0 + ... + ln)^(d-|beta|) against each monomial gives
    b_gamma = sum over beta <= (gamma_1..gamma_n) of
    c_beta * multinomial(d-|beta|, gamma - (0, beta)) / multinomial(d, gamma).
    Independent of the linear-solve route used by to_bernstein.
    """
    total = Fraction(0)
    for beta, c in p.terms.items():
        shifted = (gamma[0],) + tuple(g - b for g, b in zip(gamma[1:], beta))
        if any(e < 0 for e in shifted):
            continue
        total += c * multinomial(degree - sum(beta), shifted)
    return total / multinomial(degree, gamma)


def test_to_bernstein_matches_standard_simplex_closed_form():
    rng = random.Random(20260819)
    for n in (1, 2, 3):
        system = barycentric_system(standard_simplex(n))
        for _ in range(6 if n < 3 else 3):
            p = rand_polynomial(rng, num_vars=n, max_degree=3)
            degree = max(p.degree, rng.randint(1, 4))
            form = to_bernstein(p, system, degree)
            for gamma in vectors_with_sum(n + 1, degree):
                assert form.coefficient(gamma) == _std_oracle_coefficient(
                    p, degree, gamma
                )


def test_round_trip_on_random_simplices():
    rng = random.Random(31337)
    for _ in range(12):
        n = rng.randint(1, 3)
        p = rand_polynomial(rng, num_vars=n, max_degree=3)
        system = barycentric_system(rand_simplex(rng, n=n))
        degree = p.degree + rng.randint(0, 2)
        form = to_bernstein(p, system, degree)
        assert from_bernstein(form) == p


def test_pure_indices_are_vertex_values():
    rng = random.Random(777)
    for _ in range(8):
        s = rand_simplex(rng)
        p = rand_polynomial(rng, max_degree=4)
        d = max(p.degree, 1)
        form = to_bernstein(p, barycentric_system(s), d)
        for i, v in enumerate(s.vertices):
            pure = tuple(d if k == i else 0 for k in range(3))
            assert form.coefficient(pure) == p.evaluate(v)


def test_degree_too_low():
    p = parse_polynomial("x1^4", 1)
    system = barycentric_system(standard_simplex(1))
    with pytest.raises(DegreeTooLowError) as info:
        to_bernstein(p, system, 2)
    assert info.value.required == 4
    assert info.value.requested == 2


def test_constant_expands_to_constant_coefficients():
    system = barycentric_system(standard_simplex(2))
    form = to_bernstein(Polynomial.constant(2, Fraction(7, 3)), system, 3)
    assert all(
        form.coefficient(gamma) == Fraction(7, 3) for gamma in form.indices()
    )


def test_basis_polynomial_partition_of_unity():
    rng = random.Random(10)
    for _ in range(3):
        s = rand_simplex(rng)
        system = barycentric_system(s)
        for d in (1, 2, 3):
            total = Polynomial.zero(2)
            for alpha in vectors_with_sum(3, d):
                total = total + bernstein_basis_polynomial(system, d, alpha)
            assert total == Polynomial.constant(2, 1)


def test_form_index_validation():
    system = barycentric_system(standard_simplex(2))
    with pytest.raises(ValueError):
        BernsteinForm(system, 2, {(1, 1): Fraction(1)})
    with pytest.raises(ValueError):
        BernsteinForm(system, 2, {(3, 0, 0): Fraction(1)})
    form = to_bernstein(parse_polynomial("x1", 2), system, 1)
    with pytest.raises(ValueError):
        form.coefficient((2, 0, 0))


def test_degree_elevate_preserves_polynomial():
    rng = random.Random(55)
    for _ in range(8):
        p = rand_polynomial(rng, max_degree=3)
        s = rand_simplex(rng)
        form = to_bernstein(p, barycentric_system(s), max(p.degree, 1))
        lifted = degree_elevate(form, rng.randint(1, 3))
        assert from_bernstein(lifted) == p
        assert lifted.system == form.system


def test_degree_elevate_matches_direct_conversion():
    rng = random.Random(56)
    p = rand_polynomial(rng, max_degree=3)
    system = barycentric_system(standard_simplex(2))
    d = max(p.degree, 1)
    assert degree_elevate(to_bernstein(p, system, d), 2) == to_bernstein(
        p, system, d + 2
    )


def test_degree_elevate_needs_positive_steps():
    form = to_bernstein(
        parse_polynomial("x1", 2), barycentric_system(standard_simplex(2)), 1
    )
    with pytest.raises(ValueError):
        degree_elevate(form, 0)


def test_cert_status_classification():
    system = barycentric_system(standard_simplex(2))
    pos = to_bernstein(parse_polynomial("1/3", 2), system, 2)
    assert cert_status(pos).kind is CertKind.POSITIVE
    assert cert_status(pos).negative_indices == ()

    # an implicit zero coefficient blocks POSITIVE but not NONNEGATIVE
    demo = to_bernstein(parse_polynomial("x1^2+x2^2-x1*x2", 2), system, 2)
    restricted = BernsteinForm(
        system, 2, {k: v for k, v in demo.coeffs.items() if v > 0}
    )
    assert cert_status(restricted).kind is CertKind.NONNEGATIVE

    indet = cert_status(demo)
    assert indet.kind is CertKind.INDETERMINATE
    assert indet.negative_indices == ((0, 1, 1),)


def test_cert_status_negative_indices_graded_lex():
    system = barycentric_system(standard_simplex(2))
    form = BernsteinForm(
        system,
        2,
        {
            (0, 0, 2): Fraction(-1),
            (1, 1, 0): Fraction(-2),
            (2, 0, 0): Fraction(-3),
            (0, 2, 0): Fraction(1),
        },
    )
    assert cert_status(form).negative_indices == ((0, 0, 2), (1, 1, 0), (2, 0, 0))


def test_enclosure_bound_encloses_values():
    rng = random.Random(888)
    for _ in range(6):
        p = rand_polynomial(rng, max_degree=3)
        s = rand_simplex(rng)
        form = to_bernstein(p, barycentric_system(s), max(p.degree, 1))
        lo, hi = enclosure_bound(form)
        for _ in range(8):
            value = p.evaluate(rand_point_in(rng, s))
            assert lo <= value <= hi


def test_enclosure_bound_includes_implicit_zeros():
    system = barycentric_system(standard_simplex(2))
    form = to_bernstein(parse_polynomial("x1^2", 2), system, 2)
    lo, hi = enclosure_bound(form)
    assert lo == 0 and hi == 1
