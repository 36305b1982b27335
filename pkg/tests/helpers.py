"""Deterministic random generators shared by the property tests.

Everything is driven by an explicit random.Random(seed) so failures
reproduce exactly.
"""

from fractions import Fraction

from berncert import DegenerateSimplexError, Polynomial, Simplex


def rand_rational(rng, lo=-10, hi=10, max_den=8):
    """A random Fraction in [lo, hi] with denominator <= max_den."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def rand_polynomial(rng, num_vars=2, max_degree=4, max_terms=6):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * num_vars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(num_vars)] += 1
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + rand_rational(rng)
    return Polynomial(num_vars, terms)


def rand_simplex(rng, n=2, lo=-4, hi=4):
    while True:
        vertices = tuple(
            tuple(rand_rational(rng, lo, hi, 4) for _ in range(n))
            for _ in range(n + 1)
        )
        try:
            return Simplex(vertices)
        except DegenerateSimplexError:
            continue


def rand_point_in(rng, simplex):
    """A random rational point of the simplex (barycentric sampling)."""
    weights = [Fraction(rng.randint(0, 12)) for _ in simplex.vertices]
    if not any(weights):
        weights[0] = Fraction(1)
    total = sum(weights)
    weights = [w / total for w in weights]
    n = simplex.dimension
    return tuple(
        sum(w * v[k] for w, v in zip(weights, simplex.vertices))
        for k in range(n)
    )


def rand_edge_ratio(rng):
    """rho in [0, 1) with a small denominator."""
    den = rng.randint(2, 8)
    return Fraction(rng.randint(0, den - 1), den)


def rand_interior_ratio(rng):
    """theta in (0, 1) with a small denominator."""
    den = rng.randint(2, 8)
    return Fraction(rng.randint(1, den - 1), den)


def rand_vertex_weights(rng):
    """(beta0, beta1, beta2) with beta0, beta2 >= 0, beta1 > 0, sum 1."""
    den = rng.randint(2, 8)
    p = rng.randint(0, den - 1)
    q = rng.randint(1, den - p)
    return (Fraction(p, den), Fraction(q, den), Fraction(den - p - q, den))
