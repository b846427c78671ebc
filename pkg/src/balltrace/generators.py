"""Seeded random polynomial generators for self-tests and property suites.

Coefficients are small exact rationals so every downstream computation stays
in exact arithmetic.  All draws go through a numpy Generator owned by the
caller, keeping runs reproducible from a single seed.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .exact import ComplexFraction
from .membership import szego_residual
from .multiindex import MultiIndex, graded_indices
from .polynomials import HolomorphicPolynomial, SpherePolynomial


def _random_coeff(rng: np.random.Generator) -> ComplexFraction:
    def part() -> Fraction:
        return Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))

    return ComplexFraction(part(), part())


def random_holomorphic_poly(
    rng: np.random.Generator, dim: int, max_degree: int, n_terms: int = 4
) -> HolomorphicPolynomial:
    """Random holomorphic polynomial with small rational coefficients."""
    pool = graded_indices(dim, max_degree)
    terms: dict[MultiIndex, ComplexFraction] = {}
    for _ in range(n_terms):
        mu = pool[int(rng.integers(0, len(pool)))]
        terms[mu] = terms.get(mu, ComplexFraction(0)) + _random_coeff(rng)
    return HolomorphicPolynomial(dim, terms)


def random_sphere_poly(
    rng: np.random.Generator, dim: int, max_degree: int, n_terms: int = 4
) -> SpherePolynomial:
    """Random sphere polynomial; terms draw both exponent vectors freely."""
    pool = graded_indices(dim, max_degree)
    terms = {}
    for _ in range(n_terms):
        mu = pool[int(rng.integers(0, len(pool)))]
        nu = pool[int(rng.integers(0, len(pool)))]
        key = (mu, nu)
        terms[key] = terms.get(key, ComplexFraction(0)) + _random_coeff(rng)
    return SpherePolynomial(dim, terms)


def random_nonmember_poly(
    rng: np.random.Generator, dim: int, max_degree: int, n_terms: int = 4
) -> SpherePolynomial:
    """Random polynomial with exactly positive Szego residual.

    Draws random sphere polynomials until one fails membership; forcing one
    purely antiholomorphic term makes rejection rare.
    """
    nu_pool = [idx for idx in graded_indices(dim, max(1, max_degree)) if idx.degree > 0]
    zero = MultiIndex.zero(dim)
    while True:
        f = random_sphere_poly(rng, dim, max_degree, n_terms)
        nu = nu_pool[int(rng.integers(0, len(nu_pool)))]
        f = f + SpherePolynomial.monomial(dim, zero, nu, _random_coeff(rng) + 1)
        residual_sq, _ = szego_residual(f)
        if residual_sq > 0:
            return f
