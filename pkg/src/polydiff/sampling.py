"""Seeded generation of random rationals, vectors, and polynomials.

Every randomized check in the package draws through a ``random.Random``
seeded from a :class:`SamplerConfig`, so reports are reproducible bit for
bit.  Numerators are drawn from [-numerator_bound, numerator_bound] (or
[0, bound] on the cone) and denominators from [1, denominator_bound].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .poly import ScalarPoly, VectorPoly
from .vectors import Vec


@dataclass(frozen=True)
class SamplerConfig:
    """Knobs for all sampling-based checks; identical configs give identical reports."""

    seed: int = 0
    samples: int = 64
    numerator_bound: int = 20
    denominator_bound: int = 8
    cone_only: bool = False

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.numerator_bound < 1 or self.denominator_bound < 1:
            raise ValueError("sampling bounds must be at least 1")


DEFAULT_CONFIG = SamplerConfig()


def rand_rat(rng: Random, num_bound: int, den_bound: int, nonneg: bool = False) -> Fraction:
    low = 0 if nonneg else -num_bound
    return Fraction(rng.randint(low, num_bound), rng.randint(1, den_bound))


def rand_vec(rng: Random, n: int, cfg: SamplerConfig = DEFAULT_CONFIG, nonneg: bool | None = None) -> Vec:
    if nonneg is None:
        nonneg = cfg.cone_only
    return tuple(rand_rat(rng, cfg.numerator_bound, cfg.denominator_bound, nonneg) for _ in range(n))


def rand_exponents(rng: Random, nvars: int, max_degree: int) -> tuple[int, ...]:
    if nvars == 0:
        return ()
    total = rng.randint(0, max_degree)
    exps = [0] * nvars
    for _ in range(total):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def rand_scalar_poly(
    rng: Random,
    nvars: int,
    max_degree: int,
    *,
    max_terms: int = 6,
    coeff_num_bound: int = 9,
    coeff_den_bound: int = 4,
    nonneg: bool = False,
    exact_degree: bool = False,
) -> ScalarPoly:
    """Random sparse polynomial; with exact_degree, a term of full degree is forced."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = rand_exponents(rng, nvars, max_degree)
        coeff = rand_rat(rng, coeff_num_bound, coeff_den_bound, nonneg)
        if coeff:
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
    if exact_degree and nvars:
        exps = [0] * nvars
        for _ in range(max_degree):
            exps[rng.randrange(nvars)] += 1
        coeff = Fraction(0)
        while not coeff:
            coeff = rand_rat(rng, coeff_num_bound, coeff_den_bound, nonneg)
        terms[tuple(exps)] = coeff
    return ScalarPoly(nvars, terms)


def rand_vector_poly(
    rng: Random,
    nvars: int,
    max_degree: int,
    codim: int = 1,
    **kwargs,
) -> VectorPoly:
    return VectorPoly(tuple(rand_scalar_poly(rng, nvars, max_degree, **kwargs) for _ in range(codim)))


def rand_homogeneous_poly(
    rng: Random,
    nvars: int,
    degree: int,
    codim: int = 1,
    *,
    max_terms: int = 4,
    coeff_num_bound: int = 9,
    coeff_den_bound: int = 1,
) -> VectorPoly:
    """Random nonzero homogeneous polynomial of the given total degree."""
    while True:
        coords = []
        for _ in range(codim):
            terms: dict[tuple[int, ...], Fraction] = {}
            for _ in range(rng.randint(1, max_terms)):
                exps = [0] * nvars
                for _ in range(degree):
                    exps[rng.randrange(nvars)] += 1
                coeff = rand_rat(rng, coeff_num_bound, coeff_den_bound)
                terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + coeff
            coords.append(ScalarPoly(nvars, terms))
        poly = VectorPoly(tuple(coords))
        if not poly.is_zero:
            return poly
