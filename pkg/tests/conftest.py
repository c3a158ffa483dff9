from __future__ import annotations

import random

from symres.ring import Coefficient, ParameterRing, Polynomial


def random_coefficient(rng: random.Random, ring: ParameterRing,
                       max_degree: int = 2, n_terms: int = 3,
                       bound: int = 6) -> Coefficient:
    width = len(ring.params)
    terms = {}
    for _ in range(n_terms):
        exp = [0] * width
        for _ in range(rng.randint(0, max_degree)):
            if width:
                exp[rng.randrange(width)] += 1
        c = rng.randint(-bound, bound)
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + c
    return Coefficient(ring, terms)


def random_polynomial(rng: random.Random, ring: ParameterRing, ambient: int,
                      degree: int, n_terms: int = 4,
                      bound: int = 6) -> Polynomial:
    terms = {}
    for _ in range(n_terms):
        exp = [0] * ambient
        for _ in range(degree):
            exp[rng.randrange(ambient)] += 1
        key = tuple(exp)
        c = rng.randint(-bound, bound)
        if key in terms:
            terms[key] = terms[key] + c
        else:
            terms[key] = ring.constant(c)
    return Polynomial(ring, ambient, degree, terms)


def random_int_polynomial(rng: random.Random, ambient: int, degree: int,
                          n_terms: int = 4, bound: int = 6) -> Polynomial:
    return random_polynomial(rng, ParameterRing(), ambient, degree,
                             n_terms=n_terms, bound=bound)
