"""Shared generators for the randomized identity tests."""

import random

from elemsym.esp import Assignment
from elemsym.scalar import ExactComplex


def gauss(rng: random.Random, bound: int = 9) -> ExactComplex:
    return ExactComplex(rng.randint(-bound, bound), rng.randint(-bound, bound))


def gauss_assignment(rng: random.Random, n: int, bound: int = 9) -> Assignment:
    return Assignment([gauss(rng, bound) for _ in range(n)])


def gauss_list(rng: random.Random, n: int, bound: int = 9) -> list:
    return [gauss(rng, bound) for _ in range(n)]
