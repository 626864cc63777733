"""Shared randomized generators for the test suite (all seeded by callers)."""

from fractions import Fraction
from random import Random

from supersmooth import BiPoly, FanPartition, Ray, build_fan


def random_bipoly(rng: Random, max_degree: int = 6, terms: int = 8, bound: int = 9) -> BiPoly:
    out: dict[tuple[int, int], int] = {}
    for _ in range(terms):
        i = rng.randint(0, max_degree)
        j = rng.randint(0, max_degree - i)
        out[(i, j)] = out.get((i, j), 0) + rng.randint(-bound, bound)
    return BiPoly(out)


def random_direction(rng: Random, bound: int = 5) -> tuple[int, int]:
    while True:
        d = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if d != (0, 0):
            return d


def random_collinear_free_fan(rng: Random, k: int, bound: int = 7) -> FanPartition:
    rays: list[Ray] = []
    while len(rays) < k:
        candidate = Ray(*random_direction(rng, bound))
        if any(candidate.dx * r.dy - candidate.dy * r.dx == 0 for r in rays):
            continue
        rays.append(candidate)
    return build_fan(rays)


def random_slope_set(rng: Random, count: int, max_denominator: int = 4) -> list[Fraction]:
    slopes: set[Fraction] = set()
    while len(slopes) < count:
        value = Fraction(rng.randint(-9, 9), rng.randint(1, max_denominator))
        if value != 0:
            slopes.add(value)
    return sorted(slopes)
