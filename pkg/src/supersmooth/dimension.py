"""Dimension and sampling of smooth piecewise-polynomial spaces over a fan.

The space of splines with pieces of total degree <= d joined C^r across
every ray is cut out of the k*(d+1)(d+2)/2 piece coefficients by linear
constraints: for each ray, every partial derivative of the difference of
the two adjacent pieces up to total order r must restrict to zero on the
ray's line, one equation per power of the ray parameter.  The dimension is
the coefficient count minus the rank of that system, and the system's null
space doubles as a sampling basis.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DomainError
from .fan import FanPartition
from .poly import BiPoly
from .spline import PiecewisePoly


def _monomials(degree: int) -> list[tuple[int, int]]:
    return [(i, s - i) for s in range(degree + 1) for i in range(s + 1)]


def _falling(exponent: int, order: int) -> int:
    out = 1
    for step in range(order):
        out *= exponent - step
    return out


def _ray_constraint_rows(fan, ray_index: int, degree: int, smoothness: int,
                         monomials, piece_count: int) -> list[list[int]]:
    """Rows forcing the pieces adjacent along one ray to join C^smoothness."""
    ray = fan.rays[ray_index]
    left = (ray_index - 1) % piece_count
    right = ray_index
    per_piece = len(monomials)
    width = piece_count * per_piece
    rows = []
    for order in range(smoothness + 1):
        for dx_order in range(order + 1):
            dy_order = order - dx_order
            # restriction of D^(dx_order, dy_order) x^i y^j to (t*dx, t*dy):
            # coefficient of t^(i+j-order), one constraint row per power.
            by_power: dict[int, list[tuple[int, int]]] = {}
            for col, (i, j) in enumerate(monomials):
                if i < dx_order or j < dy_order:
                    continue
                coeff = (
                    _falling(i, dx_order)
                    * _falling(j, dy_order)
                    * ray.dx ** (i - dx_order)
                    * ray.dy ** (j - dy_order)
                )
                if coeff:
                    by_power.setdefault(i + j - order, []).append((col, coeff))
            for power in sorted(by_power):
                row = [0] * width
                for col, coeff in by_power[power]:
                    row[left * per_piece + col] += coeff
                    row[right * per_piece + col] -= coeff
                if any(row):
                    rows.append(row)
    return rows


def _constraint_rows(fan: FanPartition, degree: int, smoothness: int) -> tuple[list[list[int]], int]:
    if degree < 0:
        raise DomainError("degree must be nonnegative")
    if smoothness < 0:
        raise DomainError("smoothness must be nonnegative")
    monomials = _monomials(degree)
    k = len(fan.rays)
    width = k * len(monomials)
    rows: list[list[int]] = []
    for ray_index in range(k):
        block = _ray_constraint_rows(fan, ray_index, degree, smoothness, monomials, k)
        # Pre-reducing each ray's block keeps the global elimination small.
        rows.extend(linalg.row_reduce(block, cols=width))
    return rows, width


def spline_space_dimension(fan: FanPartition, degree: int, smoothness: int) -> int:
    """Dimension of the C^smoothness splines of degree <= degree over the fan."""
    rows, width = _constraint_rows(fan, degree, smoothness)
    return width - linalg.rank(rows, cols=width)


def spline_space_basis(fan: FanPartition, degree: int, smoothness: int) -> list[PiecewisePoly]:
    """A basis of the spline space, as piecewise polynomials with integer coefficients."""
    rows, width = _constraint_rows(fan, degree, smoothness)
    monomials = _monomials(degree)
    basis = []
    for vector in linalg.nullspace(rows, cols=width):
        basis.append(_from_coefficients(fan, monomials, vector))
    return basis


def _from_coefficients(fan, monomials, vector: Sequence) -> PiecewisePoly:
    per_piece = len(monomials)
    pieces = []
    for p in range(len(fan.rays)):
        terms = {}
        for col, mono in enumerate(monomials):
            coeff = vector[p * per_piece + col]
            if coeff:
                terms[mono] = Fraction(coeff)
        pieces.append(BiPoly(terms))
    return PiecewisePoly(fan=fan, pieces=tuple(pieces))


def sample_spline_space(fan: FanPartition, degree: int, smoothness: int, count: int,
                        seed: int = 0, coefficient_bound: int = 9) -> list[PiecewisePoly]:
    """Random elements of the spline space: integer combinations of the basis.

    Weights are drawn uniformly from [-coefficient_bound, coefficient_bound]
    with a fixed default seed, so samples are reproducible.
    """
    basis = spline_space_basis(fan, degree, smoothness)
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        pieces = [BiPoly.zero() for _ in fan.rays]
        for element in basis:
            weight = rng.randint(-coefficient_bound, coefficient_bound)
            if weight == 0:
                continue
            pieces = [acc + part.scale(weight) for acc, part in zip(pieces, element.pieces)]
        samples.append(PiecewisePoly(fan=fan, pieces=tuple(pieces)))
    return samples
