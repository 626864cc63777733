"""Smoothness analysis of piecewise polynomials over a fan.

Smoothness orders live on an enriched integer scale:

* nonnegative int  -- the usual C^r order,
* NOT_CONTINUOUS (-1) -- adjacent pieces do not even join continuously,
* INFINITE (float inf) -- the compared pieces are identical.

"C^r across a ray" means every partial derivative of the difference of the
two adjacent pieces up to total order r restricts to zero on the ray; for
polynomials this is equivalent to divisibility of the difference by the
(r+1)st power of the ray's line form, and both routes are implemented so
they can cross-check each other.

"C^m at the origin" means all per-piece partial derivatives up to total
order m agree at the origin.  Once m passes the maximal total degree, the
pieces' Taylor expansions pin them completely, so agreement there means the
pieces are identical and the order is INFINITE.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DomainError
from .fan import FanPartition, Ray, locate_sector
from .poly import BiPoly, restrict_to_ray

# Enriched smoothness scale: plain ints plus these two sentinels.  Both
# compare correctly under min() and <=, which is all the code relies on.
INFINITE = float("inf")
NOT_CONTINUOUS = -1

Order = int | float


def format_order(order) -> str:
    if order == INFINITE:
        return "infinite"
    if order < 0:
        return "not continuous"
    return str(order)


@dataclass(frozen=True, slots=True)
class PiecewisePoly:
    """A fan plus one polynomial piece per sector (pieces[j] lives on sector j)."""

    fan: FanPartition
    pieces: tuple[BiPoly, ...]

    def __post_init__(self):
        if not isinstance(self.pieces, tuple):
            object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(self.pieces) != len(self.fan.rays):
            raise DomainError(
                f"{len(self.fan.rays)} rays need {len(self.fan.rays)} pieces, "
                f"got {len(self.pieces)}"
            )

    def max_total_degree(self) -> int:
        return max(p.total_degree() for p in self.pieces)

    def value_at(self, x, y) -> Fraction:
        """Exact value at a nonzero point, via its sector's piece."""
        return self.pieces[locate_sector(self.fan, x, y)].evaluate(x, y)


def smoothness_order_of_difference(diff: BiPoly, ray: Ray):
    """Largest r such that all partials of `diff` up to order r vanish on the ray.

    NOT_CONTINUOUS if the difference itself does not vanish, INFINITE if it
    is the zero polynomial.  A polynomial vanishing on a ray vanishes on the
    whole line, so the answer only depends on the ray's line.
    """
    if diff.is_zero:
        return INFINITE
    top = diff.total_degree()
    for order in range(top + 1):
        for i in range(order + 1):
            if not restrict_to_ray(diff.partial(i, order - i), ray).is_zero:
                return order - 1
    # Some order-deg partial is a nonzero constant, so the loop always returns.
    raise AssertionError("unreachable: nonzero polynomial passed all orders")


def smoothness_across_ray(spline: PiecewisePoly, ray_index: int):
    """Smoothness order between the two pieces adjacent along rays[ray_index]."""
    k = len(spline.fan.rays)
    if not 0 <= ray_index < k:
        raise DomainError(f"ray index {ray_index} out of range for {k} rays")
    before = spline.pieces[(ray_index - 1) % k]
    after = spline.pieces[ray_index]
    return smoothness_order_of_difference(before - after, spline.fan.rays[ray_index])


def line_divisibility_order(diff: BiPoly, slope):
    """Largest r with (y + slope*x)^(r+1) dividing diff; the division-based twin
    of smoothness_order_of_difference for non-vertical gluing lines."""
    if diff.is_zero:
        return INFINITE
    # Substitute y -> u - slope*x; the multiplicity of (y + slope*x) is the
    # least u-exponent of the rewritten polynomial.
    a = Fraction(slope)
    shear = BiPoly({(1, 0): -a, (0, 1): 1})  # u - slope*x, with u in y's slot
    max_j = max(j for _, j in diff.terms)
    shear_powers = [BiPoly.constant(1)]
    for _ in range(max_j):
        shear_powers.append(shear_powers[-1] * shear)
    rewritten = BiPoly.zero()
    for (i, j), coeff in diff.terms.items():
        rewritten = rewritten + shear_powers[j].scale(coeff) * BiPoly({(i, 0): 1})
    multiplicity = min(j for _, j in rewritten.terms)
    return multiplicity - 1


def global_smoothness_order(spline: PiecewisePoly):
    """Min of the per-ray orders; NOT_CONTINUOUS if any ray fails order 0."""
    return min(smoothness_across_ray(spline, j) for j in range(len(spline.fan.rays)))


def origin_partials(spline: PiecewisePoly, max_order: int) -> dict[tuple[int, int], tuple[Fraction, ...]]:
    """Per-piece values of every partial derivative of total order <= max_order at 0.

    Keyed by (x_order, y_order) in increasing total order; a multi-index
    "agrees" when all pieces give the same value.
    """
    table: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for order in range(max_order + 1):
        for i in range(order + 1):
            j = order - i
            fact = factorial(i) * factorial(j)
            table[(i, j)] = tuple(p.coefficient(i, j) * fact for p in spline.pieces)
    return table


def _order_agrees(spline: PiecewisePoly, order: int) -> bool:
    for i in range(order + 1):
        coeffs = {p.coefficient(i, order - i) for p in spline.pieces}
        if len(coeffs) > 1:
            return False
    return True


def origin_smoothness_order(spline: PiecewisePoly, max_order: int | None = None):
    """Largest m such that all per-piece partials up to order m agree at the origin.

    The search is capped at the maximal total degree: agreement through that
    order forces identical pieces, reported as INFINITE.  An explicit
    `max_order` caps the search earlier; if every order up to such a cap
    agrees, the cap itself is returned (a lower bound on the true order).
    """
    degree_cap = spline.max_total_degree()
    cap = degree_cap if max_order is None else min(max_order, degree_cap)
    for order in range(cap + 1):
        if not _order_agrees(spline, order):
            return order - 1
    if max_order is not None and max_order < degree_cap:
        return max_order
    return INFINITE


@dataclass(frozen=True, slots=True)
class SmoothnessReport:
    """Per-ray orders, global and origin order, and the supersmoothness verdict.

    `theorem_applicable` is the fan-of-k-rays hypothesis: no collinear pair
    and global order at least k-2.  `supersmoothness_holds` is True when the
    origin order exceeds the global order (the extra derivative is present),
    None when the gain is absent but the hypothesis fails anyway, and False
    when the hypothesis holds and the gain is missing -- which would
    contradict the gluing theorem and so flags a bug.
    """

    per_ray_order: tuple[Order, ...]
    global_order: Order
    origin_order: Order
    theorem_applicable: bool
    supersmoothness_holds: bool | None


def supersmoothness_verdict(spline: PiecewisePoly, max_origin_order: int | None = None) -> SmoothnessReport:
    """Compute all smoothness orders and the supersmoothness verdict.

    `max_origin_order` caps the origin-order search (display use only; the
    report invariants assume the uncapped default).
    """
    per_ray = tuple(smoothness_across_ray(spline, j) for j in range(len(spline.fan.rays)))
    global_order = min(per_ray)
    origin_order = origin_smoothness_order(spline, max_order=max_origin_order)
    k = len(spline.fan.rays)
    applicable = spline.fan.collinear_free and global_order >= k - 2
    gained = origin_order >= global_order + 1
    if gained:
        holds = True
    elif applicable:
        holds = False
    else:
        holds = None
    return SmoothnessReport(
        per_ray_order=per_ray,
        global_order=global_order,
        origin_order=origin_order,
        theorem_applicable=applicable,
        supersmoothness_holds=holds,
    )


def render_report(report: SmoothnessReport) -> str:
    """Line-oriented text form used by the CLI `check` command."""
    lines = [
        f"ray {i}: order {format_order(order)}"
        for i, order in enumerate(report.per_ray_order)
    ]
    lines.append(f"global: {format_order(report.global_order)}")
    lines.append(f"origin: {format_order(report.origin_order)}")
    lines.append(f"theorem applicable: {'yes' if report.theorem_applicable else 'no'}")
    if report.supersmoothness_holds is None:
        verdict = "not applicable"
    elif report.supersmoothness_holds:
        verdict = "holds"
    else:
        verdict = "violated"
    lines.append(f"supersmoothness: {verdict}")
    return "\n".join(lines) + "\n"
