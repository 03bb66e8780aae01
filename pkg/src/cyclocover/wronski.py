"""Exact Wronskian of a basis of induced 1-forms and the Weierstrass weights
it determines.

Each admissible cone metric with angle numerators (a_1, ..., a_n) contributes
the multivalued function prod_i (x - p_i)^(a_i/d) over the punctured base
chart.  Row j of the Wronskian matrix for such a function is its j-th
derivative divided through by the common fractional-power factor, which obeys
the closed recursion

    row_0 = 1,   row_{j+1} = (1/d) * L * row_j + row_j'

with L the logarithmic derivative sum_i a_i/(x - p_i).  Clearing the shared
denominator prod_i (x - p_i)^j of row j turns the whole determinant into a
single polynomial computation; no fractional powers are ever manipulated
symbolically.

The order b_i of the full Wronskian at puncture i is the fractional exponent
sum_k a_i^k / d plus the order of the determinant there.  The deflated
determinant W1 is a polynomial whose roots are the Weierstrass points away
from the punctures; the weight at the puncture preimages follows from b_i via
the chain rule for the branched chart.  Weight hiding over the point at
infinity is recovered by re-running the pipeline in the chart 1/(z - c).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .conemetrics import ConeMetric, all_admissible
from .covers import BranchingData, genus
from .exactmath import (
    Polynomial,
    rational_roots,
    squarefree_decomposition,
)


class BasisDependenceError(ValueError):
    """The supplied metrics induce linearly dependent functions; their
    Wronskian vanishes identically."""


class WeightIdentityError(ValueError):
    """Total Weierstrass weight differs from (g-1)g(g+1); indicates a bug,
    not a user error."""

    def __init__(self, actual: int, expected: int):
        super().__init__(f"total weight {actual}, expected {expected}")
        self.actual = actual
        self.expected = expected


@dataclass(frozen=True)
class ExtraFactor:
    """A factor of W1: its roots are Weierstrass points away from the
    punctures, of weight equal to the multiplicity.  `root` is set for
    linear factors with a rational root."""

    factor: Polynomial
    multiplicity: int
    root: Optional[Fraction] = None


@dataclass(frozen=True)
class WronskiReport:
    cover: BranchingData
    punctures: tuple[Fraction, ...]
    w1: Polynomial
    w1_scale: Fraction
    orders: tuple[Fraction, ...]
    weights: tuple[int, ...]
    extra_points: tuple[ExtraFactor, ...]
    infinity_weight: int


def default_punctures(n: int) -> tuple[Fraction, ...]:
    """The chart positions (0, 1, -1, 2, -2, 3, ...); infinity is never a
    puncture."""
    out = [Fraction(0)]
    k = 1
    while len(out) < n:
        out.append(Fraction(k))
        if len(out) < n:
            out.append(Fraction(-k))
        k += 1
    return tuple(out)


def default_basis(
    b: BranchingData, punctures: Optional[Sequence] = None
) -> list[ConeMetric]:
    """A deterministic choice of g admissible metrics inducing independent
    1-forms.

    Metrics are scanned in (multiplier, angles) order.  Forms with distinct
    multipliers transform under different characters of the deck rotation and
    cannot interfere; within one multiplier the functions share a fractional
    power and differ by the polynomial prod (x - p_i)^((a_i - r_i)/d), so a
    metric is accepted exactly when that polynomial enlarges the row space of
    its block.
    """
    g = genus(b).genus
    if g < 2:
        raise ValueError(f"need genus >= 2, got {g}")
    punctures = _checked_punctures(b, punctures)
    d = b.degree
    chosen: list[ConeMetric] = []
    blocks: dict[int, list[Polynomial]] = {}
    for metric in all_admissible(b):
        residues = [(metric.multiplier * di) % d for di in b.indices]
        poly = Polynomial.one()
        for p, a, r in zip(punctures, metric.angles, residues):
            poly = poly * Polynomial.from_roots([p] * ((a - r) // d))
        rows = blocks.setdefault(metric.multiplier, [])
        reduced = _eliminate(poly, rows)
        if reduced:
            rows.append(reduced.monic())
            rows.sort(key=lambda q: q.degree, reverse=True)
            chosen.append(metric)
            if len(chosen) == g:
                return chosen
    raise BasisDependenceError(
        f"only {len(chosen)} independent induced forms found for {b}, need {g}"
    )


def _eliminate(poly: Polynomial, rows: list[Polynomial]) -> Polynomial:
    changed = True
    while poly and changed:
        changed = False
        for row in rows:
            if row.degree == poly.degree:
                poly = poly - poly.leading * row
                changed = True
                break
    return poly


def _checked_punctures(b: BranchingData, punctures) -> tuple[Fraction, ...]:
    if punctures is None:
        return default_punctures(b.num_punctures)
    out = tuple(Fraction(p) for p in punctures)
    if len(out) != b.num_punctures:
        raise ValueError(
            f"expected {b.num_punctures} punctures, got {len(out)}"
        )
    if len(set(out)) != len(out):
        raise ValueError(f"punctures must be pairwise distinct: {out}")
    return out


def _deflated_determinant(
    d: int,
    punctures: tuple[Fraction, ...],
    angle_rows: list[tuple[int, ...]],
) -> tuple[Polynomial, list[int]]:
    """Determinant of the derivative recursion, with every factor (x - p_i)
    removed; returns the deflated polynomial and the removed multiplicities,
    shifted so they are the orders of the un-deflated determinant."""
    g = len(angle_rows)
    n = len(punctures)
    full = Polynomial.from_roots(punctures)
    full_deriv = full.derivative()
    partials = [
        Polynomial.from_roots([p for j, p in enumerate(punctures) if j != i])
        for i in range(n)
    ]
    matrix = []
    for angles in angle_rows:
        log_num = Polynomial.zero()
        for a, partial in zip(angles, partials):
            log_num = log_num + a * partial
        row = [Polynomial.one()]
        current = Polynomial.one()
        for j in range(g - 1):
            # numerator recursion for row_{j+1} over denominator full^(j+1)
            current = (
                Fraction(1, d) * (log_num * current)
                + current.derivative() * full
                - j * (current * full_deriv)
            )
            row.append(current)
        matrix.append(row)
    det = _determinant(matrix)
    if det.is_zero:
        raise BasisDependenceError(
            "Wronskian vanishes identically; metrics do not induce a basis"
        )
    shift = g * (g - 1) // 2  # column j carried denominator full^j
    orders = []
    for p in punctures:
        mult, det = det.deflate(p)
        orders.append(mult - shift)
    return det, orders


def _determinant(matrix: list[list[Polynomial]]) -> Polynomial:
    size = len(matrix)
    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(rows: tuple[int, ...]) -> Polynomial:
        if not rows:
            return Polynomial.one()
        cached = memo.get(rows)
        if cached is not None:
            return cached
        col = size - len(rows)
        acc = Polynomial.zero()
        for pos, r in enumerate(rows):
            term = matrix[r][col] * minor(tuple(x for x in rows if x != r))
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[rows] = acc
        return acc

    return minor(tuple(range(size)))


def wronskian(
    b: BranchingData,
    metrics: Sequence[ConeMetric],
    punctures: Optional[Sequence] = None,
) -> WronskiReport:
    """Exact Wronskian data for a g-element basis of induced 1-forms.

    Returns the monic deflated Wronskian W1 (no zero or pole at any
    puncture), the orders b_i of the full Wronskian at the punctures, the
    integer weights at the puncture preimages, the factorization of W1 into
    rational roots plus squarefree residual factors, and the weight above the
    point at infinity obtained from the chart 1/(z - c).
    """
    summary = genus(b)
    g = summary.genus
    if g < 2:
        raise ValueError(f"Wronskian sweep needs genus >= 2, got {g}")
    if len(metrics) != g:
        raise ValueError(f"need exactly {g} metrics, got {len(metrics)}")
    for m in metrics:
        if m.base != b:
            raise ValueError(f"metric {m} does not belong to cover {b}")
    punctures = _checked_punctures(b, punctures)
    angle_rows = [m.angles for m in metrics]

    w1_raw, orders_b = _core(b, punctures, angle_rows)
    weights = _puncture_weights(b, g, orders_b)
    extras = _extra_factors(w1_raw)

    infinity = _infinity_weight(b, punctures, angle_rows, extras)
    return WronskiReport(
        cover=b,
        punctures=punctures,
        w1=w1_raw.monic(),
        w1_scale=w1_raw.leading,
        orders=tuple(orders_b),
        weights=weights,
        extra_points=extras,
        infinity_weight=infinity,
    )


def _core(b, punctures, angle_rows) -> tuple[Polynomial, list[Fraction]]:
    d = b.degree
    g = len(angle_rows)
    det, det_orders = _deflated_determinant(d, punctures, angle_rows)
    orders_b = []
    for i in range(b.num_punctures):
        branch_exponent = Fraction(sum(row[i] for row in angle_rows), d)
        orders_b.append(branch_exponent + det_orders[i])
    for p in punctures:
        assert det(p) != 0, "deflated Wronskian must not vanish at a puncture"
    return det, orders_b


def _puncture_weights(b, g: int, orders_b: list[Fraction]) -> tuple[int, ...]:
    d = b.degree
    weights = []
    for di, bi in zip(b.indices, orders_b):
        local_degree = d // gcd(d, di)
        wt = local_degree * (Fraction(g * (g - 1), 2) + bi) - Fraction(
            g * (g + 1), 2
        )
        assert wt.denominator == 1 and wt >= 0, f"non-integral weight {wt}"
        weights.append(int(wt))
    return tuple(weights)


def _extra_factors(w1: Polynomial) -> tuple[ExtraFactor, ...]:
    out = []
    roots, cofactor = rational_roots(w1)
    for root, mult in roots:
        out.append(
            ExtraFactor(
                factor=Polynomial.from_roots([root]), multiplicity=mult, root=root
            )
        )
    if cofactor.degree > 0:
        for factor, mult in squarefree_decomposition(cofactor):
            out.append(ExtraFactor(factor=factor, multiplicity=mult))
    return tuple(out)


def _infinity_weight(b, punctures, angle_rows, extras) -> int:
    used = set(punctures)
    used.update(f.root for f in extras if f.root is not None)
    center = 1
    while Fraction(center) in used:
        center += 1
    moved = tuple(1 / (p - center) for p in punctures)
    w1_moved, _ = _core(b, moved, angle_rows)
    # the chart z -> 1/(z - center) sends infinity to 0
    return w1_moved.root_multiplicity(0)


def total_weight(report: WronskiReport, b: BranchingData, g: int) -> int:
    """Total Weierstrass weight implied by the report; raises
    WeightIdentityError unless it equals (g - 1) g (g + 1)."""
    d = b.degree
    cone_part = sum(
        gcd(d, di) * wt for di, wt in zip(b.indices, report.weights)
    )
    off_branch = d * sum(
        f.multiplicity * f.factor.degree for f in report.extra_points
    )
    total = cone_part + off_branch + d * report.infinity_weight
    expected = (g - 1) * g * (g + 1)
    if total != expected:
        raise WeightIdentityError(actual=total, expected=expected)
    return total


def weight_census(report: WronskiReport) -> dict[int, int]:
    """Number of Weierstrass points at each positive weight.

    Preimages of puncture i all share the weight computed for i; every root
    of an extra factor lies under d unbranched points of weight equal to the
    factor multiplicity, and likewise for the point at infinity.
    """
    b = report.cover
    d = b.degree
    census: dict[int, int] = {}

    def add(weight: int, count: int):
        if weight > 0:
            census[weight] = census.get(weight, 0) + count

    for di, wt in zip(b.indices, report.weights):
        add(wt, gcd(d, di))
    for f in report.extra_points:
        add(f.multiplicity, d * f.factor.degree)
    add(report.infinity_weight, d)
    return census


def hyperelliptic_test(report: WronskiReport, g: int) -> bool:
    """True iff the weight census is the hyperelliptic profile: exactly
    2g + 2 Weierstrass points, each of weight g(g-1)/2."""
    return weight_census(report) == {g * (g - 1) // 2: 2 * g + 2}
