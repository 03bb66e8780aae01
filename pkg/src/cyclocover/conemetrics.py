"""Admissible cone metrics on the base sphere and the divisors of the
holomorphic 1-forms they induce on the cover.

A cone metric with angles (2*pi/d) * a_i at the punctures pulls back to a
translation structure on the cover exactly when the a_i are positive integers
summing to d(n-2) that are congruent to mu * d_i mod d for a single
multiplier mu.  Each such metric induces a holomorphic 1-form whose divisor
is supported on the puncture preimages with order a_i/gcd(d, d_i) - 1.

`is_admissible_oracle` re-derives admissibility independently from the
holonomy condition, by testing the congruence implication on a generating set
of winding vectors, and is used to keep `all_admissible` honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .covers import BranchingData, genus


@dataclass(frozen=True, order=True)
class ConeMetric:
    """Cone angle numerators a_i over a cover, with the witness multiplier."""

    base: BranchingData
    angles: tuple[int, ...]
    multiplier: int

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(self.angles))
        d = self.base.degree
        n = self.base.num_punctures
        if len(self.angles) != n:
            raise ValueError(f"expected {n} cone angles, got {len(self.angles)}")
        if any(a < 1 for a in self.angles):
            raise ValueError(f"cone angle numerators must be positive: {self.angles}")
        if sum(self.angles) != d * (n - 2):
            raise ValueError(
                f"angle sum {sum(self.angles)} != d(n-2) = {d * (n - 2)}"
            )
        for a, di in zip(self.angles, self.base.indices):
            if (a - self.multiplier * di) % d != 0:
                raise ValueError(
                    f"{self.angles} is not congruent to {self.multiplier} * indices mod {d}"
                )

    def __str__(self) -> str:
        return f"(2pi/{self.base.degree})*({', '.join(map(str, self.angles))})"


class Divisor:
    """Integer combination of labeled preimage points (i, s), where i is the
    puncture index and s the sheet residue mod gcd(d, d_i)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[tuple[int, int], int]] = ()):
        acc: dict[tuple[int, int], int] = {}
        for point, order in entries:
            acc[point] = acc.get(point, 0) + order
        object.__setattr__(self, "entries", dict(acc))

    def __setattr__(self, name, value):
        raise AttributeError("Divisor is immutable")

    def order_at(self, point: tuple[int, int]) -> int:
        return self.entries.get(point, 0)

    @property
    def degree(self) -> int:
        return sum(self.entries.values())

    def support_key(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Canonical form: nonzero entries, sorted."""
        return tuple(sorted((p, m) for p, m in self.entries.items() if m))

    def __eq__(self, other) -> bool:
        if isinstance(other, Divisor):
            return self.support_key() == other.support_key()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.support_key())

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self.entries.items()) + list(other.entries.items()))

    def __mul__(self, k: int) -> "Divisor":
        return Divisor((p, k * m) for p, m in self.entries.items())

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = []
        for (i, s), m in self.support_key():
            name = f"p{i + 1}_{s}"
            parts.append(name if m == 1 else f"{m}*{name}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class MultiplierCensus:
    count: int
    genus: int
    exactly_g: bool
    at_least_g: bool


@dataclass(frozen=True)
class MonomialRelation:
    """A pair of distinct degree-k monomials in the 1-forms with the same
    divisor, a candidate two-term algebraic relation.  `square_side` marks
    pairs where one side is the square of a single form, which can be reduced
    to a quadric of rank at most 3."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    square_side: bool

    def __str__(self) -> str:
        def fmt(exps):
            return " ".join(
                f"w{i + 1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )

        note = "  [rank <= 3 candidate]" if self.square_side else ""
        return f"{fmt(self.left)} ~ {fmt(self.right)}{note}"


def _residues(b: BranchingData, mu: int) -> list[int]:
    return [(mu * di) % b.degree for di in b.indices]


def all_admissible(b: BranchingData) -> list[ConeMetric]:
    """Every admissible cone metric arising from a multiplier.

    For each mu in 1..d-1 the residues mu*d_i mod d are lifted by adding
    nonnegative multiples of d (at least one where the residue vanishes)
    until the angle sum reaches d(n-2); every lift is admissible.  Sorted by
    (mu, angles).
    """
    d = b.degree
    n = b.num_punctures
    target = d * (n - 2)
    out = []
    for mu in range(1, d):
        base = [r if r > 0 else d for r in _residues(b, mu)]
        slack = target - sum(base)
        if slack < 0 or slack % d:
            continue
        for bump in _compositions(slack // d, n):
            angles = tuple(base[i] + d * bump[i] for i in range(n))
            out.append(ConeMetric(base=b, angles=angles, multiplier=mu))
    out.sort(key=lambda m: (m.multiplier, m.angles))
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def metric_from_angles(b: BranchingData, angles: Sequence[int]) -> ConeMetric:
    """ConeMetric for explicit angle numerators, recovering the multiplier;
    raises ValueError when the tuple is not admissible."""
    d = b.degree
    angles = tuple(angles)
    for mu in range(1, d):
        if all((a - mu * di) % d == 0 for a, di in zip(angles, b.indices)):
            return ConeMetric(base=b, angles=angles, multiplier=mu)
    raise ValueError(f"{angles} is not a multiplier metric for {b}")


def is_admissible_oracle(b: BranchingData, angles: Sequence[int]) -> bool:
    """Independent admissibility check straight from the holonomy condition.

    Verifies positivity, the angle sum d(n-2), and that every winding vector
    C with sum(C_i d_i) = 0 mod d also has sum(C_i a_i) = 0 mod d.  The
    implication is tested on the generating vectors d*e_1 and
    d_j*e_i - d_i*e_j; together these force a_i = mu * d_i mod d for the
    single residue mu = sum(c_i a_i) built from any Bezout combination
    sum(c_i d_i) = 1.
    """
    d = b.degree
    n = b.num_punctures
    angles = tuple(angles)
    if len(angles) != n:
        return False
    if any(a < 1 for a in angles):
        return False
    if sum(angles) != d * (n - 2):
        return False
    generators = [tuple(d if i == 0 else 0 for i in range(n))]
    for i in range(n):
        for j in range(i + 1, n):
            vec = [0] * n
            vec[i] = b.indices[j]
            vec[j] = -b.indices[i]
            generators.append(tuple(vec))
    for c in generators:
        assert sum(ci * di for ci, di in zip(c, b.indices)) % d == 0
        if sum(ci * ai for ci, ai in zip(c, angles)) % d != 0:
            return False
    return True


def divisor_of(m: ConeMetric) -> Divisor:
    """Divisor of the induced 1-form: order a_i/gcd(d, d_i) - 1 at each of
    the gcd(d, d_i) preimages of puncture i; total degree 2g - 2."""
    d = m.base.degree
    entries = []
    for i, (a, di) in enumerate(zip(m.angles, m.base.indices)):
        count = gcd(d, di)
        assert a % count == 0, "admissible angles are divisible by gcd(d, d_i)"
        order = a // count - 1
        for s in range(count):
            entries.append(((i, s), order))
    div = Divisor(entries)
    expected = 2 * genus(m.base).genus - 2
    assert div.degree == expected, (div.degree, expected)
    return div


def count_checks(b: BranchingData) -> MultiplierCensus:
    """Multiplier count against the genus: exactly g is a theorem for n = 3,
    at least g is an open conjecture reported per cover, never assumed."""
    count = len(all_admissible(b))
    g = genus(b).genus
    return MultiplierCensus(
        count=count, genus=g, exactly_g=(count == g), at_least_g=(count >= g)
    )


def involution_pairing(
    b: BranchingData,
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """For a 3-punctured base: the zero-free multiplier residue tuples pair
    off under a -> (d - a_1, d - a_2, d - a_3), admissible side (sum d)
    first, non-admissible side (sum 2d) second; there are genus-many pairs."""
    if b.num_punctures != 3:
        raise ValueError("the multiplier involution is specific to 3 punctures")
    d = b.degree
    zero_free = []
    for mu in range(1, d):
        r = tuple(_residues(b, mu))
        if all(x > 0 for x in r):
            zero_free.append(r)
    g = genus(b).genus
    assert len(zero_free) == 2 * g
    pairs = []
    for r in zero_free:
        if sum(r) == d:
            partner = tuple(d - x for x in r)
            assert sum(partner) == 2 * d and partner in zero_free
            pairs.append((r, partner))
    assert len(pairs) == g
    return pairs


def monomial_relations(
    divisors: Sequence[Divisor], k: int
) -> list[MonomialRelation]:
    """All unordered pairs of distinct degree-k monomials in the given forms
    whose divisors coincide.  Each pair is a candidate two-term relation
    between products of the 1-forms."""
    if k < 2:
        raise ValueError(f"relation degree must be at least 2, got {k}")
    exponent_tuples = sorted(_compositions(k, len(divisors)), reverse=True)
    by_divisor: dict = {}
    for exps in exponent_tuples:
        total = Divisor()
        for div, e in zip(divisors, exps):
            if e:
                total = total + e * div
        by_divisor.setdefault(total.support_key(), []).append(exps)
    out = []
    for group in by_divisor.values():
        for a in range(len(group)):
            for c in range(a + 1, len(group)):
                left, right = sorted((group[a], group[c]), reverse=True)
                out.append(
                    MonomialRelation(
                        left=left,
                        right=right,
                        square_side=_is_square_monomial(left)
                        or _is_square_monomial(right),
                    )
                )
    out.sort(key=lambda rel: (rel.left, rel.right), reverse=True)
    return out


def _is_square_monomial(exps: tuple[int, ...]) -> bool:
    # exactly one exponent, equal to 2: the square of a single form
    return sorted(exps, reverse=True)[0] == 2 and sum(exps) == 2
