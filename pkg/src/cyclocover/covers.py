"""Cyclically branched covers of punctured spheres.

A d-fold cover of an n-punctured sphere is specified by the covering degree d
and branching indices (d_1, ..., d_n), one per puncture, listed in the cyclic
order of the branch cuts around the base point.  Crossing the cut to puncture
i sends sheet j to sheet j + d_i (mod d).  The cover is a closed surface iff
the indices sum to 0 mod d, and is connected iff the indices generate Z/d,
that is gcd(d, d_1, ..., d_n) = 1; otherwise that gcd counts the components.
(The criterion must include d: multiplying indices by a unit mod d cannot
change connectedness, but it can change the plain gcd of the indices.)

The genus is computed two independent ways: from the Riemann-Hurwitz count
(`genus`) and from an explicit lifted cell complex whose vertex orbits are
found by walking the sheet permutations (`genus_oracle`).

Covers are enumerated as integer partitions (multisets of indices) up to
simultaneous multiplication by a unit mod d, which is the equivalence of
covers up to isomorphism; each class is reported by the canonical form of
`normalize`, the lexicographic minimum over units, rotations and reversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import ceil, gcd
from typing import Iterator, Optional, Sequence


class InvalidCoverError(ValueError):
    """Raised when branching data violates the closedness or connectedness
    conditions; carries the full list of violations."""

    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True, order=True)
class BranchingData:
    """The data of a cover: degree d plus the cyclically ordered branching
    indices (d_1, ..., d_n)."""

    degree: int
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        problems = check(self.degree, self.indices)
        if problems:
            raise InvalidCoverError(problems)

    @property
    def num_punctures(self) -> int:
        return len(self.indices)

    @property
    def preimage_counts(self) -> tuple[int, ...]:
        """Number gcd(d, d_i) of preimages of each puncture."""
        return tuple(gcd(self.degree, di) for di in self.indices)

    def __str__(self) -> str:
        return f"{self.degree}-fold ({', '.join(map(str, self.indices))})"


@dataclass(frozen=True)
class CoverSummary:
    genus: int
    preimage_counts: tuple[int, ...]
    degree_at_preimage: tuple[int, ...]


@dataclass(frozen=True)
class LiftClosure:
    """Behaviour of the lift of a closed base curve with the given winding."""

    closed: bool
    length_multiplier: int
    components: int


# winding numbers of a closed base curve against the branch cuts
WindingVector = Sequence[int]


def check(d: int, indices: Sequence[int]) -> list[str]:
    """All violated validity conditions (empty when the data is accepted)."""
    problems = []
    if d <= 1:
        problems.append(f"degree must be at least 2, got {d}")
    n = len(indices)
    if n < 3:
        problems.append(f"need at least 3 punctures, got {n}")
    if problems:
        return problems
    bad = [x for x in indices if not 1 <= x <= d - 1]
    if bad:
        problems.append(
            f"indices must lie in 1..{d - 1}, got {', '.join(map(str, bad))}"
        )
    total = sum(indices)
    if total % d != 0:
        problems.append(f"sum {total} not divisible by {d}")
    components = reduce(gcd, indices, d)
    if components != 1:
        problems.append(
            f"gcd {components} != 1: cover disconnects into {components} components"
        )
    return problems


def validate(d: int, indices: Sequence[int]) -> BranchingData:
    """BranchingData for (d, indices), raising InvalidCoverError with the
    violation list otherwise."""
    return BranchingData(d, tuple(indices))


def genus(b: BranchingData) -> CoverSummary:
    """Genus and branching profile from the Riemann-Hurwitz count:
    genus = d(n-2)/2 + 1 - (1/2) sum gcd(d, d_i)."""
    d = b.degree
    counts = b.preimage_counts
    doubled = d * (b.num_punctures - 2) + 2 - sum(counts)
    assert doubled % 2 == 0 and doubled >= 0
    return CoverSummary(
        genus=doubled // 2,
        preimage_counts=counts,
        degree_at_preimage=tuple(d // c for c in counts),
    )


def genus_oracle(b: BranchingData) -> int:
    """Genus from an explicit cell complex of the glued sheets.

    Faces: the d sheets.  Edges: the d lifts of each branch cut.  Vertices:
    the d lifts of the base point plus, above each puncture, one vertex per
    orbit of the sheet permutation j -> j + d_i (mod d).  Orbits are counted
    by walking the permutation, deliberately not via gcd, so this is
    independent of `genus`.
    """
    d = b.degree
    n = b.num_punctures
    faces = d
    edges = d * n
    vertices = d
    for di in b.indices:
        seen = bytearray(d)
        for start in range(d):
            if seen[start]:
                continue
            vertices += 1
            j = start
            while not seen[j]:
                seen[j] = 1
                j = (j + di) % d
    euler = vertices - edges + faces
    assert euler % 2 == 0
    return (2 - euler) // 2


def degree_bounds(g: int, n: int) -> tuple[int, int]:
    """Inclusive bounds on the degree of a cover of genus g with n punctures.

    The upper bounds are 84(g-1) for n = 3, 12(g-1) for n = 4 and
    4(g-1)/(n-4) for n >= 5.  The lower bound 2g/(n-2) + 1 is forced for
    every n by the genus formula with all preimage counts at least 1.
    """
    if g < 2:
        raise ValueError(f"degree bounds require genus >= 2, got {g}")
    if n < 3:
        raise ValueError(f"need at least 3 punctures, got {n}")
    lower = ceil(2 * g / (n - 2)) + 1
    if n == 3:
        upper = 84 * (g - 1)
    elif n == 4:
        upper = 12 * (g - 1)
    else:
        upper = (4 * (g - 1)) // (n - 4)
    return lower, upper


def _units(d: int) -> list[int]:
    return [a for a in range(1, d) if gcd(a, d) == 1]


def _dihedral_min(d: int, indices: tuple[int, ...]) -> tuple[int, ...]:
    n = len(indices)
    best: Optional[tuple[int, ...]] = None
    for a in _units(d):
        t = tuple((a * x) % d for x in indices)
        for k in range(n):
            rot = t[k:] + t[:k]
            if best is None or rot < best:
                best = rot
    assert best is not None
    return best


def normalize(b: BranchingData) -> BranchingData:
    """Canonical representative under unit multiplication, rotation and
    reversal of the branch-cut cyclic order.  Idempotent; two covers with the
    same cut order up to these moves normalize identically."""
    fwd = _dihedral_min(b.degree, b.indices)
    rev = _dihedral_min(b.degree, tuple(reversed(b.indices)))
    return BranchingData(b.degree, min(fwd, rev))


def canonical_class_key(b: BranchingData) -> tuple[int, ...]:
    """Canonical multiset of indices modulo units: the class invariant of the
    cover up to isomorphism (puncture labels carry no cyclic-order data)."""
    d = b.degree
    return min(
        tuple(sorted((a * x) % d for x in b.indices)) for a in _units(d)
    )


def _sorted_index_tuples(d: int, n: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing n-tuples over 1..d-1 with sum divisible by d."""

    def rec(prefix: tuple[int, ...], lo: int, remaining: int) -> Iterator:
        if remaining == 1:
            first = sum(prefix) + lo
            x = lo + (-first) % d
            while x <= d - 1:
                yield prefix + (x,)
                x += d
            return
        for v in range(lo, d):
            yield from rec(prefix + (v,), v, remaining - 1)

    yield from rec((), 1, n)


def enumerate_covers(
    max_genus: int,
    n: Optional[int] = None,
    min_genus: int = 2,
) -> list[tuple[BranchingData, int]]:
    """All covers with min_genus <= genus <= max_genus, one per isomorphism
    class, in normal form, sorted by (genus, n, d, indices).

    With n omitted, every puncture count from 3 to 2*max_genus + 2 is swept
    (the top value is attained by degree-2 covers with all indices 1).
    """
    if max_genus < 2:
        raise ValueError(f"max_genus must be at least 2, got {max_genus}")
    if not 2 <= min_genus <= max_genus:
        raise ValueError(f"need 2 <= min_genus <= max_genus, got {min_genus}")
    if n is not None and n < 3:
        raise ValueError(f"need at least 3 punctures, got {n}")
    return [
        (b, g)
        for b, g in _enumerate_all(max_genus)
        if g >= min_genus and (n is None or b.num_punctures == n)
    ]


@lru_cache(maxsize=8)
def _enumerate_all(max_genus: int) -> tuple[tuple[BranchingData, int], ...]:
    min_genus = 2
    puncture_counts = list(range(3, 2 * max_genus + 3))
    found: dict[tuple[int, int, tuple[int, ...]], tuple[BranchingData, int]] = {}
    for count in puncture_counts:
        d_lo, _ = degree_bounds(min_genus, count)
        _, d_hi = degree_bounds(max_genus, count)
        for d in range(max(d_lo, 2), d_hi + 1):
            for indices in _sorted_index_tuples(d, count):
                if reduce(gcd, indices, d) != 1:
                    continue
                cover = BranchingData(d, indices)
                g = genus(cover).genus
                if not min_genus <= g <= max_genus:
                    continue
                key = (count, d, canonical_class_key(cover))
                rep = normalize(cover)
                if key in found:
                    # one representative per class; seeds of the same class
                    # must agree
                    assert found[key][0] == rep, (key, found[key][0], rep)
                else:
                    found[key] = (rep, g)
    return tuple(
        sorted(
            found.values(),
            key=lambda item: (
                item[1],
                item[0].num_punctures,
                item[0].degree,
                item[0].indices,
            ),
        )
    )


def lift_closure(b: BranchingData, winding: WindingVector) -> LiftClosure:
    """Lift behaviour of a closed base curve meeting cut i with intersection
    number winding[i]: the lift closes iff sum(winding[i] * d_i) = 0 mod d;
    otherwise it closes after d/gcd(d, s) traversals, in d/that many
    components."""
    if len(winding) != b.num_punctures:
        raise ValueError(
            f"winding vector has {len(winding)} entries for {b.num_punctures} cuts"
        )
    d = b.degree
    s = sum(c * di for c, di in zip(winding, b.indices)) % d
    if s == 0:
        return LiftClosure(closed=True, length_multiplier=1, components=d)
    mult = d // gcd(d, s)
    return LiftClosure(closed=False, length_multiplier=mult, components=d // mult)
