"""Lifts of branch-cut-compatible sphere maps to the covers.

A base map phi sending punctures to punctures and cuts to cuts lifts to the
covers exactly when some mu satisfies d'_phi(i) = mu * d_i (mod d') for every
i; the lift then acts on sheets by j -> mu*j + nu (mod d') for some nu.  The
order of a lift and its action on the labeled puncture preimages are read off
from this affine sheet map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from .covers import BranchingData


@dataclass(frozen=True)
class IndexMap:
    """A map on puncture indices induced by a cut-preserving sphere map.

    `images` is 0-based: puncture i of the source maps to puncture images[i]
    of the target.  A self-map must respect the cyclic cut order around the
    base point, so it is required to be a rotation or a reflection.
    """

    source: BranchingData
    target: BranchingData
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        n = self.source.num_punctures
        n_target = self.target.num_punctures
        if len(self.images) != n:
            raise ValueError(f"expected {n} image indices, got {len(self.images)}")
        if any(not 0 <= i < n_target for i in self.images):
            raise ValueError(f"image indices out of range 0..{n_target - 1}")
        if self.source == self.target and not self._is_dihedral():
            raise ValueError(
                f"self-map {self.images} is not a rotation or reflection "
                "of the cyclic cut order"
            )

    def _is_dihedral(self) -> bool:
        n = len(self.images)
        rotations = {tuple((i + k) % n for i in range(n)) for k in range(n)}
        reflections = {tuple((k - i) % n for i in range(n)) for k in range(n)}
        return self.images in rotations or self.images in reflections

    @property
    def perm_order(self) -> int:
        """Order of the index permutation (self-maps only)."""
        if self.source != self.target:
            raise ValueError("permutation order needs source = target")
        order = 1
        current = self.images
        identity = tuple(range(len(self.images)))
        while current != identity:
            current = tuple(self.images[i] for i in current)
            order += 1
        return order


@dataclass(frozen=True)
class AffineLift:
    """Sheet map j -> mu*j + nu (mod modulus)."""

    mu: int
    nu: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "mu", self.mu % self.modulus)
        object.__setattr__(self, "nu", self.nu % self.modulus)

    def __call__(self, j: int) -> int:
        return (self.mu * j + self.nu) % self.modulus


@dataclass(frozen=True)
class LabelAction:
    """Action of a lift on labeled preimage points (i, s)."""

    mapping: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    fixed: tuple[tuple[int, int], ...]
    swapped: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def as_dict(self) -> dict[tuple[int, int], tuple[int, int]]:
        return dict(self.mapping)


def compatible_mus(m: IndexMap) -> list[int]:
    """All mu in 0..d'-1 with d'_phi(i) = mu * d_i (mod d') for every i."""
    d_target = m.target.degree
    out = []
    for mu in range(d_target):
        if all(
            (m.target.indices[m.images[i]] - mu * di) % d_target == 0
            for i, di in enumerate(m.source.indices)
        ):
            out.append(mu)
    return out


def affine_order(lift: AffineLift) -> int:
    """Order of j -> mu*j + nu in the affine group mod d': the least t with
    mu^t = 1 and nu * (mu^(t-1) + ... + 1) = 0."""
    d = lift.modulus
    if gcd(lift.mu, d) != 1:
        raise ValueError("not invertible; not a deck-compatible lift")
    t = 0
    power, geometric = 1, 0
    while True:
        t += 1
        geometric = (geometric + power) % d
        power = (power * lift.mu) % d
        if power == 1 and (lift.nu * geometric) % d == 0:
            return t


def lift_order(m: IndexMap, lift: AffineLift) -> int:
    """Order of the combined lift (phi on punctures, affine map on sheets):
    the least t with phi^t = id whose t-fold affine composite is trivial."""
    if lift.mu not in compatible_mus(m):
        raise ValueError(
            f"mu = {lift.mu} violates the lift compatibility congruence"
        )
    d = lift.modulus
    if gcd(lift.mu, d) != 1:
        raise ValueError("not invertible; not a deck-compatible lift")
    period = m.perm_order
    # t-fold composite is j -> mu^t j + nu*(mu^(t-1) + ... + 1)
    t = 0
    power, geometric = 1, 0
    while True:
        t += 1
        geometric = (geometric + power) % d
        power = (power * lift.mu) % d
        if t % period == 0 and power == 1 and (lift.nu * geometric) % d == 0:
            return t


def preimage_action(m: IndexMap, lift: AffineLift) -> LabelAction:
    """Action on labels: (i, s) -> (phi(i), mu*s + nu mod gcd(d', d'_phi(i))).

    The label of a preimage of puncture i is its sheet residue mod
    gcd(d, d_i), so the affine sheet map descends to the labels.  Fixed
    points and 2-cycles are reported alongside the full mapping.
    """
    if m.source != m.target:
        raise ValueError("preimage action is defined for self-maps")
    d = m.target.degree
    mapping = {}
    for i, di in enumerate(m.source.indices):
        target_index = m.images[i]
        target_count = gcd(d, m.target.indices[target_index])
        for s in range(gcd(d, di)):
            mapping[(i, s)] = (target_index, (lift.mu * s + lift.nu) % target_count)
    items = tuple(sorted(mapping.items()))
    fixed = tuple(p for p, q in items if p == q)
    swapped = tuple(
        (p, q) for p, q in items if p < q and mapping.get(q) == p
    )
    return LabelAction(mapping=items, fixed=fixed, swapped=swapped)


@dataclass(frozen=True)
class LiftFamily:
    """All (mu, nu) pairs sharing one label action, with their orders."""

    mu: int
    nus: tuple[int, ...]
    action: LabelAction
    orders: tuple[int, ...] = field(default=())


def enumerate_lifts(m: IndexMap) -> list[LiftFamily]:
    """Every lift (mu, nu) of the index map, grouped by label action.

    Distinct sheet maps can act identically on the finitely many labeled
    preimages; families collect them so the geometric fixed-point data is
    reported once per action.
    """
    d = m.target.degree
    families: dict = {}
    for mu in compatible_mus(m):
        if gcd(mu, d) != 1:
            continue  # non-invertible sheet maps are not homeomorphism lifts
        for nu in range(d):
            lift = AffineLift(mu=mu, nu=nu, modulus=d)
            action = preimage_action(m, lift)
            key = (mu, action.mapping)
            order = lift_order(m, lift)
            if key in families:
                family = families[key]
                families[key] = LiftFamily(
                    mu=mu,
                    nus=family.nus + (nu,),
                    action=action,
                    orders=family.orders + (order,),
                )
            else:
                families[key] = LiftFamily(
                    mu=mu, nus=(nu,), action=action, orders=(order,)
                )
    return [families[k] for k in sorted(families)]
