"""Symmetric quotient-graph parameters and the catalog of regular triply
periodic polyhedral surfaces.

A triply periodic polyhedron deformation-retracts to a periodic skeletal
graph; the compact quotient graph with v vertices of degree d has genus
g = e - v + 1 with e = v*d/2, so v(d - 2) = 2g - 2 pins down the finitely
many parameter pairs per genus.  The catalog lists the known regular
decorations of these graphs together with their identifications as
cyclically branched covers, where such an identification is known.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .covers import BranchingData, genus as cover_genus


@dataclass(frozen=True)
class GraphParams:
    """Parameters of a symmetric quotient graph: v vertices of degree d."""

    genus: int
    vertices: int
    degree: int
    edges: int

    def __post_init__(self):
        assert self.edges == self.vertices * self.degree // 2
        assert self.edges - self.vertices + 1 == self.genus


@dataclass(frozen=True)
class CatalogCover:
    cover: BranchingData
    note: str


@dataclass(frozen=True)
class CatalogEntry:
    """A named polyhedral surface (or abstract comparison surface).

    `schlafli` is (p, q, r): p-gon tiles, q per vertex, adjacent solids
    meeting in regular r-gons; r (or the whole symbol) may be unknown.  When
    the sources disagree on the symbol, `schlafli_variants` records every
    printed variant and `schlafli_ambiguous` is set; `schlafli` then holds
    the variant consistent with the genus count.
    """

    name: str
    schlafli: Optional[tuple[int, int, Optional[int]]]
    fundamental_faces: Optional[int]
    covers: tuple[CatalogCover, ...]
    decoration: str
    source_note: str
    schlafli_variants: tuple[tuple[int, int, Optional[int]], ...] = ()
    schlafli_ambiguous: bool = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "schlafli": list(self.schlafli) if self.schlafli else None,
            "schlafli_variants": [list(v) for v in self.schlafli_variants],
            "schlafli_ambiguous": self.schlafli_ambiguous,
            "fundamental_faces": self.fundamental_faces,
            "covers": [
                {
                    "degree": c.cover.degree,
                    "indices": list(c.cover.indices),
                    "note": c.note,
                }
                for c in self.covers
            ],
            "decoration": self.decoration,
            "source_note": self.source_note,
        }


def quotient_graph_params(g: int) -> list[GraphParams]:
    """All symmetric quotient-graph parameter pairs (v, d) of genus g >= 2,
    one per divisor v of 2g - 2, sorted by v.  v = 1 gives the bouquet of g
    loops with d = 2g."""
    if g < 2:
        raise ValueError(f"graph parameters need genus >= 2, got {g}")
    out = []
    target = 2 * g - 2
    for v in range(1, target + 1):
        if target % v == 0:
            d = target // v + 2
            out.append(GraphParams(genus=g, vertices=v, degree=d, edges=v * d // 2))
    return out


def tiling_genus(p: int, q: int, faces: int) -> int:
    """Genus of a closed surface tiled by `faces` regular p-gons, q per
    vertex, from the Euler count V - E + F."""
    if p < 3 or q < 3 or faces < 1:
        raise ValueError(f"need p, q >= 3 and faces >= 1, got ({p}, {q}, {faces})")
    total_sides = p * faces
    if total_sides % 2 or total_sides % q:
        raise ValueError(
            f"counts incompatible with a closed regular tiling: "
            f"{faces} {p}-gons at valency {q}"
        )
    vertices = total_sides // q
    edges = total_sides // 2
    euler = vertices - edges + faces
    if euler % 2 or euler > 2:
        raise ValueError(
            f"counts incompatible with a closed regular tiling: euler {euler}"
        )
    return (2 - euler) // 2


def _entry(*args, **kwargs) -> CatalogEntry:
    return CatalogEntry(*args, **kwargs)


@lru_cache(maxsize=1)
def catalog() -> tuple[CatalogEntry, ...]:
    """The fixed catalog, cross-checked at load time: for every entry with
    both tiling data and identified covers, the tiling genus must equal the
    genus of each cover."""
    entries = (
        _entry(
            name="Octa-4",
            schlafli=(3, 8, 3),
            fundamental_faces=32,
            covers=(
                CatalogCover(BranchingData(8, (1, 2, 5)), "eightfold, order-8 vertex rotation"),
            ),
            decoration=(
                "two octahedra and four triangular anti-prisms on the genus-3 "
                "graph with v=2, d=4"
            ),
            source_note=(
                "regular triangle surface, eight per vertex, without the "
                "zig-zag symmetry of the Coxeter-Petrie polyhedra"
            ),
        ),
        _entry(
            name="Mucube",
            schlafli=(4, 6, 4),
            fundamental_faces=12,
            covers=(
                CatalogCover(BranchingData(6, (1, 3, 5, 3)), "sixfold, order-6 rotation"),
                CatalogCover(BranchingData(4, (1, 1, 3, 3)), "fourfold, order-4 rotation"),
            ),
            decoration=(
                "one cube and six square prisms on the genus-3 graph with "
                "v=1, d=6"
            ),
            source_note="Coxeter-Petrie infinite regular polyhedron {4,6|4}",
        ),
        _entry(
            name="Muoctahedron",
            schlafli=(6, 4, 4),
            fundamental_faces=8,
            covers=(
                CatalogCover(BranchingData(6, (1, 3, 5, 3)), "sixfold, order-6 rotation"),
                CatalogCover(BranchingData(4, (1, 1, 3, 3)), "fourfold, order-4 rotation"),
            ),
            decoration=(
                "truncated octahedra glued along square faces (empty edge "
                "solids) on the genus-3 graph with v=1, d=6"
            ),
            source_note="Coxeter-Petrie infinite regular polyhedron {6,4|4}",
        ),
        _entry(
            name="Mutetrahedron",
            schlafli=(6, 6, 3),
            schlafli_variants=((6, 6, 3), (6, 3, 3)),
            schlafli_ambiguous=True,
            fundamental_faces=4,
            covers=(
                CatalogCover(BranchingData(6, (1, 3, 5, 3)), "sixfold, order-6 rotation"),
                CatalogCover(BranchingData(4, (1, 1, 3, 3)), "fourfold, order-4 rotation"),
            ),
            decoration=(
                "tetrahedra and truncated tetrahedra glued along triangles "
                "(empty edge solids) on the genus-3 graph with v=2, d=4"
            ),
            source_note=(
                "Coxeter-Petrie infinite regular polyhedron; the symbol is "
                "printed both as {6,6|3} and {6,3|3}, and only q = 6 is "
                "consistent with a genus-3 quotient of four hexagons"
            ),
        ),
        _entry(
            name="Octa-8",
            schlafli=(3, 12, None),
            fundamental_faces=24,
            covers=(
                CatalogCover(BranchingData(12, (1, 4, 7)), "twelvefold, order-12 vertex rotation"),
            ),
            decoration=(
                "one octahedron and eight triangular anti-prisms on the "
                "genus-4 graph with v=1, d=8"
            ),
            source_note=(
                "genus-4 triangle surface, twelve per vertex; conformally the "
                "Schoen I-WP surface"
            ),
        ),
        _entry(
            name="Truncated Octa-8",
            schlafli=(4, 5, None),
            fundamental_faces=30,
            covers=(
                CatalogCover(BranchingData(5, (1, 2, 4, 3)), "fivefold, order-5 rotation"),
            ),
            decoration=(
                "one truncated octahedron and hexagonal prisms on the "
                "genus-4 graph with v=1, d=8"
            ),
            source_note=(
                "genus-4 square surface, five per vertex; conformally the "
                "dodecadodecahedron and Bring's curve (Weber)"
            ),
        ),
        _entry(
            name="Klein quartic",
            schlafli=None,
            fundamental_faces=None,
            covers=(
                CatalogCover(BranchingData(7, (1, 2, 4)), "sevenfold, classical description"),
            ),
            decoration="abstract comparison surface, no polyhedral realization here",
            source_note="Klein's quartic as a sevenfold cyclic cover",
        ),
        _entry(
            name="Ico-4",
            schlafli=None,
            fundamental_faces=None,
            covers=(),
            decoration=(
                "two icosahedra and four triangular anti-prisms on the "
                "genus-3 graph with v=2, d=4"
            ),
            source_note="cover not identified",
        ),
        _entry(
            name="Tetra-4",
            schlafli=None,
            fundamental_faces=None,
            covers=(),
            decoration=(
                "two tetrahedra and triangular anti-prisms on the genus-3 "
                "graph with v=2, d=4"
            ),
            source_note="cover not identified",
        ),
        _entry(
            name="Cube-4",
            schlafli=None,
            fundamental_faces=None,
            covers=(),
            decoration=(
                "two cubes and four square prisms on the genus-3 graph with "
                "v=2, d=4"
            ),
            source_note="cover not identified",
        ),
        _entry(
            name="Three-cube surface",
            schlafli=None,
            fundamental_faces=None,
            covers=(),
            decoration=(
                "three cubes and four square prisms on the genus-4 graph "
                "with v=3, d=4"
            ),
            source_note="cover not identified",
        ),
        _entry(
            name="Three-octahedron surface",
            schlafli=None,
            fundamental_faces=None,
            covers=(),
            decoration=(
                "three octahedra and four triangular anti-prisms on the "
                "genus-4 graph with v=3, d=4"
            ),
            source_note="cover not identified",
        ),
        _entry(
            name="Ico-8",
            schlafli=None,
            fundamental_faces=None,
            covers=(),
            decoration=(
                "one icosahedron and eight triangular anti-prisms on the "
                "genus-4 graph with v=1, d=8"
            ),
            source_note="cover not identified",
        ),
    )
    for entry in entries:
        _check_entry(entry)
    return entries


def _check_entry(entry: CatalogEntry) -> None:
    genera = {cover_genus(c.cover).genus for c in entry.covers}
    if len(genera) > 1:
        raise ValueError(f"{entry.name}: covers disagree on genus: {genera}")
    if entry.schlafli and entry.fundamental_faces:
        p, q, _ = entry.schlafli
        tg = tiling_genus(p, q, entry.fundamental_faces)
        if genera and tg not in genera:
            raise ValueError(
                f"{entry.name}: tiling genus {tg} != cover genus {genera}"
            )


def catalog_entry(name: str) -> CatalogEntry:
    for entry in catalog():
        if entry.name.lower() == name.lower():
            return entry
    raise KeyError(f"no catalog entry named {name!r}")


def catalog_json() -> str:
    """The catalog as a JSON array (schema: CatalogEntry.to_dict)."""
    return json.dumps([e.to_dict() for e in catalog()], indent=2, sort_keys=True)


def entry_from_dict(data: dict) -> CatalogEntry:
    """Inverse of CatalogEntry.to_dict; validates the embedded covers."""
    return CatalogEntry(
        name=data["name"],
        schlafli=tuple(data["schlafli"]) if data.get("schlafli") else None,
        schlafli_variants=tuple(
            tuple(v) for v in data.get("schlafli_variants", ())
        ),
        schlafli_ambiguous=bool(data.get("schlafli_ambiguous", False)),
        fundamental_faces=data.get("fundamental_faces"),
        covers=tuple(
            CatalogCover(
                BranchingData(c["degree"], tuple(c["indices"])), c.get("note", "")
            )
            for c in data.get("covers", ())
        ),
        decoration=data.get("decoration", ""),
        source_note=data.get("source_note", ""),
    )


def catalog_from_json(path: str) -> tuple[CatalogEntry, ...]:
    with open(path, encoding="utf-8") as fh:
        return tuple(entry_from_dict(item) for item in json.load(fh))
