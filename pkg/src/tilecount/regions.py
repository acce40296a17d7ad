"""Geometry of the tiled regions: hexagons, dented semi-hexagons, dented and
undented Aztec rectangles, and the defect surgery applied to them.

Triangle coordinates
--------------------
A hexagon with sides (a, b, c, d, e, f) at 120-degree angles is drawn with
side b horizontal at the top and e at the bottom, the remaining sides in
clockwise order (c upper right, d lower right, f lower left, a upper left).
Horizontal lattice lines are numbered y = 0 (top) through y = a + f
(bottom); the strip between lines y and y+1 is row y.  Because the slanted
boundaries advance half a unit per row, positions along a line are stored
doubled: a triangle is ``Triangle(row, x, up)`` where ``x`` is the doubled
horizontal position of the left end of its base.  An up triangle's base
lies on the line *below* its row, a down triangle's base on the line above,
so ``Triangle(r, x, True)`` and ``Triangle(r + 1, x, False)`` share a base
segment and together form a vertical lozenge.

For a (k, q, k) hexagon the q+k-long horizontal symmetry axis is line k,
and the vertical lozenges that can cross it sit at doubled positions
-k + 2*r for r = 0 .. q+k-1; ``r`` is the crossing index used by the
restricted counts.  Dents of a (k, q, k) semi-hexagon use the same
left-to-right indexing of the bottom side.

Square coordinates
------------------
Squares are unit lattice cells named by their lower-left corner ``(x, y)``;
u = x + y and v = y - x are the diagonal coordinates.  A dented a x b Aztec
rectangle consists of the squares with b-2a-1 <= u <= b-1 and -b <= v <=
b-1, with b of the a+1 squares on the diagonal v = b-1 removed; position p
on that diagonal is the square with u = b-2a-1+2p.  The undented a x b
rectangle comes in two congruent coordinate variants ("p10": -b <= v <= b,
and "sec3", its translate by one square down the diagonal); they carry
identical tilings.  The central square (when a+b is odd) is the square
whose center coincides with the center of the region; diagonals of length
a+1 run along constant v with v congruent to b-1 mod 2, so the diagonal
*through* the central square is v = 0 when b is odd and the diagonals
*touching* it are v = +-1 when b is even (the builder uses v = +1; the two
choices are mirror images).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Union

__all__ = [
    "Triangle",
    "Square",
    "HexagonSpec",
    "DentedSemiHexagon",
    "DentedAztecRectangle",
    "UndentedAztecRectangle",
    "DefectSpec",
    "CellRegion",
    "validate_hexagon",
    "build_hexagon_region",
    "build_semihexagon_region",
    "build_aztec_region",
    "complement_indices",
]


class Triangle(NamedTuple):
    row: int
    x: int
    up: bool


class Square(NamedTuple):
    x: int
    y: int


Cell = Union[Triangle, Square]
Edge = tuple[Cell, Cell]


def _cell_key(cell: Cell):
    if isinstance(cell, Triangle):
        return (cell.row, cell.x, cell.up)
    return (cell.y, cell.x)


@dataclass(frozen=True)
class HexagonSpec:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    @classmethod
    def kqk(cls, k: int, q: int) -> "HexagonSpec":
        """The (k, q, k) hexagon, i.e. sides (k, q, k, k, q, k)."""
        return cls(k, q, k, k, q, k)

    @property
    def sides(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def is_kqk(self) -> bool:
        return (self.a == self.c == self.d == self.f and self.b == self.e
                and self.a >= 1)


@dataclass(frozen=True)
class DentedSemiHexagon:
    """Upper (k, q, k) semi-hexagon with k up triangles removed from the
    bottom side; dent positions are 0-based, left to right, in [0, q+k)."""
    k: int
    q: int
    dents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dents", tuple(self.dents))
        if self.k < 1 or self.q < 0:
            raise ValueError("requires k >= 1 and q >= 0")
        if len(self.dents) != self.k:
            raise ValueError(f"expected exactly {self.k} dents, got {len(self.dents)}")
        if any(r2 <= r1 for r1, r2 in zip(self.dents, self.dents[1:])):
            raise ValueError("dents must be strictly increasing")
        if self.dents and (self.dents[0] < 0 or self.dents[-1] >= self.q + self.k):
            raise ValueError(f"dents must lie in [0, {self.q + self.k})")


@dataclass(frozen=True)
class DentedAztecRectangle:
    """a x b dented Aztec rectangle; exactly b dent positions (strictly
    increasing, in [0, a]) removed from the long diagonal."""
    a: int
    b: int
    dents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dents", tuple(self.dents))
        if self.a < 1 or self.b < 1:
            raise ValueError("requires a >= 1 and b >= 1")
        if len(self.dents) != self.b:
            raise ValueError(f"expected exactly {self.b} dents, got {len(self.dents)}")
        if any(r2 <= r1 for r1, r2 in zip(self.dents, self.dents[1:])):
            raise ValueError("dents must be strictly increasing")
        if self.dents and (self.dents[0] < 0 or self.dents[-1] > self.a):
            raise ValueError(f"dents must lie in [0, {self.a}]")


@dataclass(frozen=True)
class UndentedAztecRectangle:
    a: int
    b: int
    bounds_variant: str = "p10"  # "p10" | "sec3"; congruent regions

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("requires a >= 1 and b >= 1")
        if self.bounds_variant not in ("p10", "sec3"):
            raise ValueError("bounds_variant must be 'p10' or 'sec3'")


DEFECT_KINDS = (
    "none",
    "central-triangle-removed",
    "central-lozenge-forced",
    "crossing-set-restricted",
    "diagonal-squares-removed",
)


@dataclass(frozen=True)
class DefectSpec:
    kind: str = "none"
    crossing_set: frozenset[int] | None = None
    removed: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in DEFECT_KINDS:
            raise ValueError(f"unknown defect kind {self.kind!r}")
        if self.kind == "crossing-set-restricted":
            if self.crossing_set is None:
                raise ValueError("crossing-set-restricted requires a crossing set")
            object.__setattr__(self, "crossing_set", frozenset(self.crossing_set))
        elif self.crossing_set is not None:
            raise ValueError(f"defect {self.kind!r} takes no crossing set")
        if self.kind == "diagonal-squares-removed":
            removed = tuple(self.removed)
            object.__setattr__(self, "removed", removed)
            if any(r2 <= r1 for r1, r2 in zip(removed, removed[1:])):
                raise ValueError("removed indices must be strictly increasing")
        elif self.removed:
            raise ValueError(f"defect {self.kind!r} takes no removed indices")

    @classmethod
    def none(cls) -> "DefectSpec":
        return cls("none")

    @classmethod
    def central_triangle_removed(cls) -> "DefectSpec":
        return cls("central-triangle-removed")

    @classmethod
    def central_lozenge_forced(cls) -> "DefectSpec":
        return cls("central-lozenge-forced")

    @classmethod
    def crossing_restricted(cls, allowed: Iterable[int]) -> "DefectSpec":
        return cls("crossing-set-restricted", crossing_set=frozenset(allowed))

    @classmethod
    def diagonal_squares_removed(cls, removed: Iterable[int]) -> "DefectSpec":
        return cls("diagonal-squares-removed", removed=tuple(removed))


@dataclass(frozen=True)
class CellRegion:
    """An explicit cell region together with its admissible tile placements.

    ``edges`` lists the pairs of cells a single tile may cover (lozenges on
    triangle regions, dominoes on square regions).  ``crossing_axis``, when
    present, holds the vertical-lozenge slots along a (k, q, k) hexagon's
    symmetry axis, left to right.
    """
    kind: str  # "triangle" | "square"
    cells: tuple[Cell, ...]
    edges: tuple[Edge, ...]
    crossing_axis: tuple[Edge, ...] = ()

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @cached_property
    def neighbor_map(self) -> dict[Cell, tuple[Cell, ...]]:
        nbrs: dict[Cell, list[Cell]] = {c: [] for c in self.cells}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {c: tuple(sorted(ns, key=_cell_key)) for c, ns in nbrs.items()}

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def up_down_counts(self) -> tuple[int, int]:
        """(up, down) triangle counts, or the two color-class sizes of a
        square region (checkerboard by x+y parity)."""
        if self.kind == "triangle":
            ups = sum(1 for c in self.cells if c.up)
            return ups, len(self.cells) - ups
        evens = sum(1 for c in self.cells if (c.x + c.y) % 2 == 0)
        return evens, len(self.cells) - evens

    @property
    def is_balanced(self) -> bool:
        lo, hi = self.up_down_counts()
        return lo == hi

    def has_edge(self, u: Cell, v: Cell) -> bool:
        return (u, v) in self._edge_set or (v, u) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def without_cells(self, remove: Iterable[Cell]) -> "CellRegion":
        gone = set(remove)
        missing = gone - self.cell_set
        if missing:
            raise ValueError(f"cells not in region: {sorted(missing, key=_cell_key)}")
        cells = tuple(c for c in self.cells if c not in gone)
        edges = tuple(e for e in self.edges if e[0] not in gone and e[1] not in gone)
        axis = tuple(e for e in self.crossing_axis
                     if e[0] not in gone and e[1] not in gone)
        return CellRegion(self.kind, cells, edges, axis)

    def without_edges(self, remove: Iterable[Edge]) -> "CellRegion":
        gone = set()
        for u, v in remove:
            gone.add((u, v))
            gone.add((v, u))
        edges = tuple(e for e in self.edges if e not in gone)
        return CellRegion(self.kind, self.cells, edges, self.crossing_axis)

    def to_json_dict(self) -> dict:
        index = {c: i for i, c in enumerate(self.cells)}
        if self.kind == "triangle":
            cells = [{"row": c.row, "x": c.x, "orient": "up" if c.up else "down"}
                     for c in self.cells]
        else:
            cells = [{"x": c.x, "y": c.y} for c in self.cells]
        adjacency = sorted(sorted((index[u], index[v])) for u, v in self.edges)
        out = {"kind": self.kind, "cells": cells, "adjacency": adjacency}
        if self.crossing_axis:
            out["crossing_axis"] = [sorted((index[u], index[v]))
                                    for u, v in self.crossing_axis
                                    if u in index and v in index]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=True)

    def ascii_art(self) -> str:
        if not self.cells:
            return "(empty region)"
        if self.kind == "triangle":
            min_x = min(c.x for c in self.cells)
            max_x = max(c.x for c in self.cells)
            rows = sorted({c.row for c in self.cells})
            lines = []
            for r in range(rows[0], rows[-1] + 1):
                line = [" "] * (max_x - min_x + 1)
                for c in self.cells:
                    if c.row == r:
                        line[c.x - min_x] = "^" if c.up else "v"
                lines.append("".join(line).rstrip())
            return "\n".join(lines)
        min_x = min(c.x for c in self.cells)
        max_x = max(c.x for c in self.cells)
        min_y = min(c.y for c in self.cells)
        max_y = max(c.y for c in self.cells)
        lines = []
        for y in range(max_y, min_y - 1, -1):
            line = ["#" if Square(x, y) in self.cell_set else " "
                    for x in range(min_x, max_x + 1)]
            lines.append("".join(line).rstrip())
        return "\n".join(lines)


def _make_triangle_region(cells: Iterable[Triangle],
                          crossing_axis: tuple[Edge, ...] = ()) -> CellRegion:
    cell_set = set(cells)
    ordered = tuple(sorted(cell_set, key=_cell_key))
    edges = []
    for c in ordered:
        if not c.up:
            continue
        for other in (Triangle(c.row, c.x - 1, False),
                      Triangle(c.row, c.x + 1, False),
                      Triangle(c.row + 1, c.x, False)):
            if other in cell_set:
                edges.append((c, other))
    edges.sort(key=lambda e: (_cell_key(e[0]), _cell_key(e[1])))
    return CellRegion("triangle", ordered, tuple(edges), crossing_axis)


def _make_square_region(cells: Iterable[Square]) -> CellRegion:
    cell_set = set(cells)
    ordered = tuple(sorted(cell_set, key=_cell_key))
    edges = []
    for c in ordered:
        for other in (Square(c.x + 1, c.y), Square(c.x, c.y + 1)):
            if other in cell_set:
                edges.append((c, other))
    edges.sort(key=lambda e: (_cell_key(e[0]), _cell_key(e[1])))
    return CellRegion("square", ordered, tuple(edges))


def validate_hexagon(spec: HexagonSpec) -> list[str]:
    """Violation messages for the hexagon existence condition
    a - d = c - f = e - b with all sides nonnegative; empty when valid."""
    problems = []
    for name, value in zip("abcdef", spec.sides):
        if value < 0:
            problems.append(f"side {name} = {value} is negative")
    if spec.a - spec.d != spec.c - spec.f:
        problems.append(
            f"a - d = {spec.a - spec.d} differs from c - f = {spec.c - spec.f}")
    if spec.c - spec.f != spec.e - spec.b:
        problems.append(
            f"c - f = {spec.c - spec.f} differs from e - b = {spec.e - spec.b}")
    return problems


def _hexagon_line_bounds(spec: HexagonSpec, y: int) -> tuple[int, int]:
    """Doubled [left, right) endpoints of horizontal line y."""
    left = -(min(y, spec.a) - max(y - spec.a, 0))
    right = 2 * spec.b + (min(y, spec.c) - max(y - spec.c, 0))
    return left, right


def _hexagon_cells(spec: HexagonSpec) -> list[Triangle]:
    height = spec.a + spec.f
    cells = []
    for row in range(height):
        top_lo, top_hi = _hexagon_line_bounds(spec, row)
        bot_lo, bot_hi = _hexagon_line_bounds(spec, row + 1)
        cells.extend(Triangle(row, x, False) for x in range(top_lo, top_hi, 2))
        cells.extend(Triangle(row, x, True) for x in range(bot_lo, bot_hi, 2))
    return cells


def _kqk_crossing_axis(k: int, q: int) -> tuple[Edge, ...]:
    return tuple(
        (Triangle(k - 1, -k + 2 * r, True), Triangle(k, -k + 2 * r, False))
        for r in range(q + k))


def build_hexagon_region(spec: HexagonSpec,
                         defect: DefectSpec = DefectSpec.none()) -> CellRegion:
    problems = validate_hexagon(spec)
    if problems:
        raise ValueError("invalid hexagon: " + "; ".join(problems))

    axis = _kqk_crossing_axis(spec.a, spec.b) if spec.is_kqk() else ()
    region = _make_triangle_region(_hexagon_cells(spec), axis)

    if defect.kind == "none":
        return region

    if defect.kind == "central-triangle-removed":
        # Dividing-line geometry of the (k, 2n+1-k, k, k+1, 2n-k, k+1)
        # family: line a has odd length a+b and the removed triangle hangs
        # below its midpoint.
        if not (spec.a == spec.c and spec.d == spec.f == spec.a + 1):
            raise ValueError(
                "central-triangle-removed applies to (k,*,k,k+1,*,k+1) hexagons")
        if (spec.a + spec.b) % 2 == 0:
            raise ValueError("dividing line has even length; no central triangle")
        center = Triangle(spec.a, spec.b - 1, False)
        return region.without_cells([center])

    if defect.kind == "central-lozenge-forced":
        if not spec.is_kqk():
            raise ValueError("central-lozenge-forced applies to (k,q,k) hexagons")
        k, q = spec.a, spec.b
        if (q + k) % 2 == 0:
            raise ValueError("no central vertical lozenge when q+k is even")
        up, down = region.crossing_axis[(q + k - 1) // 2]
        return region.without_cells([up, down])

    if defect.kind == "crossing-set-restricted":
        if not spec.is_kqk():
            raise ValueError("crossing-set-restricted applies to (k,q,k) hexagons")
        k, q = spec.a, spec.b
        allowed = defect.crossing_set
        if any(r < 0 or r >= q + k for r in allowed):
            raise ValueError(f"crossing indices must lie in [0, {q + k})")
        banned = [edge for r, edge in enumerate(region.crossing_axis)
                  if r not in allowed]
        return region.without_edges(banned)

    raise ValueError(f"defect {defect.kind!r} is incompatible with a hexagon")


def build_semihexagon_region(spec: DentedSemiHexagon) -> CellRegion:
    """Upper (k, q, k) semi-hexagon (a (k, q, k, 0, q+k, 0) hexagon) with
    the up triangles at the dent positions removed from the bottom side."""
    base = HexagonSpec(spec.k, spec.q, spec.k, 0, spec.q + spec.k, 0)
    region = _make_triangle_region(_hexagon_cells(base))
    dented = [Triangle(spec.k - 1, -spec.k + 2 * r, True) for r in spec.dents]
    return region.without_cells(dented)


def _aztec_box_cells(u_lo: int, u_hi: int, v_lo: int, v_hi: int) -> list[Square]:
    cells = []
    for v in range(v_lo, v_hi + 1):
        u_start = u_lo if (u_lo - v) % 2 == 0 else u_lo + 1
        for u in range(u_start, u_hi + 1, 2):
            cells.append(Square((u - v) // 2, (u + v) // 2))
    return cells


def build_aztec_region(spec: DentedAztecRectangle | UndentedAztecRectangle,
                       defect: DefectSpec = DefectSpec.none()) -> CellRegion:
    if isinstance(spec, DentedAztecRectangle):
        if defect.kind != "none":
            raise ValueError("defects apply to undented Aztec rectangles only")
        a, b = spec.a, spec.b
        cells = set(_aztec_box_cells(b - 2 * a - 1, b - 1, -b, b - 1))
        for p in spec.dents:
            u = b - 2 * a - 1 + 2 * p
            cells.remove(Square((u - (b - 1)) // 2, (u + (b - 1)) // 2))
        return _make_square_region(cells)

    a, b = spec.a, spec.b
    cells = set(_aztec_box_cells(b - 2 * a - 1, b - 1, -b, b))

    if defect.kind == "diagonal-squares-removed":
        diag_v = 0 if b % 2 == 1 else 1
        removed = defect.removed
        if removed and (removed[0] < 0 or removed[-1] > a):
            raise ValueError(f"removed indices must lie in [0, {a}]")
        for p in removed:
            u = b - 2 * a - 1 + 2 * p
            target = Square((u - diag_v) // 2, (u + diag_v) // 2)
            cells.remove(target)
    elif defect.kind != "none":
        raise ValueError(f"defect {defect.kind!r} is incompatible with an "
                         "Aztec rectangle")

    if spec.bounds_variant == "sec3":
        cells = {Square(c.x + 1, c.y) for c in cells}
    return _make_square_region(cells)


def complement_indices(a: int, removed: Iterable[int]) -> tuple[int, ...]:
    """Sorted complement of ``removed`` within {0, 1, ..., a}."""
    removed = tuple(removed)
    seen = set()
    for r in removed:
        if r < 0 or r > a:
            raise ValueError(f"index {r} outside [0, {a}]")
        if r in seen:
            raise ValueError(f"duplicate index {r}")
        seen.add(r)
    return tuple(i for i in range(a + 1) if i not in seen)
