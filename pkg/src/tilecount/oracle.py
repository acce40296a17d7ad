"""Brute-force perfect-matching counter over cell regions.

This is the ground-truth engine: every closed form and determinant count in
the package is checked against it, so the algorithm favors transparent
correctness.  It always branches on the first uncovered cell in the
region's fixed row-major order and memoizes on the covered-cell bitmask;
for the planar regions built here the reachable masks stay within a narrow
frontier, so memoization keeps desk-scale instances fast without changing
the counted value.  Counts are exact integers and independent of any
execution schedule.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable

from .regions import CellRegion, Edge

__all__ = [
    "MatchingConstraint",
    "OracleBudgetExceeded",
    "EnumerationLimitExceeded",
    "count_matchings",
    "count_matchings_constrained",
    "enumerate_matchings",
    "DEFAULT_NODE_BUDGET",
    "BUDGET_ENV_VAR",
]

BUDGET_ENV_VAR = "TILECOUNT_ORACLE_BUDGET"
DEFAULT_NODE_BUDGET = 5_000_000


class OracleBudgetExceeded(RuntimeError):
    """Raised when the matching search exceeds its node budget."""


class EnumerationLimitExceeded(RuntimeError):
    """Raised when enumerate_matchings finds more matchings than allowed."""


@dataclass(frozen=True)
class MatchingConstraint:
    """Restriction on which matchings are counted.

    kind "cell-pair-forced" requires the given tile to be used (a tile not
    in the adjacency yields count 0); kind "crossing-subset" allows
    vertical lozenges on the region's crossing axis only at the listed
    indices.
    """
    kind: str = "none"
    tile: Edge | None = None
    allowed: frozenset[int] | None = None

    def __post_init__(self):
        if self.kind not in ("none", "cell-pair-forced", "crossing-subset"):
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "cell-pair-forced" and self.tile is None:
            raise ValueError("cell-pair-forced requires a tile")
        if self.kind == "crossing-subset":
            if self.allowed is None:
                raise ValueError("crossing-subset requires an index set")
            object.__setattr__(self, "allowed", frozenset(self.allowed))

    @classmethod
    def none(cls) -> "MatchingConstraint":
        return cls("none")

    @classmethod
    def forced_tile(cls, tile: Edge) -> "MatchingConstraint":
        return cls("cell-pair-forced", tile=tile)

    @classmethod
    def crossing_subset(cls, allowed: Iterable[int]) -> "MatchingConstraint":
        return cls("crossing-subset", allowed=frozenset(allowed))


def node_budget_from_env(default: int = DEFAULT_NODE_BUDGET) -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive")
    return value


def _prepare(region: CellRegion):
    cells = region.cells
    index = {c: i for i, c in enumerate(cells)}
    nbr_masks = [0] * len(cells)
    for u, v in region.edges:
        iu, iv = index[u], index[v]
        nbr_masks[iu] |= 1 << iv
        nbr_masks[iv] |= 1 << iu
    return cells, nbr_masks


def count_matchings(region: CellRegion, node_budget: int | None = None) -> int:
    """Exact number of perfect matchings of the region's adjacency graph.

    The empty region counts 1 (the empty matching); unbalanced regions
    count 0 naturally.
    """
    cells, nbr_masks = _prepare(region)
    n = len(cells)
    if n % 2 == 1:
        return 0
    if n == 0:
        return 1
    budget = node_budget if node_budget is not None else node_budget_from_env()
    full = (1 << n) - 1
    memo: dict[int, int] = {}
    nodes = 0

    def search(mask: int) -> int:
        nonlocal nodes
        if mask == full:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        nodes += 1
        if nodes > budget:
            raise OracleBudgetExceeded(
                f"matching search exceeded node budget {budget}")
        i = ((~mask) & (mask + 1)).bit_length() - 1  # lowest uncovered cell
        total = 0
        free = nbr_masks[i] & ~mask
        base = mask | (1 << i)
        while free:
            low = free & -free
            total += search(base | low)
            free ^= low
        memo[mask] = total
        return total

    return search(0)


def _apply_constraints(region: CellRegion,
                       constraints: Iterable[MatchingConstraint]) -> CellRegion | None:
    """Region surgery for the constraints; None means the count is 0."""
    current = region
    forced: list[Edge] = []
    for constraint in constraints:
        if constraint.kind == "none":
            continue
        if constraint.kind == "crossing-subset":
            if not region.crossing_axis:
                raise ValueError("region has no crossing axis")
            banned = [edge for r, edge in enumerate(region.crossing_axis)
                      if r not in constraint.allowed]
            current = current.without_edges(banned)
        else:
            forced.append(constraint.tile)
    # Forcing a tile deletes its two cells; a forced tile that is no longer
    # (or never was) in the adjacency admits no matching at all.
    for tile in forced:
        u, v = tile
        if not current.has_edge(u, v):
            return None
        current = current.without_cells([u, v])
    return current


def count_matchings_constrained(
        region: CellRegion,
        constraints: MatchingConstraint | Iterable[MatchingConstraint],
        node_budget: int | None = None) -> int:
    """Count only the matchings satisfying every constraint."""
    if isinstance(constraints, MatchingConstraint):
        constraints = [constraints]
    surgered = _apply_constraints(region, constraints)
    if surgered is None:
        return 0
    return count_matchings(surgered, node_budget)


def enumerate_matchings(region: CellRegion, limit: int = 10_000
                        ) -> list[tuple[Edge, ...]]:
    """All perfect matchings, each a tuple of tiles covering every cell.

    Guarded by ``limit``: raises EnumerationLimitExceeded as soon as more
    matchings than that are found.  Intended for test-scale regions only;
    counting never goes through here.
    """
    cells, nbr_masks = _prepare(region)
    n = len(cells)
    if n == 0:
        return [()]
    if n % 2 == 1:
        return []
    full = (1 << n) - 1
    out: list[tuple[Edge, ...]] = []
    chosen: list[Edge] = []

    def search(mask: int) -> None:
        if mask == full:
            if len(out) >= limit:
                raise EnumerationLimitExceeded(
                    f"more than {limit} matchings")
            out.append(tuple(chosen))
            return
        i = ((~mask) & (mask + 1)).bit_length() - 1
        free = nbr_masks[i] & ~mask
        base = mask | (1 << i)
        while free:
            low = free & -free
            j = low.bit_length() - 1
            chosen.append((cells[i], cells[j]))
            search(base | low)
            chosen.pop()
            free ^= low

    search(0)
    return out
