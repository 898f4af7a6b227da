"""
Ladders of parallel chains and the perimeter peeling that turns them into symmetric chains

A ladder is the grid formed by one family's rows at fixed parameters: row r
column c sits at rank first_rank + r + c. Peeling removes the perimeter
as two symmetric chains (one through both extreme corners) and recurses on
the interior.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..chains.families import (
    Chain, ConstructionError, FamilyInstance,
    enumerate_family_params, family_rows, materialize_chain
)
from ..lattice.core import DIMENSION, covers, non_cover_steps, point_array, rank
from ..utils.helpers import parallel_map

logger = logging.getLogger(__name__)

ORIENTATION_AUTO = "auto"


class Orientation(str, Enum):
    # Corner chain runs down the left edge, then along the bottom row
    LEFT_BOTTOM = "left-bottom"
    # Corner chain runs along the top row, then down the right edge
    TOP_RIGHT = "top-right"

    @property
    def alternate(self):
        if self is Orientation.LEFT_BOTTOM:
            return Orientation.TOP_RIGHT
        return Orientation.LEFT_BOTTOM


CANONICAL_ORIENTATION = Orientation.LEFT_BOTTOM


class LadderError(ConstructionError):
    """The rows of a ladder do not form a rank-shifted rectangle"""


class PeelError(ConstructionError):
    """A peeled chain is not saturated and symmetric"""


@dataclass(frozen=True)
class LadderKey:
    family: str
    params: object
    n: int
    # Chain index t of the L(2, k) decomposition, C7-C9 only
    layer: object = None

    def describe(self):
        p = self.params
        text = f"{self.family}(i={p.i},j={p.j},k={p.k},u={p.u},w={p.w}) n={self.n}"
        if self.layer is not None:
            text += f" t={self.layer}"
        return text


@dataclass(frozen=True)
class Ladder:
    key: LadderKey
    rows: tuple

    @property
    def height(self):
        return len(self.rows)

    @property
    def width(self):
        return len(self.rows[0])

    @property
    def min_rank(self):
        return self.rows[0].min_rank

    @property
    def max_rank(self):
        return self.rows[-1].max_rank

    def points(self):
        for row in self.rows:
            yield from row.points


@dataclass(frozen=True)
class PeelTag:
    """Provenance of a symmetric chain"""
    ladder: LadderKey
    layer: int
    orientation: Orientation
    role: str


@dataclass(frozen=True)
class PeelOutcome:
    ladder: Ladder
    orientation: Orientation
    chains: tuple
    fallback: bool = False


def validate_ladder(ladder):
    """
    Check the rectangle invariants of a ladder

    Raises:
        LadderError: on unequal rows, wrong rank offsets, missing corner
            covers or a non-symmetric corner pair
    """
    key = ladder.key
    rows = ladder.rows
    if not rows:
        raise LadderError(f"{key.describe()}: ladder has no rows")
    width = len(rows[0])
    for r, (lower, upper) in enumerate(zip(rows, rows[1:])):
        if len(upper) != width:
            raise LadderError(f"{key.describe()}: row {r + 1} has {len(upper)} points, row 0 has {width}")
        if upper.min_rank != lower.min_rank + 1 or upper.max_rank != lower.max_rank + 1:
            raise LadderError(f"{key.describe()}: row {r + 1} is not offset by one rank from row {r}")
        if not covers(lower.first, upper.first) or not covers(lower.last, upper.last):
            raise LadderError(f"{key.describe()}: rows {r} and {r + 1} are not joined at their ends")
    if ladder.min_rank + ladder.max_rank != DIMENSION * key.n:
        raise LadderError(
            f"{key.describe()}: corner ranks {ladder.min_rank} + {ladder.max_rank} != {DIMENSION * key.n}"
        )


def family_ladders(family, params, n):
    """Ladders of one (family, params) pair, one per row group"""
    ladders = []
    for layer, rows in family_rows(family, params):
        chains = tuple(materialize_chain(FamilyInstance(family, params, row, n)) for row in rows)
        ladder = Ladder(key=LadderKey(family, params, n, layer), rows=chains)
        validate_ladder(ladder)
        ladders.append(ladder)
    return ladders


def assemble_ladders(n, drop_families=()):
    """
    Group all parallel chains at n into validated ladders

    Returns:
        List of Ladder in canonical order: family, params, then layer t
    """
    ladders = []
    for family, params in enumerate_family_params(n, drop_families):
        ladders.extend(family_ladders(family, params, n))
    logger.debug("n=%d: assembled %d ladders", n, len(ladders))
    return ladders


def _check_peeled(chain, ladder):
    points = chain.points
    broken = np.flatnonzero(non_cover_steps(point_array(points)))
    if len(broken):
        lo, hi = points[broken[0]], points[broken[0] + 1]
        raise PeelError(
            f"{ladder.key.describe()}: {chain.provenance.orientation.value} peel "
            f"step {lo} -> {hi} is not a cover"
        )
    if rank(points[0]) + rank(points[-1]) != DIMENSION * ladder.key.n:
        raise PeelError(
            f"{ladder.key.describe()}: peeled chain {points[0]} .. {points[-1]} is not symmetric"
        )


def peel(ladder, orientation):
    """
    Split a ladder into symmetric chains by removing perimeters recursively

    Layer tr keeps rows tr..K-tr and columns tr..L-1-tr. A layer with one
    row or one column left is emitted whole, so a ladder with R rows and
    L columns yields min(R, L) chains.

    Args:
        ladder: A validated Ladder
        orientation: Orientation (or its string value) of the corner chain

    Returns:
        List of Chain whose provenance is a PeelTag

    Raises:
        PeelError: when a peeled chain is not saturated or not symmetric
    """
    orientation = Orientation(orientation)
    grid = [row.points for row in ladder.rows]
    top, bottom = 0, len(grid) - 1
    left, right = 0, len(grid[0]) - 1
    layer = 0
    chains = []

    while top <= bottom and left <= right:
        if top == bottom:
            pieces = [("single", grid[top][left:right + 1])]
        elif left == right:
            pieces = [("single", [grid[r][left] for r in range(top, bottom + 1)])]
        elif orientation is Orientation.LEFT_BOTTOM:
            corner = [grid[r][left] for r in range(top, bottom + 1)]
            corner.extend(grid[bottom][left + 1:right + 1])
            other = list(grid[top][left + 1:right + 1])
            other.extend(grid[r][right] for r in range(top + 1, bottom))
            pieces = [("corner", corner), ("other", other)]
        else:
            corner = list(grid[top][left:right + 1])
            corner.extend(grid[r][right] for r in range(top + 1, bottom + 1))
            other = [grid[r][left] for r in range(top + 1, bottom + 1)]
            other.extend(grid[bottom][left + 1:right])
            pieces = [("corner", corner), ("other", other)]

        for role, points in pieces:
            chain = Chain(points=tuple(points), provenance=PeelTag(ladder.key, layer, orientation, role))
            _check_peeled(chain, ladder)
            chains.append(chain)

        top, bottom = top + 1, bottom - 1
        left, right = left + 1, right - 1
        layer += 1

    return chains


def peel_ladder(ladder, orientation=ORIENTATION_AUTO):
    """
    Peel with an orientation policy

    "auto" tries the canonical orientation and falls back to the alternate
    one; an explicit orientation is used alone.

    Raises:
        ConstructionError: when no permitted orientation peels the ladder
    """
    if orientation == ORIENTATION_AUTO:
        attempts = [CANONICAL_ORIENTATION, CANONICAL_ORIENTATION.alternate]
    else:
        attempts = [Orientation(orientation)]

    failures = []
    for attempt, candidate in enumerate(attempts):
        try:
            chains = peel(ladder, candidate)
        except PeelError as e:
            failures.append(str(e))
            if attempt + 1 < len(attempts):
                logger.warning("Peel fallback for %s: %s", ladder.key.describe(), e)
            continue
        return PeelOutcome(ladder=ladder, orientation=candidate, chains=tuple(chains), fallback=attempt > 0)

    raise ConstructionError(f"No orientation peels {ladder.key.describe()}: " + "; ".join(failures))


def _peel_family(task):
    """Worker: build and peel the ladders of one (family, params) pair"""
    family, params, n, orientation = task
    return [peel_ladder(ladder, orientation) for ladder in family_ladders(family, params, n)]


def scd_outcomes(n, orientation=ORIENTATION_AUTO, threads=1, drop_families=()):
    """
    Peel every ladder at n

    Work is split per (family, params) pair; results come back in canonical
    order whatever the worker count.

    Returns:
        List of PeelOutcome in canonical ladder order
    """
    tasks = [
        (family, params, n, orientation)
        for family, params in enumerate_family_params(n, drop_families)
    ]
    outcomes = []
    for family_outcomes in parallel_map(_peel_family, tasks, threads):
        outcomes.extend(family_outcomes)
    fallbacks = sum(1 for outcome in outcomes if outcome.fallback)
    logger.info("n=%d: %d ladders peeled, %d orientation fallbacks", n, len(outcomes), fallbacks)
    return outcomes


def scd(n, orientation=ORIENTATION_AUTO, threads=1, drop_families=()):
    """
    Symmetric chain decomposition of L(5, n)

    Returns:
        List of Chain with PeelTag provenance, in canonical ladder order
    """
    chains = []
    for outcome in scd_outcomes(n, orientation, threads, drop_families):
        chains.extend(outcome.chains)
    return chains
