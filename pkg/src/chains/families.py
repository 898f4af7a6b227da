"""
Parameter enumeration and materialization of the parallel chain families
"""
import logging
from dataclasses import dataclass, asdict

import numpy as np

from .tables import (
    FAMILY_IDS, FAMILY_TABLES, TableVars, Step, Zigzag,
    ROWS_P, ROWS_P_DESCENDING, ROWS_QP
)
from ..lattice.core import invalid_rows, non_cover_steps, point_array, rank

logger = logging.getLogger(__name__)

# Families whose rows are indexed by (q, p) in L(2, k)
L2K_FAMILIES = ("C7", "C8", "C9")

# Points per chain, closed forms derived from the first and last table rows
_CHAIN_LENGTHS = {
    "C1": lambda n, v: 5*n - 3 - 4*v.i - 8*v.j - 13*v.k,
    "C2": lambda n, v: 5*n - 5 - 4*v.i - 8*v.j - 13*v.k,
    "C3": lambda n, v: 5*n + 1 - 12*v.i - 28*v.j - 18*v.k - 9*v.u,
    "C4": lambda n, v: 5*n - 15 - 12*v.i - 28*v.j - 18*v.k - 9*v.u,
    "C5": lambda n, v: 5*n - 13 - 12*v.i - 28*v.j - 18*v.k - 9*v.u,
    "C6": lambda n, v: 5*n - 29 - 12*v.i - 28*v.j - 18*v.k - 9*v.u,
    "C7": lambda n, v: 3 + 2*v.i + 3*v.u + 6*v.w,
    "C8": lambda n, v: 7 + 2*v.i - 3*v.u + 6*v.w,
    "C9": lambda n, v: 1 + 3*v.u + 6*v.w,
}


class ConstructionError(RuntimeError):
    """A table expansion produced something that is not a saturated chain"""

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


@dataclass(frozen=True, order=True)
class FamilyParams:
    i: int = 0
    j: int = 0
    k: int = 0
    u: int = 0
    w: int = 0

    def as_dict(self):
        return asdict(self)


@dataclass(frozen=True, order=True)
class RowIndex:
    q: int = 0
    p: int = 0


@dataclass(frozen=True)
class FamilyInstance:
    """One parallel chain: family, fixed parameters, row and box height"""
    family: str
    params: FamilyParams
    row: RowIndex
    n: int

    def describe(self):
        p = self.params
        return (f"{self.family}(i={p.i},j={p.j},k={p.k},u={p.u},w={p.w};"
                f" q={self.row.q},p={self.row.p}; n={self.n})")


@dataclass(frozen=True)
class Chain:
    """Saturated chain of lattice points, lowest rank first"""
    points: tuple
    provenance: object = None

    def __len__(self):
        return len(self.points)

    @property
    def first(self):
        return self.points[0]

    @property
    def last(self):
        return self.points[-1]

    @property
    def min_rank(self):
        return rank(self.points[0])

    @property
    def max_rank(self):
        return rank(self.points[-1])


def get_table(family):
    """Look up a family table by identifier"""
    try:
        return FAMILY_TABLES[family]
    except KeyError:
        raise ValueError(f"Unknown family {family!r}, expected one of {', '.join(FAMILY_IDS)}")


def _table_vars(params, n, row=None):
    row = row or RowIndex()
    return TableVars(params.i, params.j, params.k, params.u, params.w, row.p, row.q, n)


def _axis(table, name, n):
    return range(n + 1) if name in table.free else (0,)


def _u_values(table, n):
    if table.row_layout == ROWS_QP:
        return (n % 2,)
    if "u" in table.free:
        return (0, 1)
    return (0,)


def _scan_family(table, n):
    """All parameter tuples satisfying one table's header condition"""
    us = _u_values(table, n)

    def lowest_cost(i=0, j=0, k=0, w=0):
        return min(table.cost(TableVars(i, j, k, u, w, 0, 0, n)) for u in us)

    found = []
    # Every cost is increasing in i, j, k and w, so a miss ends the axis
    for i in _axis(table, "i", n):
        if lowest_cost(i=i) > n:
            break
        for j in _axis(table, "j", n):
            if lowest_cost(i=i, j=j) > n:
                break
            for k in _axis(table, "k", n):
                if lowest_cost(i=i, j=j, k=k) > n:
                    break
                for u in us:
                    for w in _axis(table, "w", n):
                        v = TableVars(i, j, k, u, w, 0, 0, n)
                        if table.cost(v) > n:
                            break
                        if table.holds(v):
                            found.append(FamilyParams(i=i, j=j, k=k, u=u, w=w))
    return found


def enumerate_family_params(n, drop_families=()):
    """
    Every (family, params) pair whose table condition holds at n

    Args:
        n: Box height
        drop_families: Family identifiers to leave out

    Returns:
        List of (family id, FamilyParams), ordered by family then (i, j, k, u, w)
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    result = []
    for family in FAMILY_IDS:
        if family in drop_families:
            continue
        for params in _scan_family(FAMILY_TABLES[family], n):
            result.append((family, params))
    logger.debug("n=%d: %d family parameter tuples", n, len(result))
    return result


def row_bound(family, params):
    """Largest row index K (p for C1-C6, p and q for C7-C9)"""
    table = get_table(family)
    return table.row_bound(_table_vars(params, 0))


def chain_length(family, params, n):
    """Number of points of every chain of the family at these parameters"""
    get_table(family)
    return _CHAIN_LENGTHS[family](n, params)


def l2k_scd(k):
    """
    Symmetric chain decomposition of L(2, k) on pairs (q, p), 0 <= q <= p <= k

    Chain t runs (t,t), (t,t+1), ..., (t,k-t), (t+1,k-t), ..., (k-t,k-t).
    """
    chains = []
    for t in range(k // 2 + 1):
        chain = [(t, p) for p in range(t, k - t + 1)]
        chain.extend((q, k - t) for q in range(t + 1, k - t + 1))
        chains.append(chain)
    return chains


def family_rows(family, params):
    """
    Row groups of a family in ladder order

    Returns:
        List of (layer, [RowIndex, ...]); layer is the L(2, k) chain index t
        for C7-C9 and None otherwise
    """
    table = get_table(family)
    bound = row_bound(family, params)
    if table.row_layout == ROWS_QP:
        return [
            (t, [RowIndex(q=q, p=p) for q, p in chain])
            for t, chain in enumerate(l2k_scd(bound))
        ]
    ps = range(bound + 1)
    if table.row_layout == ROWS_P_DESCENDING:
        ps = reversed(ps)
    return [(None, [RowIndex(q=0, p=p) for p in ps])]


def family_row_count(family, params):
    """Number of parallel chains (rows) of a family at these parameters"""
    return sum(len(rows) for _, rows in family_rows(family, params))


def _row_in_bounds(table, row, bound):
    if table.row_layout == ROWS_QP:
        return 0 <= row.q <= row.p <= bound
    return row.q == 0 and 0 <= row.p <= bound


def check_expansion(points, instance):
    """
    Check an expanded chain in one pass over its point array

    Raises:
        ConstructionError: at the first point outside L(5, n) or the first
            step that is not a cover
    """
    coords = point_array(points)
    outside = np.flatnonzero(invalid_rows(coords, instance.n))
    if len(outside):
        raise ConstructionError(
            f"{instance.describe()}: expansion reached {points[outside[0]]}, "
            f"not a point of L(5,{instance.n})",
            instance
        )
    broken = np.flatnonzero(non_cover_steps(coords))
    if len(broken):
        s = broken[0]
        raise ConstructionError(
            f"{instance.describe()}: step {points[s]} -> {points[s + 1]} is not a cover",
            instance
        )


def _expand_step(current, target, coord, points, instance):
    for c, (a, b) in enumerate(zip(current, target)):
        if c != coord and a != b:
            raise ConstructionError(
                f"{instance.describe()}: anchor {tuple(target)} differs from "
                f"{tuple(current)} outside coordinate a{coord + 1}",
                instance
            )
    if target[coord] < current[coord]:
        raise ConstructionError(
            f"{instance.describe()}: a{coord + 1} would fall from {current[coord]} to {target[coord]}",
            instance
        )
    for value in range(current[coord] + 1, target[coord] + 1):
        current[coord] = value
        points.append(tuple(current))


def _expand_zigzag(current, target, move, points, instance):
    leader, follower = move.leader, move.follower
    for c, (a, b) in enumerate(zip(current, target)):
        if c not in (leader, follower) and a != b:
            raise ConstructionError(
                f"{instance.describe()}: zigzag anchor {tuple(target)} moves a{c + 1}",
                instance
            )
    lead_steps = target[leader] - current[leader]
    follow_steps = target[follower] - current[follower]
    # Leader goes first; with one extra step it also goes last
    if follow_steps < 0 or lead_steps not in (follow_steps, follow_steps + 1):
        raise ConstructionError(
            f"{instance.describe()}: unbalanced zigzag, a{leader + 1} +{lead_steps}, "
            f"a{follower + 1} +{follow_steps}",
            instance
        )
    for step in range(lead_steps + follow_steps):
        coord = leader if step % 2 == 0 else follower
        current[coord] += 1
        points.append(tuple(current))


def materialize_chain(instance):
    """
    Expand one table row range into its explicit saturated chain

    Args:
        instance: FamilyInstance whose parameters satisfy the family condition

    Returns:
        Chain with instance as provenance

    Raises:
        ValueError: when the parameters or row are outside the family
        ConstructionError: when an expansion step is not a covering step
    """
    table = get_table(instance.family)
    v = _table_vars(instance.params, instance.n, instance.row)
    if not table.holds(v):
        raise ValueError(f"{instance.describe()}: family condition does not hold")
    if not _row_in_bounds(table, instance.row, table.row_bound(v)):
        raise ValueError(f"{instance.describe()}: row index out of range")

    anchors = table.anchors
    if table.starts_late is not None and table.starts_late(v):
        anchors = tuple(anchor for anchor in anchors if not anchor.head)

    start = anchors[0].row(v)
    points = [tuple(start)]
    current = list(start)
    for anchor in anchors[1:]:
        target = anchor.row(v)
        if isinstance(anchor.move, Step):
            _expand_step(current, target, anchor.move.coord, points, instance)
        elif isinstance(anchor.move, Zigzag):
            _expand_zigzag(current, target, anchor.move, points, instance)
        else:
            raise ConstructionError(f"{instance.describe()}: anchor without a move", instance)

    check_expansion(points, instance)
    return Chain(points=tuple(points), provenance=instance)


def parallel_chains(n, drop_families=()):
    """All materialized chains of all families at n, before peeling"""
    chains = []
    for family, params in enumerate_family_params(n, drop_families):
        for _, rows in family_rows(family, params):
            for row in rows:
                chains.append(materialize_chain(FamilyInstance(family, params, row, n)))
    return chains
