"""
Elements, order relations and rank statistics of Young's lattice L(m, n)

Points are plain tuples of non-negative integers (a1, ..., am) with
0 <= a1 <= ... <= am <= n. The chain construction is fixed to m = 5,
the enumeration and the rank oracle work for any m.
"""
import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

import numpy as np

logger = logging.getLogger(__name__)

# Dimension of the lattice the chain families live in
DIMENSION = 5

# Packed keys: 12 bits per coordinate, a1 in the most significant slot
COORD_BITS = 12
COORD_MASK = (1 << COORD_BITS) - 1
MAX_PACKED_N = COORD_MASK

_SHIFTS = np.array(
    [COORD_BITS * (DIMENSION - 1 - c) for c in range(DIMENSION)], dtype=np.int64
)
_INT64_MAX = np.iinfo(np.int64).max


class RankOverflowError(OverflowError):
    """Raised when a rank count does not fit the int64 DP table"""


@dataclass(frozen=True)
class AmbientParams:
    """The box L(m, n): m parts, each at most n"""
    m: int = DIMENSION
    n: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")

    @property
    def max_rank(self):
        return self.m * self.n

    @property
    def size(self):
        """Number of elements, binomial(n + m, m)"""
        return comb(self.n + self.m, self.m)


@dataclass(frozen=True)
class RankProfile:
    """Number of elements of L(m, n) at each rank 0 .. m*n"""
    m: int
    n: int
    sizes: tuple

    @property
    def total(self):
        return sum(self.sizes)

    @property
    def middle_rank(self):
        return (self.m * self.n) // 2

    @property
    def max_size(self):
        return self.sizes[self.middle_rank]

    def is_palindromic(self):
        return self.sizes == self.sizes[::-1]

    def is_unimodal(self):
        """Non-decreasing up to the middle rank (palindromy gives the rest)"""
        head = self.sizes[:self.middle_rank + 1]
        return all(a <= b for a, b in zip(head, head[1:]))

    def chain_start_counts(self):
        """
        First differences sizes[r] - sizes[r-1] for r = 0 .. middle rank

        In any symmetric chain decomposition this is the number of chains
        whose lowest element has rank r.
        """
        previous = 0
        deltas = []
        for size in self.sizes[:self.middle_rank + 1]:
            deltas.append(size - previous)
            previous = size
        return deltas


def rank(point):
    """Sum of the coordinates"""
    return sum(point)


def is_valid_point(point, n, m=DIMENSION):
    """Check that point is a weakly increasing m-tuple inside [0, n]"""
    if len(point) != m or point[0] < 0 or point[-1] > n:
        return False
    return all(a <= b for a, b in zip(point, point[1:]))


def leq(lo, hi):
    """The order of the poset: coordinatewise comparison"""
    return all(a <= b for a, b in zip(lo, hi))


def covers(lo, hi, n=None):
    """
    Check whether hi covers lo

    Args:
        lo: The lower point
        hi: The candidate upper point
        n: Optional box height; when given hi must also fit the box

    Returns:
        True iff hi - lo is a unit vector and hi is a valid point
    """
    if len(lo) != len(hi):
        return False
    moved = 0
    for a, b in zip(lo, hi):
        if b == a:
            continue
        if b != a + 1:
            return False
        moved += 1
        if moved > 1:
            return False
    if moved != 1:
        return False
    if hi[0] < 0 or any(a > b for a, b in zip(hi, hi[1:])):
        return False
    return n is None or hi[-1] <= n


def enumerate_lattice(params):
    """
    Yield every element of L(m, n) exactly once, in lexicographic order

    combinations_with_replacement over 0..n produces exactly the weakly
    increasing tuples, already sorted.
    """
    return combinations_with_replacement(range(params.n + 1), params.m)


def rank_histogram(points, m=DIMENSION, n=0):
    """Count a stream of points by rank"""
    counts = [0] * (m * n + 1)
    for point in points:
        counts[rank(point)] += 1
    return counts


def rank_sizes(params):
    """
    Rank sizes of L(m, n), the coefficients of the Gaussian binomial [n+m choose m]

    Counts partitions with at most m parts, each at most n, using a DP table
    indexed by (number of non-zero parts, rank) and extended one largest
    part value at a time. Independent of enumerate_lattice.

    Raises:
        RankOverflowError: when the counts cannot be held in int64
    """
    expected_total = params.size
    if expected_total > _INT64_MAX:
        raise RankOverflowError(
            f"L({params.m},{params.n}) has {expected_total} elements, beyond int64"
        )

    m, n = params.m, params.n
    width = m * n + 1
    ways = np.zeros((m + 1, width), dtype=np.int64)
    ways[0, 0] = 1

    for value in range(1, n + 1):
        # Ascending part count reuses this value any number of times
        for count in range(1, m + 1):
            ways[count, value:] += ways[count - 1, :width - value]

    sizes = tuple(int(s) for s in ways.sum(axis=0))
    if sum(sizes) != expected_total or any(s < 0 for s in sizes):
        raise RankOverflowError(
            f"rank DP for L({m},{n}) lost precision: total {sum(sizes)} != {expected_total}"
        )
    return RankProfile(m=m, n=n, sizes=sizes)


def point_array(points):
    """Points as an (N, 5) int64 array"""
    return np.asarray(points, dtype=np.int64).reshape(-1, DIMENSION)


def invalid_rows(coords, n):
    """Mask of the rows of a point array that are not elements of L(5, n)"""
    if len(coords) == 0:
        return np.zeros(0, dtype=bool)
    decreasing = (np.diff(coords, axis=1) < 0).any(axis=1)
    return decreasing | (coords[:, 0] < 0) | (coords[:, -1] > n)


def non_cover_steps(coords):
    """
    Mask over consecutive row pairs of a point array

    Entry s is True unless row s+1 is row s plus a unit vector. Validity
    of the rows themselves is left to invalid_rows.
    """
    steps = np.diff(coords, axis=0)
    unit = ((steps == 1).sum(axis=1) == 1) & ((steps == 0).sum(axis=1) == coords.shape[1] - 1)
    return ~unit


def pack_point(point):
    """Pack five coordinates into one integer key (lexicographic order preserved)"""
    key = 0
    for value in point:
        if not 0 <= value <= MAX_PACKED_N:
            raise ValueError(f"coordinate {value} does not fit {COORD_BITS} bits")
        key = (key << COORD_BITS) | value
    return key


def unpack_key(key):
    """Inverse of pack_point"""
    key = int(key)
    return tuple(
        (key >> (COORD_BITS * (DIMENSION - 1 - c))) & COORD_MASK
        for c in range(DIMENSION)
    )


def pack_points(points):
    """
    Pack a sequence of points into an int64 array of keys

    Args:
        points: Sequence of 5-tuples, or an (N, 5) integer array

    Returns:
        numpy int64 array of length N
    """
    coords = np.asarray(points, dtype=np.int64)
    if coords.size == 0:
        return np.zeros(0, dtype=np.int64)
    coords = coords.reshape(-1, DIMENSION)
    if coords.min() < 0 or coords.max() > MAX_PACKED_N:
        raise ValueError(f"coordinates must lie in 0..{MAX_PACKED_N} to be packed")
    return (coords << _SHIFTS).sum(axis=1)
