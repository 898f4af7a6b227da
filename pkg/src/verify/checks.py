"""
Independent checks of the construction

Everything here compares the chains against something computed without
them: brute-force enumeration of L(5, n), the Gaussian binomial rank
profile, and the monomials of the generating function
1 / ((1 - x0)(1 - x1)...(1 - x5)), which are in bijection with L(5, n)
through the weight map.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from ..chains.families import ConstructionError, l2k_scd, parallel_chains
from ..ladders.peeling import ORIENTATION_AUTO, scd_outcomes
from ..lattice.core import (
    DIMENSION, AmbientParams, covers, enumerate_lattice, invalid_rows, non_cover_steps,
    pack_points, point_array, rank, rank_sizes, unpack_key
)
from ..utils.helpers import parallel_map

logger = logging.getLogger(__name__)

# Failure samples kept per category
SAMPLE_LIMIT = 20

# Variables x0 .. x5 of the weight monomials
WEIGHT_VARIABLES = DIMENSION + 1


@dataclass
class VerificationReport:
    n: int
    total_points: int = 0
    chain_count: int = 0
    duplicates: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    unexpected: list = field(default_factory=list)
    saturation_failures: list = field(default_factory=list)
    symmetry_failures: list = field(default_factory=list)
    profile_mismatches: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def passed(self):
        return not (
            self.duplicates or self.missing or self.unexpected
            or self.saturation_failures or self.symmetry_failures
            or self.profile_mismatches or self.errors
        )

    def summary_line(self):
        status = "pass" if self.passed else "fail"
        return f"n={self.n} points={self.total_points} chains={self.chain_count} {status}"

    def failure_counts(self):
        return {
            "duplicates": len(self.duplicates),
            "missing": len(self.missing),
            "unexpected": len(self.unexpected),
            "saturation": len(self.saturation_failures),
            "symmetry": len(self.symmetry_failures),
            "profile": len(self.profile_mismatches),
            "errors": len(self.errors),
        }


def _points_of(chain):
    return getattr(chain, "points", chain)


def _append_sample(samples, item):
    if len(samples) < SAMPLE_LIMIT:
        samples.append(item)


def is_saturated(chain):
    """True iff every consecutive pair is a covering step"""
    points = _points_of(chain)
    return all(covers(lo, hi) for lo, hi in zip(points, points[1:]))


def is_symmetric(chain, n, m=DIMENSION):
    """True iff the end ranks add up to m * n"""
    points = _points_of(chain)
    return rank(points[0]) + rank(points[-1]) == m * n


def weight(point, n):
    """
    Exponents (e0, ..., e5) of the weight monomial of a point

    x0^(n-a5) x1^(a5-a4) x2^(a4-a3) x3^(a3-a2) x4^(a2-a1) x5^(a1)
    """
    a1, a2, a3, a4, a5 = point
    return (n - a5, a5 - a4, a4 - a3, a3 - a2, a2 - a1, a1)


def weights(points, n):
    """Vectorized weight: an (N, 6) int64 array of exponents"""
    coords = np.asarray(points, dtype=np.int64).reshape(-1, DIMENSION)
    padded = np.hstack([coords, np.full((len(coords), 1), n, dtype=np.int64)])
    # Differences of (a1, ..., a5, n) read right to left, then a1 last
    gaps = np.diff(padded, axis=1)[:, ::-1]
    return np.hstack([gaps, coords[:, :1]])


def monomial_exponents(degree, variables=WEIGHT_VARIABLES):
    """
    Every exponent tuple of total degree `degree` in `variables` variables

    Stars and bars: choosing variables-1 bar positions among
    degree+variables-1 slots fixes the gaps.
    """
    slots = degree + variables - 1
    for bars in combinations(range(slots), variables - 1):
        previous = -1
        exponents = []
        for bar in bars:
            exponents.append(bar - previous - 1)
            previous = bar
        exponents.append(slots - previous - 1)
        yield tuple(exponents)


def _as_tuple(row):
    return tuple(int(a) for a in row)


def verify_partition(chains, n):
    """
    Check that chains form a symmetric chain decomposition of L(5, n)

    All points are stacked into one array; chain c owns rows
    starts[c] .. ends[c] - 1.

    Returns:
        VerificationReport; failures are listed (bounded samples), never raised
    """
    report = VerificationReport(n=n, chain_count=len(chains))
    point_lists = []
    for chain in chains:
        points = _points_of(chain)
        if len(points):
            point_lists.append(points)
        else:
            _append_sample(report.errors, "empty chain")

    lengths = np.array([len(points) for points in point_lists], dtype=np.int64)
    coords = point_array([point for points in point_lists for point in points])
    report.total_points = len(coords)

    if len(coords):
        ends = np.cumsum(lengths)
        starts = ends - lengths
        firsts, lasts = coords[starts], coords[ends - 1]

        broken = non_cover_steps(coords)
        # Steps from the last point of one chain to the first of the next
        broken[ends[:-1] - 1] = False
        owner = np.repeat(np.arange(len(lengths)), lengths)
        for c in np.unique(owner[:-1][broken])[:SAMPLE_LIMIT]:
            report.saturation_failures.append((_as_tuple(firsts[c]), _as_tuple(lasts[c])))

        end_ranks = firsts.sum(axis=1) + lasts.sum(axis=1)
        for c in np.flatnonzero(end_ranks != DIMENSION * n)[:SAMPLE_LIMIT]:
            report.symmetry_failures.append((_as_tuple(firsts[c]), _as_tuple(lasts[c])))

    outside = invalid_rows(coords, n)
    report.unexpected = [_as_tuple(row) for row in coords[outside][:SAMPLE_LIMIT]]

    keys = np.sort(pack_points(coords[~outside]))
    repeated = np.unique(keys[1:][keys[1:] == keys[:-1]])
    report.duplicates = [unpack_key(key) for key in repeated[:SAMPLE_LIMIT]]

    expected = pack_points(list(enumerate_lattice(AmbientParams(DIMENSION, n))))
    absent = np.setdiff1d(expected, keys)
    report.missing = [unpack_key(key) for key in absent[:SAMPLE_LIMIT]]
    if len(absent) > SAMPLE_LIMIT:
        logger.warning("n=%d: %d points missing, listing %d", n, len(absent), SAMPLE_LIMIT)
    return report


def chain_profile_mismatches(chains, n):
    """
    Compare chain start ranks with the first differences of the rank sizes

    Returns:
        List of (rank, expected count, actual count) for every disagreement
    """
    profile = rank_sizes(AmbientParams(DIMENSION, n))
    starts = Counter(rank(_points_of(chain)[0]) for chain in chains)
    mismatches = []
    for r, expected in enumerate(profile.chain_start_counts()):
        if starts.get(r, 0) != expected:
            mismatches.append((r, expected, starts.get(r, 0)))
    for r in sorted(starts):
        if r > profile.middle_rank:
            mismatches.append((r, 0, starts[r]))
    return mismatches


def verify_chain_profile(chains, n):
    """True iff the number of chains starting at each rank matches the oracle"""
    return not chain_profile_mismatches(chains, n)


def verify_peel_conservation(ladder, peeled):
    """True iff the peeled chains hold exactly the ladder's points, with multiplicity"""
    before = np.sort(pack_points(list(ladder.points())))
    after = np.sort(pack_points([point for chain in peeled for point in _points_of(chain)]))
    return np.array_equal(before, after)


def verify_l2k_scd(k, chains=None):
    """
    Check a decomposition of L(2, k) given as lists of (q, p) pairs

    Defaults to the decomposition used for the C7-C9 ladders.

    Every pair 0 <= q <= p <= k appears once, each chain steps by one in
    one coordinate and its end ranks add up to 2k.
    """
    if chains is None:
        chains = l2k_scd(k)
    seen = Counter(pair for chain in chains for pair in chain)
    expected = {(q, p) for p in range(k + 1) for q in range(p + 1)}
    if set(seen) != expected or any(count != 1 for count in seen.values()):
        return False
    for chain in chains:
        if sum(chain[0]) + sum(chain[-1]) != 2 * k:
            return False
        for (q0, p0), (q1, p1) in zip(chain, chain[1:]):
            if (q1 - q0, p1 - p0) not in ((1, 0), (0, 1)):
                return False
    return True


def weight_series(chains, n):
    """
    Monomials of degree n contributed by each family

    Returns:
        dict family id -> number of monomials (points) of that family
    """
    tally = Counter()
    for chain in chains:
        source = chain.provenance
        # Peeled chains carry the family on their ladder key
        family = getattr(source, "family", None) or source.ladder.family
        tally[family] += len(chain)
    return dict(sorted(tally.items()))


def _gf_degree(n, drop_families=()):
    """Worker: weight coverage of the pre-peel chains at one degree"""
    chains = parallel_chains(n, drop_families)
    points = [point for chain in chains for point in chain.points]
    result = {
        "n": n, "points": len(points), "chains": len(chains),
        "duplicates": [], "missing": [], "invalid": [],
    }
    if not points:
        result["missing"] = list(monomial_exponents(n))[:SAMPLE_LIMIT]
        return result

    exps = weights(points, n)
    bad = (exps < 0).any(axis=1)
    for row in exps[bad][:SAMPLE_LIMIT]:
        result["invalid"].append(tuple(int(e) for e in row))
    # e0 is fixed by the degree, so e1..e5 identify the monomial
    keys = np.sort(pack_points(exps[~bad][:, 1:]))
    repeated = np.unique(keys[1:][keys[1:] == keys[:-1]])
    for key in repeated[:SAMPLE_LIMIT]:
        tail = unpack_key(key)
        result["duplicates"].append((n - sum(tail),) + tail)

    if len(np.unique(keys)) != comb(n + DIMENSION, DIMENSION):
        expected = pack_points([e[1:] for e in monomial_exponents(n)])
        for key in np.setdiff1d(expected, keys)[:SAMPLE_LIMIT]:
            tail = unpack_key(key)
            result["missing"].append((n - sum(tail),) + tail)
    return result


def gf_truncated_check(n_max, threads=1):
    """
    Truncated generating-function identity for the parallel chains

    For every degree n <= n_max the weights of all pre-peel chain points
    must hit every degree-n monomial in x0..x5 exactly once, so that the
    series agrees with 1 / prod(1 - x_i) up to total degree n_max.

    Returns:
        VerificationReport for n_max; total_points counts monomials seen
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    report = VerificationReport(n=n_max)
    for result in parallel_map(_gf_degree, range(n_max + 1), threads):
        n = result["n"]
        report.total_points += result["points"]
        report.chain_count += result["chains"]
        for sample in result["duplicates"]:
            _append_sample(report.duplicates, sample)
        for sample in result["missing"]:
            _append_sample(report.missing, sample)
        for sample in result["invalid"]:
            _append_sample(report.unexpected, sample)
        if result["points"] != comb(n + DIMENSION, DIMENSION):
            _append_sample(
                report.profile_mismatches,
                (n, comb(n + DIMENSION, DIMENSION), result["points"])
            )
    expected_total = comb(n_max + WEIGHT_VARIABLES, WEIGHT_VARIABLES)
    if report.total_points != expected_total and not report.profile_mismatches:
        report.profile_mismatches.append((n_max, expected_total, report.total_points))
    return report


def verify_ladders(n, orientation=ORIENTATION_AUTO, outcomes=None):
    """
    Peel conservation, chain count and corner membership for every ladder at n

    Ladder rectangle invariants are checked while the ladders are built;
    a violation comes back as a failure rather than an exception.

    Returns:
        List of failure descriptions (empty when every ladder passes)
    """
    if outcomes is None:
        try:
            outcomes = scd_outcomes(n, orientation)
        except ConstructionError as e:
            return [str(e)]

    failures = []
    for outcome in outcomes:
        ladder = outcome.ladder
        if not verify_peel_conservation(ladder, outcome.chains):
            failures.append(f"{ladder.key.describe()}: peel does not conserve points")
        expected_chains = min(ladder.height, ladder.width)
        if len(outcome.chains) != expected_chains:
            failures.append(
                f"{ladder.key.describe()}: {len(outcome.chains)} chains, expected {expected_chains}"
            )
        low, high = ladder.rows[0].first, ladder.rows[-1].last
        if not any(chain.first == low and chain.last == high for chain in outcome.chains):
            failures.append(f"{ladder.key.describe()}: extreme corners split across chains")
    return failures


def verify_scd(n, orientation=ORIENTATION_AUTO, deep=False, threads=1, drop_families=()):
    """
    Run every per-n check on the decomposition

    Args:
        n: Box height
        orientation: Peel orientation policy
        deep: Also check peel conservation per ladder and weight coverage
        threads: Worker count for the construction
        drop_families: Families to leave out (fault injection)

    Returns:
        VerificationReport
    """
    try:
        outcomes = scd_outcomes(n, orientation, threads, drop_families)
    except ConstructionError as e:
        logger.error("n=%d: construction failed: %s", n, e)
        report = VerificationReport(n=n)
        report.errors.append(str(e))
        return report

    chains = [chain for outcome in outcomes for chain in outcome.chains]
    report = verify_partition(chains, n)
    report.profile_mismatches.extend(chain_profile_mismatches(chains, n))
    max_size = rank_sizes(AmbientParams(DIMENSION, n)).max_size
    if len(chains) != max_size:
        report.profile_mismatches.append(("chains", max_size, len(chains)))

    if deep:
        for failure in verify_ladders(n, orientation, outcomes):
            _append_sample(report.errors, failure)
        degree = _gf_degree(n, drop_families)
        for sample in degree["duplicates"] + degree["missing"] + degree["invalid"]:
            _append_sample(report.errors, f"weight coverage: {sample}")

    if not report.passed:
        logger.warning("n=%d: verification failed %s", n, report.failure_counts())
    return report
