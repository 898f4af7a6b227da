"""
Diagnostic tables for the stats, ladders and verify commands
"""
import pandas as pd

from ..chains.tables import FAMILY_IDS
from ..lattice.core import DIMENSION, AmbientParams, rank_sizes


def _params_label(params):
    return f"i={params.i},j={params.j},k={params.k},u={params.u},w={params.w}"


def family_counts_frame(family_params, outcomes):
    """
    Per-family parameter instances, ladders, chains and points

    Args:
        family_params: (family, FamilyParams) pairs from enumerate_family_params
        outcomes: PeelOutcome list for the same n

    Returns:
        DataFrame with one row per family that occurs, in family order
    """
    instances = pd.DataFrame([family for family, _ in family_params], columns=["Family"])
    instance_counts = instances.groupby("Family").size().rename("Instances")

    ladders = pd.DataFrame(
        [
            (outcome.ladder.key.family, len(outcome.chains), sum(len(c) for c in outcome.chains))
            for outcome in outcomes
        ],
        columns=["Family", "Chains", "Points"],
    )
    per_family = ladders.groupby("Family").agg(
        Ladders=("Chains", "size"),
        Chains=("Chains", "sum"),
        Points=("Points", "sum"),
    )

    present = [family for family in FAMILY_IDS if family in instance_counts.index]
    frame = pd.concat([instance_counts, per_family], axis=1).reindex(present).fillna(0).astype(int)
    frame.index.name = "Family"
    return frame.reset_index()


# Columns of ladder_frame that give a ladder's shape
LADDER_SHAPE_COLUMNS = ["Family", "Params", "t", "Rows", "Columns"]


def ladder_frame(outcomes):
    """One row per ladder: shape, rank span and how it was peeled"""
    rows = []
    for outcome in outcomes:
        ladder = outcome.ladder
        key = ladder.key
        rows.append({
            "Family": key.family,
            "Params": _params_label(key.params),
            "t": "-" if key.layer is None else key.layer,
            "Rows": ladder.height,
            "Columns": ladder.width,
            "MinRank": ladder.min_rank,
            "MaxRank": ladder.max_rank,
            "Orientation": outcome.orientation.value,
            "Chains": len(outcome.chains),
            "Fallback": outcome.fallback,
        })
    columns = LADDER_SHAPE_COLUMNS + ["MinRank", "MaxRank", "Orientation", "Chains", "Fallback"]
    return pd.DataFrame(rows, columns=columns)


def chain_length_histogram(chains):
    """Number of chains of each length (points per chain)"""
    lengths = pd.DataFrame({"Length": [len(chain) for chain in chains]})
    return lengths.groupby("Length").size().reset_index(name="Chains")


def rank_profile_frame(n):
    """Oracle rank sizes of L(5, n) with the expected chain starts per rank"""
    profile = rank_sizes(AmbientParams(DIMENSION, n))
    starts = profile.chain_start_counts()
    starts += [0] * (len(profile.sizes) - len(starts))
    return pd.DataFrame({
        "Rank": range(len(profile.sizes)),
        "Size": profile.sizes,
        "ChainStarts": starts,
    })


def verify_summary_frame(reports):
    """One row per verified n with failure counts by category"""
    rows = []
    for report in reports:
        row = {
            "n": report.n,
            "Points": report.total_points,
            "Chains": report.chain_count,
            "Passed": report.passed,
        }
        row.update(report.failure_counts())
        rows.append(row)
    return pd.DataFrame(rows)


def render_table(title, frame):
    """Title line followed by the frame without its index"""
    return f"{title}\n{frame.to_string(index=False)}"
