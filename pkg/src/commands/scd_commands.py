"""
Subcommands of the scd command line
"""
import argparse
import logging

from ..chains.families import enumerate_family_params
from ..chains.tables import FAMILY_IDS
from ..components.records import build_records
from ..ladders.peeling import ORIENTATION_AUTO, Orientation, scd_outcomes
from ..layouts.tables import (
    LADDER_SHAPE_COLUMNS, chain_length_histogram, family_counts_frame, ladder_frame,
    rank_profile_frame, render_table, verify_summary_frame
)
from ..utils.helpers import box_height, thread_count
from ..verify.checks import verify_scd

logger = logging.getLogger(__name__)

ORIENTATION_CHOICES = [ORIENTATION_AUTO] + [o.value for o in Orientation]


def _pipeline_options():
    """Options shared by every command that builds the decomposition"""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--orientation", choices=ORIENTATION_CHOICES, default=ORIENTATION_AUTO,
        help="Peel orientation; auto tries left-bottom then top-right (default: auto)"
    )
    parent.add_argument(
        "--threads", type=thread_count, default=1,
        help="Worker processes, 0 for one per CPU (default: 1)"
    )
    # Test hook: leave a family out of the construction
    parent.add_argument(
        "--drop-family", action="append", choices=FAMILY_IDS, default=[],
        help=argparse.SUPPRESS
    )
    return parent


def register_commands(subparsers):
    """Add generate, verify, stats and ladders to a subparsers object"""
    options = _pipeline_options()

    generate = subparsers.add_parser(
        "generate", parents=[options], help="Write the symmetric chains of L(5, n)"
    )
    generate.add_argument("--n", type=box_height, required=True, help="Box height")
    generate.add_argument("--format", choices=["json", "text"], default="json",
                          help="json: one record per line; text: points joined by arrows")
    generate.set_defaults(func=cmd_generate)

    verify = subparsers.add_parser(
        "verify", parents=[options], help="Check the decomposition for a range of n"
    )
    verify.add_argument("--n-lo", type=box_height, required=True, help="Smallest n")
    verify.add_argument("--n-hi", type=box_height, required=True, help="Largest n")
    verify.add_argument("--deep", action="store_true",
                        help="Also check every ladder and the weight monomials")
    verify.set_defaults(func=cmd_verify)

    stats = subparsers.add_parser(
        "stats", parents=[options], help="Family, ladder and rank statistics for one n"
    )
    stats.add_argument("--n", type=box_height, required=True, help="Box height")
    stats.set_defaults(func=cmd_stats)

    ladders = subparsers.add_parser(
        "ladders", parents=[options], help="List every ladder for one n"
    )
    ladders.add_argument("--n", type=box_height, required=True, help="Box height")
    ladders.set_defaults(func=cmd_ladders)


def _outcomes(args):
    return scd_outcomes(args.n, args.orientation, args.threads, tuple(args.drop_family))


def cmd_generate(args):
    """Print one record per symmetric chain, in canonical order"""
    chains = [chain for outcome in _outcomes(args) for chain in outcome.chains]
    records = build_records(args.n, chains)
    if args.format == "json":
        lines = [record.to_json() for record in records]
    else:
        lines = [record.to_text() for record in records]
    logger.info("n=%d: writing %d chains", args.n, len(lines))
    if lines:
        print("\n".join(lines))
    return 0


def cmd_verify(args):
    """Verify each n in [n_lo, n_hi]; exit 1 if any check fails"""
    reports = []
    for n in range(args.n_lo, args.n_hi + 1):
        report = verify_scd(
            n, orientation=args.orientation, deep=args.deep,
            threads=args.threads, drop_families=tuple(args.drop_family)
        )
        print(report.summary_line())
        for category, samples in (
            ("duplicate", report.duplicates),
            ("missing", report.missing),
            ("unexpected", report.unexpected),
            ("not saturated", report.saturation_failures),
            ("not symmetric", report.symmetry_failures),
            ("profile", report.profile_mismatches),
            ("error", report.errors),
        ):
            for sample in samples:
                logger.warning("n=%d %s: %s", n, category, sample)
        reports.append(report)

    failed = [report.n for report in reports if not report.passed]
    if failed:
        logger.warning("Verification failed for n in %s", failed)
    logger.info(
        "Verification summary\n%s",
        verify_summary_frame(reports).to_string(index=False)
    )
    return 1 if failed else 0


def cmd_stats(args):
    """Print family counts, ladder shapes, chain lengths and the rank profile"""
    family_params = enumerate_family_params(args.n, tuple(args.drop_family))
    outcomes = _outcomes(args)
    chains = [chain for outcome in outcomes for chain in outcome.chains]
    families = family_counts_frame(family_params, outcomes)

    print(f"n={args.n} families={len(family_params)} ladders={len(outcomes)} chains={len(chains)}")
    print(render_table("Families", families))
    print(render_table("Ladders", ladder_frame(outcomes)[LADDER_SHAPE_COLUMNS]))
    print(render_table("Chain lengths", chain_length_histogram(chains)))
    print(render_table("Rank profile", rank_profile_frame(args.n)))
    return 0


def cmd_ladders(args):
    """Print one line per ladder"""
    outcomes = _outcomes(args)
    frame = ladder_frame(outcomes)
    fallbacks = int(frame["Fallback"].sum()) if len(frame) else 0
    print(f"n={args.n} ladders={len(outcomes)} fallbacks={fallbacks}")
    print(render_table("Ladders", frame))
    return 0
