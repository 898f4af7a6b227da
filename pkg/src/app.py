"""
Main application file for the symmetric chain decomposition tools
"""
import argparse
import logging
import sys

from .chains.families import ConstructionError
from .commands.scd_commands import register_commands

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def create_app():
    """Create and configure the command-line parser"""
    parser = argparse.ArgumentParser(
        prog="scd",
        description="Symmetric chain decompositions of Young's lattice L(5, n)"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="More diagnostics on stderr (-v info, -vv debug)"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    register_commands(subparsers)
    return parser


def _log_level(verbose):
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def main(argv=None):
    """
    Run one command

    Returns:
        Exit code: 0 success, 1 construction or verification failure;
        usage errors exit with 2 through argparse
    """
    parser = create_app()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.n_lo > args.n_hi:
        parser.error(f"--n-lo {args.n_lo} is greater than --n-hi {args.n_hi}")

    logging.basicConfig(level=_log_level(args.verbose), stream=sys.stderr, format=LOG_FORMAT)

    try:
        return args.func(args)
    except ConstructionError as e:
        logger.error("Construction failed: %s", e)
        return 1


if __name__ == '__main__':
    sys.exit(main())
