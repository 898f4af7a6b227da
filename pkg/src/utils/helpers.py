"""
Helper functions for the symmetric chain decomposition tools
"""
import argparse
import os
from multiprocessing import Pool

from ..lattice.core import MAX_PACKED_N


def resolve_threads(threads):
    """Worker count for a --threads value (0 means one per CPU)"""
    if threads is None or threads < 0:
        raise ValueError(f"threads must be a non-negative integer, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def parallel_map(func, items, threads=1):
    """
    Map func over items, optionally on a pool of worker processes

    Args:
        func: A picklable top-level function
        items: The inputs
        threads: Worker count, 0 for one per CPU, 1 to stay in-process

    Returns:
        List of results in input order
    """
    items = list(items)
    workers = min(resolve_threads(threads), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    with Pool(workers) as pool:
        # map keeps input order regardless of completion order
        return pool.map(func, items)


def box_height(text):
    """argparse type for n: a non-negative integer small enough to pack"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"n must be non-negative, got {value}")
    if value > MAX_PACKED_N:
        raise argparse.ArgumentTypeError(f"n must be at most {MAX_PACKED_N}, got {value}")
    return value


def thread_count(text):
    """argparse type for --threads"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"threads must be non-negative, got {value}")
    return value


def format_point(point):
    """Space separated coordinates"""
    return " ".join(str(a) for a in point)


def format_chain_text(points):
    """Points joined by arrows"""
    return " -> ".join(format_point(point) for point in points)
