"""Manipulation, control and bribery solvers for nearly single-peaked elections.

Instances use the same text format as the ``nearsp`` command line tool.
"""

from ._core import (
    CapExceeded,
    Error,
    Instance,
    Outcome,
    ParseError,
    PreconditionError,
    dodgson_distance,
    is_single_caved,
    is_single_peaked,
    oracle,
    parse_instance,
    perception_flip_distance,
    reduce_partition,
    reduce_x3c,
    replay,
    run_suite,
    solve,
    suite_names,
    verify_partition,
    verify_x3c,
)


def load(path):
    """Parse an instance file."""
    with open(path, encoding="utf-8") as f:
        return parse_instance(f.read())


__all__ = [
    "CapExceeded",
    "Error",
    "Instance",
    "Outcome",
    "ParseError",
    "PreconditionError",
    "dodgson_distance",
    "is_single_caved",
    "is_single_peaked",
    "load",
    "oracle",
    "parse_instance",
    "perception_flip_distance",
    "reduce_partition",
    "reduce_x3c",
    "replay",
    "run_suite",
    "solve",
    "suite_names",
    "verify_partition",
    "verify_x3c",
]
