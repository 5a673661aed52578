"""Exact invariants of combinatorial line arrangements."""

from ._core import (
    ArrangementError,
    DimensionMismatch,
    InternalContradiction,
    SchemaError,
    betti,
    classify,
    generic_betti,
    homology,
    nbc,
    random_arrangements,
    report,
    ring,
    run_cli,
    snf,
    validate,
    verify,
)

__all__ = [
    "ArrangementError",
    "DimensionMismatch",
    "InternalContradiction",
    "SchemaError",
    "betti",
    "classify",
    "generic_betti",
    "homology",
    "nbc",
    "random_arrangements",
    "report",
    "ring",
    "run_cli",
    "snf",
    "validate",
    "verify",
]
