"""Stable cohomotopy groups of manifolds in codimensions 2 and 3."""

import json

from ._cohomotopy import (
    SCHEMA_VERSION,
    CohomotopyError,
    ParseError,
    ValidationError,
    run_cli,
    wedge_oracle,
)
from . import _cohomotopy as _core

__all__ = [
    "SCHEMA_VERSION",
    "CohomotopyError",
    "ParseError",
    "ValidationError",
    "analyze",
    "validate_text",
    "invariant_factors",
    "wedge_oracle",
    "section_check",
    "run_cli",
]


def analyze(command, path, **flags):
    """Run one command on one input file and return the report document."""
    return json.loads(_core.analyze(command, str(path), **flags))


def validate_text(text):
    return json.loads(_core.validate_text(text))


def invariant_factors(rows):
    return [int(d) for d in _core.invariant_factors(rows)]


def section_check(k, **states):
    return json.loads(_core.section_check(k, **states))
