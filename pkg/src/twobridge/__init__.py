"""Exact invariants of two-bridge knots: reduced grading, signature, determinant."""

from .braidkit import (
    BraidLetter,
    BraidWord,
    ConwayNotation,
    continued_fraction,
    conway_to_braid,
    exponent_sum,
    mirror,
    normalize_odd,
    parse_conway,
)
from .errors import (
    ConventionError,
    ConwayParseError,
    EmptyNotationError,
    IdentityViolation,
    LinkNotKnotError,
    MalformedPDError,
    MixedSignsError,
    ZeroEntryError,
)
from .invariants import InvariantReport, check_mirror, check_sum, report

__version__ = "0.1.0"
