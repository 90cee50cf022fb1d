"""Certificates and bounded search for constant-free word equations."""

from ._core import (
    Assignment,
    Equation,
    Mode,
    ParseError,
    apply,
    exotic_chain,
    generate,
    is_periodic,
    lower_bounds,
    parse_assignment,
    parse_equation,
    power_identity_holds,
    primitive_root,
    solve,
    solves,
    verify,
)

__all__ = [
    "Assignment",
    "Equation",
    "Mode",
    "ParseError",
    "apply",
    "exotic_chain",
    "generate",
    "is_periodic",
    "lower_bounds",
    "parse_assignment",
    "parse_equation",
    "power_identity_holds",
    "primitive_root",
    "solve",
    "solves",
    "verify",
]
