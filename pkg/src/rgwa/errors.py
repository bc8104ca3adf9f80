"""Exception hierarchy shared by all workbench modules.

Input problems (bad shapes, out-of-range entries, unsupported carriers) are
kept distinct from verified axiom violations: the former raise, the latter
are returned as CheckReport values.
"""

from __future__ import annotations


class WorkbenchError(Exception):
    """Base class for every error raised by this package."""


class InputError(WorkbenchError):
    """Malformed input: wrong dimensions, out-of-range entries, mismatched
    carriers or endpoints."""


class UnsupportedInputError(InputError):
    """Well-formed input outside the implemented fragment (e.g. quotients of
    non-abelian or nontrivially acting carriers)."""


class ValidationError(WorkbenchError):
    """Construction rejected because an axiom check failed.

    The failing report is attached as ``.report``.
    """

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class StructuralError(WorkbenchError):
    """A computation left the expected algebraic substructure (value escaping
    the kernel image of a split extension, a map tuple missing from an
    enumerated pentaction set).  Signals that a theorem hypothesis does not
    hold for the given input.
    """


class BudgetExceededError(WorkbenchError):
    """An enumeration hit its configured candidate budget."""
