"""
exceptions
==========

Exceptions raised by permshatter on top of the built-in :exc:`TypeError` and
:exc:`ValueError` used for argument validation.
"""


class PermShatterError(Exception):
    r'Base class of all permshatter errors.'


class BudgetExceededError(PermShatterError, RuntimeError):
    r"""Raised when an exhaustive computation would exceed its configured
    budget. Callers should fall back to a sampled computation.
    """


class PreconditionError(PermShatterError, ValueError):
    r"""Raised when the size threshold under which an adversary algorithm is
    guaranteed to work does not hold and best-effort mode was not requested.
    """


class InsufficientGroundSetError(PreconditionError):
    r"""Raised when a ground set is too small for an ordered pair to be split
    off it, or when a tree fragment would become empty.
    """


class StructuralAnomalyError(PermShatterError, RuntimeError):
    r"""Raised when a family contradicts the slice structure derived for a
    set, which signals a family that is not k-lex-shattering.
    """


class ConstructionError(PermShatterError, RuntimeError):
    r'Raised when a randomised construction runs out of retries.'
