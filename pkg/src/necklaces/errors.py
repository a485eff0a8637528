"""Exceptions shared across the counting modules."""


class IntegralityError(ArithmeticError):
    """An exact division that must hold by theory did not.

    Raised only when an internal invariant is broken, i.e. a bug.
    """


class ResourceLimitError(RuntimeError):
    """A request would exceed a configured size bound."""
