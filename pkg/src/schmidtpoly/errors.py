"""Exception types separating bug-level failures from genuine counterexamples.

A failed divisibility check is *data* (a report with a witness), never an
exception.  Exceptions are reserved for situations the underlying theorems
rule out, so raising one means the implementation is wrong.
"""


class InternalInvariantError(RuntimeError):
    """A cross-check between two independently computed routes disagreed.

    Examples: an inexact division while building a b-coefficient table, or
    the constructive inner sum disagreeing with the direct one.  Both routes
    are proven equal, so this signals an implementation bug.
    """


class IntegralityError(ArithmeticError):
    """A division that must be exact left a remainder.

    Raised by the weight-absorption coefficient solver when a back
    substitution does not come out integral.
    """
