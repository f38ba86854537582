class SymcodeError(Exception):
    """
    Base class for every error raised by the symcode computations.
    """



class FieldMismatchError(SymcodeError, ValueError):
    """
    Raised when two operands live in different finite fields.
    """



class ArityError(SymcodeError, ValueError):
    """
    Raised when a polynomial and a point (or a code) disagree on the number of variables.
    """



class DegenerateCodeError(SymcodeError, ValueError):
    """
    Raised when a code cannot be built or a closed form does not apply (empty set, m >= q).
    """



class InfeasibleSweepError(SymcodeError):
    """
    Raised before an exhaustive sweep whose estimated size exceeds the configured cap.
    """

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what} needs about {size:,} field operations, above the limit of {limit:,}; "
            f"pass --force to run it anyway."
        )
