"""
Exception types shared across weakid
"""


class GroupSpecError(ValueError):
    """Malformed or unsupported group specification."""


class ParseError(ValueError):
    """Syntax error in a G-polynomial expression."""

    def __init__(self, message: str, position: int = -1):
        self.position = position
        if position >= 0:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownOperatorError(ParseError):
    """Operator name outside the active group's operator universe."""


class NormalFormAlphabetError(ValueError):
    """Letter outside the normal-form alphabet of the active group."""


class SingularMatrixError(ValueError):
    """A conjugating or generator matrix is not invertible."""


class StepBudgetExceeded(RuntimeError):
    """Normalization did not finish within its step budget."""


class OracleBudgetExceeded(RuntimeError):
    """Requested multidegree is beyond the brute-force oracle budget."""


class TerminationMeasureError(RuntimeError):
    """A rewrite step produced a word whose termination measure did not decrease."""


class RuleSoundnessError(ArithmeticError):
    """A rewrite step changed the evaluation on generic matrices."""


class GroupClosureError(RuntimeError):
    """Closing the generators under products exceeded the element limit."""
