"""Exceptions raised by the engine.

Every error carries a short machine ``code`` (used in JSON error reports)
and the process ``exit_code`` the command line returns for it.
"""


class FoxDivError(ValueError):
    code = "error"
    exit_code = 2

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    def to_dict(self):
        return {"error": self.code, "details": str(self)}


class ParseError(FoxDivError):
    code = "parse_error"

    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class UnknownLetterError(FoxDivError):
    code = "unknown_letter"


class ZeroPolynomialError(FoxDivError):
    code = "zero_polynomial"


class CompositionError(FoxDivError):
    code = "composition_mismatch"


class NonMonicObstruction(FoxDivError):
    code = "non_monic_obstruction"
    exit_code = 3


class CompletionLimitError(FoxDivError):
    code = "limit_exceeded"
    exit_code = 3

    def __init__(self, message, system=None):
        super().__init__(message)
        self.system = system


class NotCompletedError(FoxDivError):
    code = "not_completed"


class RingMismatchError(FoxDivError):
    code = "ring_mismatch"


class LengthMismatchError(FoxDivError):
    code = "length_mismatch"


class NotDivisible(FoxDivError):
    code = "not_divisible"
    exit_code = 1


class FamilyError(FoxDivError):
    code = "family_violation"

    def __init__(self, message, violations=()):
        violations = list(violations)
        super().__init__(message, code=violations[0].code if violations else None)
        self.violations = violations


class NotInKernelError(FoxDivError):
    code = "not_in_kernel"
    exit_code = 1
