class CCCError(Exception):
    """Base class for every error raised by freeccc."""


class UnknownIdentifier(CCCError):
    def __init__(self, name, kind="identifier"):
        super().__init__(f"unknown {kind} {name!r}")
        self.name = name
        self.kind = kind


class TypeMismatch(CCCError):
    """A term does not fit its formation rule.

    ``term`` is the offending subterm; ``expected`` and ``found`` are the two
    clashing objects (or arrow types) when there is a single clash to report.
    """

    def __init__(self, message, term=None, expected=None, found=None):
        super().__init__(message)
        self.term = term
        self.expected = expected
        self.found = found


class DuplicateName(CCCError):
    def __init__(self, name, line=None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate declaration of {name!r}{where}")
        self.name = name
        self.line = line


class BadIndeterminateType(CCCError):
    pass


class NoIndeterminate(CCCError):
    def __init__(self):
        super().__init__("signature declares no indeterminate")


class ParseError(CCCError):
    def __init__(self, message, line, column):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class MissingInterpretation(CCCError):
    pass


class ModelTooLarge(CCCError):
    pass
