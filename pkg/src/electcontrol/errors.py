"""Exception hierarchy shared across the package."""


class ControlError(Exception):
    """Base class for every error raised by electcontrol."""


class DomainError(ControlError, ValueError):
    """An argument lies outside the domain of the operation (unknown candidate, bad partition...)."""


class VoteKindError(ControlError, TypeError):
    """Vote type does not match the voting rule (e.g. approval ballots fed to plurality)."""


class UsageError(ControlError, ValueError):
    """Operation invoked on an incompatible combination (type pair, instance class...)."""


class SizeError(ControlError, ValueError):
    """Input exceeds an enumeration guard."""


class ParseError(ControlError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
