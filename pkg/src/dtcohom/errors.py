"""Exception hierarchy.

The CLI maps these onto exit codes: ``ParseError`` and ``StructuralError``
are usage problems (2), ``ResourceCapExceeded`` is 3, everything else
under ``DomainError`` is an invariant violation (1).
"""


class DTError(Exception):
    pass


class ParseError(DTError, ValueError):
    pass


class StructuralError(DTError, ValueError):
    """Inputs of the wrong shape (e.g. coordinate vectors of the wrong length)."""


class DomainError(DTError, ValueError):
    pass


class InvalidMulticurve(DomainError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InvalidSurface(DomainError):
    pass


class UnknownGenerator(DomainError, KeyError):
    def __str__(self):
        return f"unknown generator {self.args[0]!r}"


class UnknownPoint(DomainError, KeyError):
    def __str__(self):
        return f"point {self.args[0]} is not in the action's point set"


class PresentationMismatch(DomainError):
    pass


class WindowError(DomainError):
    pass


class ResourceCapExceeded(DTError, RuntimeError):
    pass
