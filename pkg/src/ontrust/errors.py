"""Exception hierarchy shared by all engine modules."""

from __future__ import annotations


class OntrustError(Exception):
    """Base class. `line` is set when the error was located in a document."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownKind(OntrustError):
    pass


class SignatureViolation(OntrustError):
    pass


class DanglingEndpoint(OntrustError):
    pass


class UnknownElement(OntrustError):
    pass


class FrozenGraph(OntrustError):
    pass


class MalformedTrust(OntrustError):
    def __init__(self, trust_id: str, missing: list[str], line: int | None = None):
        self.trust_id = trust_id
        self.missing = list(missing)
        super().__init__(f"trust {trust_id} is malformed: {', '.join(missing)}", line)


class UngroundedDelegation(OntrustError):
    pass


class GroundingTooWeak(OntrustError):
    pass


class UnknownAxiom(OntrustError):
    pass


class InvalidMeasure(OntrustError):
    pass


class MissingIntensity(OntrustError):
    pass


class NonConvergent(OntrustError):
    def __init__(self, degrees: dict, residual: float, iterations: int):
        self.degrees = dict(degrees)
        self.residual = residual
        self.iterations = iterations
        super().__init__(
            f"influence fixed point did not settle after {iterations} iterations "
            f"(residual {residual:.3e})"
        )


class BoundExceeded(OntrustError):
    pass


class ParseError(OntrustError):
    pass
