"""Exception types shared across the package."""


class LoopSchurError(Exception):
    """Base class for all package errors."""


class RingMismatchError(LoopSchurError, ValueError):
    """Combining polynomials that live in rings with different moduli."""


class MonomialDivisionError(LoopSchurError, ValueError):
    """A term is not exponentwise divisible by the requested monomial."""


class FractionalWeightError(LoopSchurError, ValueError):
    """A color-forgetting substitution hit a weight with a nontrivial denominator."""


class DocumentError(LoopSchurError, ValueError):
    """A document failed to parse.  `path` locates the offending element."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class MembershipError(LoopSchurError, ValueError):
    """A row-labeled tableau violates the family constraints."""


class CapExceededError(LoopSchurError, RuntimeError):
    """Exhaustive enumeration would exceed the configured cardinality cap."""

    def __init__(self, count: int, cap: int):
        super().__init__(f"family has {count} members, above the cap of {cap}")
        self.count = count
        self.cap = cap


class PreconditionError(LoopSchurError, ValueError):
    """A verifier was invoked outside its guaranteed parameter range."""

    def __init__(self, message: str, required_truncation: int | None = None):
        super().__init__(message)
        self.required_truncation = required_truncation


class ConfigError(LoopSchurError, ValueError):
    """A grid configuration document is malformed.  `line` locates the fault."""

    def __init__(self, message: str, line: int | None = None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line
