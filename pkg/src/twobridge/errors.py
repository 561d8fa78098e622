class TwoBridgeError(Exception):
    pass


class ConwayParseError(TwoBridgeError, ValueError):
    pass


class EmptyNotationError(ConwayParseError):
    pass


class ZeroEntryError(ConwayParseError):
    pass


class MixedSignsError(ConwayParseError):
    pass


class LinkNotKnotError(TwoBridgeError):
    """Raised when a diagram or notation describes more than one component."""

    def __init__(self, components, message=None):
        self.components = components
        super().__init__(message or f"diagram has {components} components, expected a knot")


class MalformedPDError(TwoBridgeError, ValueError):
    pass


class ConventionError(TwoBridgeError):
    """A crossing convention produced a value that cannot occur (e.g. odd knot signature)."""


class IdentityViolation(TwoBridgeError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, identity, lhs, rhs, context=None):
        self.identity = identity
        self.lhs = lhs
        self.rhs = rhs
        self.context = context
        msg = f"{identity}: {lhs} != {rhs}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
