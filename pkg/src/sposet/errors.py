"""Exception types shared across the library."""


class SposetError(Exception):
    """Base class for every error raised by this package."""


class PosetValidationError(SposetError):
    """A face lattice violates one of the simplicial poset axioms."""

    def __init__(self, element_id, axiom, message):
        self.element_id = element_id
        self.axiom = axiom
        super().__init__(f"element {element_id!r}: {message} [{axiom}]")


class NonBooleanInterval(PosetValidationError):
    """A lower interval is not a Boolean lattice."""


class DanglingFaceRef(PosetValidationError):
    """A facet list references an id that does not exist."""


class RankMismatch(PosetValidationError):
    """Vertex count, facet count and rank disagree."""


class EmptyInput(SposetError):
    """An operation that needs a nonempty poset received nothing."""


class UnknownElement(SposetError):
    """Requested element id is not in the poset."""


class NotPure(SposetError):
    """Maximal faces have different dimensions."""


class NotConnected(SposetError):
    """The poset's realization is disconnected."""


class MissingVertexAssignment(SposetError):
    """A characteristic function leaves some vertex unassigned."""


class WrongVectorLength(SposetError):
    """A characteristic vector has the wrong number of entries."""


class NonPrimitiveVector(SposetError):
    """A characteristic vector whose entries have gcd != 1."""


class BudgetExhausted(SposetError):
    """Rejection sampling gave up before finding a valid assignment."""

    def __init__(self, message, failing_simplex=None, attempts=0):
        self.failing_simplex = failing_simplex
        self.attempts = attempts
        super().__init__(message)


class NotBuchsbaum(SposetError):
    """Link homology is not concentrated in top degree; carries witnesses."""

    def __init__(self, message, witnesses=()):
        self.witnesses = tuple(witnesses)
        super().__init__(message)


class InconsistentBundle(SposetError):
    """Manifold rank data cannot sit in an exact sequence."""


class InvalidCharFn(SposetError):
    """Characteristic function fails validation for the requested ring."""


class NonFieldCoefficients(SposetError):
    """The operation is only defined over a field."""


class UnknownFormat(SposetError):
    """Input carries a format tag this library does not understand."""


class SchemaViolation(SposetError):
    """Input matches a known format tag but not its schema."""


class UnknownName(SposetError):
    """Requested corpus entry does not exist."""
