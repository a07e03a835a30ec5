"""Exception hierarchy shared by every module."""


class NpsError(Exception):
    """Base class for all package errors."""


class CapExceeded(NpsError):
    """The exhaustive search space is larger than the configured cap."""


class WidthMismatch(NpsError):
    """A mask has bits outside the instance universe."""


class NotNested(NpsError):
    """A partial-solution query with S not contained in T."""


class EmbeddingNotInjective(NpsError):
    """An element embedding maps two ids to one target id or leaves the target range."""


class SpecMismatch(NpsError):
    """Two reductions or a reduction and a game disagree on the problem."""


class DecodeError(NpsError):
    """An instance document or DIMACS text could not be decoded."""


class UnknownProblem(NpsError):
    """A registry name that does not resolve to a problem."""


class UnknownReduction(NpsError):
    """A reduction chain names an edge that is not registered."""


class ModelPreconditionViolated(NpsError):
    """A model transform was applied to a problem of the wrong kind."""


class MalformedGame(NpsError):
    """Game data violates its structural invariants."""


class MalformedNesting(MalformedGame):
    """Interdiction access sets are not nested inside the universe."""


class NotSatV(NpsError):
    """A gadget expects a game over the variable-based SAT problem."""


class KTooSmall(NpsError):
    """A gadget received too few moves."""


class SEPropertyFailed(NpsError):
    """A reduction failed the solution-embedding check on the instance being lifted."""
