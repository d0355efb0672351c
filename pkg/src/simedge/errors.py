"""Exception types shared across the package."""


class SimedgeError(Exception):
    """Base class for all library errors."""


class SearchBudgetExceeded(SimedgeError):
    """An exhaustive search ran out of its node budget before deciding."""


class LimitExceeded(SimedgeError):
    """An enumeration produced more objects than the caller allowed."""


class PreconditionViolated(SimedgeError):
    """An operation was called on inputs outside its stated domain."""


# graph-core
class DisconnectedInput(PreconditionViolated):
    pass


class NotRegular(PreconditionViolated):
    pass


class EdgeNotFound(PreconditionViolated):
    pass


# coloring / constructions
class MuTooLarge(PreconditionViolated):
    pass


class MuMismatch(PreconditionViolated):
    pass


class NotOneFactorable(PreconditionViolated):
    pass


class NotTwoSimultaneous(PreconditionViolated):
    pass


class NotHamiltonian(PreconditionViolated):
    pass


class OddCircuit(PreconditionViolated):
    pass


class ResidualNotBipartite(PreconditionViolated):
    pass


class NoOcdcFound(SimedgeError):
    """Bounded search for an oriented cycle double cover came up empty.

    This is distinct from proven nonexistence unless the message says so.
    """


# latin-trades
class InvalidTrade(PreconditionViolated):
    pass


class NotSymmetric(PreconditionViolated):
    pass


class NotBipartite(PreconditionViolated):
    pass


# cdc-flow
class TooFewClasses(PreconditionViolated):
    pass


class InvalidCover(PreconditionViolated):
    pass


class NotEvenGraph(PreconditionViolated):
    pass


# realization
class NotGraphic(PreconditionViolated):
    pass


class ElementBelowMu(PreconditionViolated):
    pass


# cli / formats
class ParseError(SimedgeError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LoopEdge(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class BipartitionViolation(ParseError):
    pass
