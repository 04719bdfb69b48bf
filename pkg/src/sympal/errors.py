"""Exception hierarchy shared by all sympal modules."""


class SympalError(Exception):
    """Base class for all errors raised by sympal."""


# --- finite fields ---

class NotPrime(SympalError):
    pass


class ZeroArgument(SympalError):
    pass


class NotGenerator(SympalError):
    pass


class NoEmbedding(SympalError):
    pass


class FieldTooLarge(SympalError):
    pass


class SpecMismatch(SympalError):
    """Arithmetic between elements of different field specs (embed first)."""


# --- symplectic layer ---

class Singular(SympalError):
    pass


class NotSimilitude(SympalError):
    pass


# --- group enumeration ---

class CapExceeded(SympalError):
    """Closure enumeration hit the element cap before closing."""

    def __init__(self, count: int):
        super().__init__(f"enumeration cap exceeded after {count} elements")
        self.count = count


class UnverifiedIrreducibility(SympalError):
    """Spinning filled the space but exhaustive confirmation was out of range."""


# --- classification ---

class NoTransvection(SympalError):
    pass


class CharTooSmall(SympalError):
    pass


class WitnessCheckFailed(SympalError):
    """Internal inconsistency: a produced witness failed its own invariant."""


class NoOrderMatch(SympalError):
    pass


# --- (n,p)-groups ---

class InvalidParams(SympalError):
    pass


class NoInvariantForm(SympalError):
    pass


class NotIrreducible(SympalError):
    pass


# --- regularity ---

class TwistBreaksRegularity(SympalError):
    pass


# --- character theory ---

class NotSubgroup(SympalError):
    pass


class HypothesisFailed(SympalError):
    def __init__(self, clause: str):
        super().__init__(f"hypothesis violated: {clause}")
        self.clause = clause
