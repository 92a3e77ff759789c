"""Exception hierarchy shared across the package."""


class LocalMisError(Exception):
    """Base class for all package-specific errors."""


# -- graph construction / generation --------------------------------------

class BadArity(LocalMisError):
    """Degree sequence is unrealisable (e.g. n*d odd for a d-regular graph)."""


class InfeasibleParams(LocalMisError):
    """A bounded-repair generator exhausted its attempt budget."""


class UnknownName(LocalMisError):
    """Requested named fixture is not in the catalog."""


class UniverseMismatch(LocalMisError):
    """A NodeSet's universe size does not match the graph it is used with."""


# -- simulation engine -----------------------------------------------------

class LocalityViolation(LocalMisError):
    """A per-node round function tried to read state outside its 1-hop view."""


class IterationCapExceeded(LocalMisError):
    """An algorithm that promises termination ran past its iteration cap."""


# -- parameter schedules ----------------------------------------------------

class DegenerateProfile(LocalMisError):
    """The literal constant formulas yield an unusable weight cap (tau >= 1)."""


class InvalidConstants(LocalMisError):
    """Supplied desk-scale constants violate a profile invariant."""


class DegenerateK(LocalMisError):
    """The interval count evaluates to zero and no override was given."""


class DeltaTooSmall(LocalMisError):
    """The regular-interval schedule requires a larger maximum degree."""


class WeightCapViolation(LocalMisError):
    """A weight vector exceeds the active profile's cap."""


# -- analysis ----------------------------------------------------------------

class TraceTooCoarse(LocalMisError):
    """The trace did not retain the per-node detail this query needs."""


class NoGoodNodes(LocalMisError):
    """The good-node classifier found no qualifying probe node."""


class TooLarge(LocalMisError):
    """Graph is too large for brute-force enumeration."""


# -- persistence --------------------------------------------------------------

class ParseError(LocalMisError):
    """Malformed input file; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RefuseOverwrite(LocalMisError):
    """A results directory for this manifest id already exists."""
