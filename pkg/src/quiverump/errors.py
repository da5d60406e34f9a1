"""Exception taxonomy shared across the package.

Everything raised on purpose derives from QuiverError so callers (and the
CLI) can distinguish bad input from bugs.
"""

from __future__ import annotations


class QuiverError(Exception):
    """Base class for all library errors."""


class NonComposable(QuiverError):
    """Concatenation attempted between paths whose endpoints do not meet."""


class TrivialDivisor(QuiverError):
    """divides() called with a trivial path as the divisor."""


class TrivialPath(QuiverError):
    """An operation that needs a non-trivial path got a trivial one."""


class UnknownLabel(QuiverError):
    """A vertex or arrow id that is not declared in the quiver."""


class InvalidPresentation(QuiverError):
    """A relation or presentation violates a structural invariant."""


class NotAdmissible(QuiverError):
    """No admissibility bound was found up to the cap."""

    def __init__(self, cap: int):
        super().__init__(f"no admissibility bound found with cap {cap}")
        self.cap = cap


class PathInIdeal(QuiverError):
    """coset_paths() called on a path that lies in the ideal."""


class CrossComponentPath(QuiverError):
    """The path contains a zero junction, so it belongs to no single component."""


class NotSpecialMultiserial(QuiverError):
    """Operation requires a special multiserial algebra; a witness is attached."""

    def __init__(self, witness=None):
        msg = "algebra is not special multiserial"
        if witness is not None:
            msg += f" (witness: {witness})"
        super().__init__(msg)
        self.witness = witness


class NotLocallyMonomial(QuiverError):
    """Operation requires every component algebra to be monomial."""


class NotApplicable(QuiverError):
    """A decision route was forced that the algebra does not satisfy."""


class TruncatedVertex(QuiverError):
    """Successor sequences are undefined at truncated vertices."""


class NotIncident(QuiverError):
    """The half-edge is not incident to the given vertex."""


class BrauerValidationError(QuiverError):
    """One or more Brauer graph invariants failed; diagnostics attached."""

    def __init__(self, diagnostics):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = tuple(diagnostics)


class BijectionFailure(QuiverError):
    """Component/vertex correspondence of a Brauer algebra failed (would be a bug)."""


class CrossCheckMismatch(QuiverError):
    """Structural route and brute-force oracle disagree (fatal diagnostic)."""


class ParseError(QuiverError):
    """Input file rejected; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message
