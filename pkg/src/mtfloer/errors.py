"""Exception hierarchy shared by every module.

Domain errors map to CLI exit code 2.  Oracle mismatches and regression
failures are verdicts rather than exceptions and carry their own exit
codes (3 and 4).
"""

from __future__ import annotations


class MtfloerError(Exception):
    """Base class for all domain errors."""


class ParseError(MtfloerError):
    """Malformed input document, label string, or flag value."""


class InvalidFiber(MtfloerError):
    """A fiber pair violates 0 < q < p or gcd(p, q) = 1."""


class NotSpecial(MtfloerError):
    """The twisting fractions do not sum to an integer, so the knot
    admits no longitude of the required kind."""


class DegenerateGenus(MtfloerError):
    """The derived fiber genus is negative or non-integral."""


class ArityMismatch(MtfloerError):
    """A label's residue tuple does not match the fiber count."""


class NonIntegralEta(MtfloerError):
    """An eta value came out non-integral; the (summary, label) pair is
    internally inconsistent."""


class OffLattice(MtfloerError):
    """A profile was evaluated away from the half-integer lattice."""


class BoundaryUnsafe(MtfloerError):
    """A U-action request touched a well cut off by the window."""


class IdentityPower(MtfloerError):
    """Lefschetz count requested for a power of the monodromy that is
    the identity (fixed points are not isolated there)."""


class OrderTooSmall(MtfloerError):
    """The third-level rank prediction needs monodromy order >= 3."""


class AxiomViolation(MtfloerError):
    """A constructed book complex failed D^2 = 0 or the degree check."""


class BandEmpty(MtfloerError):
    """The oracle window was too small to certify any level."""


class InternalMismatch(MtfloerError):
    """A counting identity that must hold failed; indicates a bug."""


EXIT_OK = 0
EXIT_DOMAIN_ERROR = 2
EXIT_ORACLE_MISMATCH = 3
EXIT_REGRESSION_FAILURE = 4
