"""Exception types shared across the package."""


class QuatU11Error(Exception):
    """Base class for every error raised by this package."""


class NotSimilarError(QuatU11Error):
    """Two quaternions do not lie in the same similarity class."""


class SingularMatrixError(QuatU11Error):
    """A quaternionic matrix has no inverse."""


class MembershipError(QuatU11Error):
    """A matrix fails the group membership conditions."""


class MembershipDriftError(QuatU11Error):
    """A computed product drifted too far from the group."""


class HintExhaustedError(QuatU11Error):
    """Rejection sampling failed to produce the requested class."""


class NotApplicableError(QuatU11Error):
    """The requested quantity is undefined for this input."""


class NegativeRadicandError(QuatU11Error):
    """A radicand fell below the roundoff clamp window."""


class NoRootFoundError(QuatU11Error):
    """Root finding produced no candidate that survived the residual filter."""


class PoleError(QuatU11Error):
    """The Moebius denominator vanished at the requested point."""


class BallViolationError(QuatU11Error):
    """A Moebius image escaped the closed unit ball beyond roundoff."""


class NotEllipticError(QuatU11Error):
    """Diagonalization over the unit spectrum requires an elliptic element."""


class CaseMismatchError(QuatU11Error):
    """Input does not satisfy the preconditions of the requested case."""


class ClaimViolationError(QuatU11Error):
    """An internal algebraic identity failed beyond tolerance."""
