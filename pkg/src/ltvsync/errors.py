"""Exception hierarchy for ltvsync.

Every error raised by the library derives from :class:`LtvSyncError`, so
callers (including the CLI, which maps numerical failures to exit code 3)
can catch library failures without catching programming errors.
"""


class LtvSyncError(Exception):
    """Base class for all ltvsync errors."""


class ShapeError(LtvSyncError):
    """Matrix or vector dimensions are inconsistent with the operation."""


class RowSumError(LtvSyncError):
    """Row sums violate the coupling-matrix constraint beyond tolerance."""


class NegativeCoupling(LtvSyncError):
    """A coupling weight that must be nonnegative is negative beyond tolerance."""


class NotConnected(LtvSyncError):
    """The interconnection graph lacks a node reachable from every other node."""


class NotHurwitz(LtvSyncError):
    """A matrix expected to be Hurwitz has an eigenvalue with real part >= 0."""


class NotSchur(LtvSyncError):
    """A matrix expected to be Schur has an eigenvalue on or outside the unit circle."""


class SingularStep(LtvSyncError):
    """A discrete-time step matrix is singular, so backward propagation fails."""


class OutOfDomain(LtvSyncError):
    """A time-indexed object was evaluated outside its declared domain."""


class NonPositive(LtvSyncError):
    """An argument that must be strictly positive is not."""


class BadWindow(LtvSyncError):
    """A scan window length is nonpositive or otherwise unusable."""


class RangeError(LtvSyncError):
    """Sampled values fall outside the required range."""


class NormBall(LtvSyncError):
    """A matrix required to lie in the unit spectral-norm ball does not."""


class NotSPSD(LtvSyncError):
    """A matrix required to be symmetric positive semi-definite is not."""


class HorizonOverflow(LtvSyncError):
    """A constructed time horizon exceeds what is representable or configured."""
