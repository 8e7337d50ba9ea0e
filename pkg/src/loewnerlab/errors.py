"""Exception types shared across the package.

Two failure modes are distinguished everywhere: a caller handed us something
malformed (UsageError), or the numerics themselves gave out, e.g. an
eigensolver failure or a hopelessly conditioned inverse (NumericalFailure).
The command line maps them to exit codes 2 and 3 respectively.
"""


class UsageError(ValueError):
    """Bad input: wrong shapes, out-of-domain points, malformed files."""


class NumericalFailure(RuntimeError):
    """A numerical routine failed or refused to proceed (diagnostics in args)."""


class InfeasiblePointError(UsageError):
    """A point lies outside the convex hull it was claimed to belong to.

    Carries a separating affine functional as a certificate: ``direction``
    is a vector d with  d.x > max_i d.v_i  + margin over the vertices v_i.
    """

    def __init__(self, message, direction=None, margin=None):
        super().__init__(message)
        self.direction = direction
        self.margin = margin
