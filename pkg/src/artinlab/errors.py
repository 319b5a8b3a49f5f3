"""Exception hierarchy shared by every module."""


class ArtinlabError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(ArtinlabError):
    """Operands live over different coefficient fields."""


class DimensionError(ArtinlabError):
    """Vector or matrix shapes do not agree."""


class DegreeBoundError(ArtinlabError):
    """A degree above the ideal's configured bound was requested."""


class TruncationError(ArtinlabError):
    """The degree bound is too small to certify the requested result."""


class InhomogeneousError(ArtinlabError):
    """A polynomial that must be homogeneous is not."""


class RingMismatchError(ArtinlabError):
    """Ideals or polynomials belong to different ambient rings."""


class DegenerateWitnessError(ArtinlabError):
    """The power of the linear form already lies in the complete intersection."""


class NotPrimaryError(ArtinlabError):
    """A monomial ideal in two variables is not primary to the maximal ideal."""


class VerificationError(ArtinlabError):
    """An identity that must hold was found to fail."""


class ReductionError(ArtinlabError):
    """No minimal reduction was verified within the retry budget."""


class ParseError(ArtinlabError):
    """Malformed polynomial text.

    ``position`` is the 0-based character offset of the problem, or ``None``.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
