"""Exception types shared across the package."""


class NonSymmetricError(ValueError):
    """A matrix that must be symmetric is not."""


class NotPositiveDefiniteError(ValueError):
    """A Gram matrix fails the positive-definiteness test."""


class ProductTypeError(ValueError):
    """Operation needs an irreducible surface; the Voronoi cell is a rectangle."""


class RadiusTooSmallError(ValueError):
    """A brute-force box is too small to certify a global minimum."""


class EmptySupportError(ValueError):
    """A formal series with no terms cannot be minimized."""


class NotAffineOnCellError(RuntimeError):
    """The embedding failed an affineness cross-check on a subdivision cell."""


class InternalInconsistencyError(RuntimeError):
    """Two independent computations of the same fact disagree."""
