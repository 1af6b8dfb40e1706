"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems (format, symmetry,
dimension) exit 2, analysis refusals (cost guard) exit 1.
"""


class Circ4Error(Exception):
    """Base class for all package errors."""


class DimensionMismatch(Circ4Error, ValueError):
    """Two vectors/words of different lengths were combined."""


class CapacityError(Circ4Error, ValueError):
    """Requested length exceeds the 64-coordinate plane capacity."""


class VectorFormatError(Circ4Error, ValueError):
    """Generator-vector text is malformed; message names the offending position."""


class SymmetryError(Circ4Error, ValueError):
    """Adjacency row is not mirror-symmetric, so no circulant graph exists."""


class CostGuardError(Circ4Error, RuntimeError):
    """Full enumeration refused because 2^n is too large without an override."""


class RankDeficiencyError(Circ4Error, ValueError):
    """Generator rows are additively dependent; subset sums would revisit codewords."""
