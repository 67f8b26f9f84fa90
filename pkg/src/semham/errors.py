"""Exception types shared across the package.

Every domain failure raises a distinct subclass of SemhamError so callers
(and the CLI exit-code mapping) can tell validation problems, non-physical
configurations, and file problems apart without parsing messages.
"""


class SemhamError(Exception):
    """Base class for all errors raised by this package."""


# --- vector construction and validation ---------------------------------

class ZeroVectorError(SemhamError, ValueError):
    """Input vector has (numerically) zero magnitude and cannot be normalized."""


class NonFiniteError(SemhamError, ValueError):
    """Input contains NaN or infinite entries."""


class DimensionTooSmallError(SemhamError, ValueError):
    """Embedding vectors need at least two dimensions."""


class DimensionMismatchError(SemhamError, ValueError):
    """Operands have incompatible dimensions."""


class NormOutOfRangeError(SemhamError, ValueError):
    """Vector norm deviates from 1 beyond the renormalization policy."""


class SimilarityOutOfRangeError(SemhamError, ValueError):
    """Similarity value lies outside [-1, 1] by more than round-off."""


# --- perturbation algebra ------------------------------------------------

class ConstraintViolatedError(SemhamError, ValueError):
    """Perturbation does not preserve the unit norm of the perturbed vector."""


class AllZeroError(SemhamError, ValueError):
    """No dimension is eligible for the smallest single-dimension flip."""


class DegenerateMultipliersError(SemhamError, ValueError):
    """Multiplier vector is identically zero."""


class NonPhysicalConfigurationError(SemhamError, ValueError):
    """Multipliers perfectly compensate the anchor (sum v_i a_i = 0)."""


# --- transition operators -------------------------------------------------

class NormBrokenError(SemhamError, ValueError):
    """Applying the operator left the unit hypersphere beyond tolerance."""


class NotUnitaryError(SemhamError, ValueError):
    """Basis-change matrix is not orthogonal within tolerance."""


# --- index handling -------------------------------------------------------

class IndexOutOfRangeError(SemhamError, IndexError):
    """Dimension index outside [0, dim)."""


class EqualIndicesError(SemhamError, ValueError):
    """Two distinct dimension indices are required."""


# --- dynamics --------------------------------------------------------------

class NonPositiveHbarError(SemhamError, ValueError):
    """The scaling constant hbar must be positive."""


class NonPositiveDtError(SemhamError, ValueError):
    """Finite-difference step must be positive."""


class EmptyCandidatesError(SemhamError, ValueError):
    """Zero-point search needs at least one candidate multiplier vector."""


class AllNonPhysicalError(SemhamError, ValueError):
    """Every candidate multiplier vector perfectly compensates the anchor."""


class BadRangeError(SemhamError, ValueError):
    """Invalid sampling range or step count."""


# --- file handling ----------------------------------------------------------

class ParseError(SemhamError, ValueError):
    """Embedding file is malformed (JSON, schema, or value level)."""


class DuplicateIdError(SemhamError, ValueError):
    """Two entries in an embedding file share an id."""


class UnknownIdError(SemhamError, KeyError):
    """Requested entry id is not present in the embedding file."""
