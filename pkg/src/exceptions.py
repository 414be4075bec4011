"""Error hierarchy shared by every stage of the pipeline."""


class LieTheoryError(Exception):
    """Base class for all errors raised by the package."""


class RootSystemError(LieTheoryError):
    """Inadmissible type or rank, mismatched root systems, bad subsystems."""


class RepresentationError(LieTheoryError):
    """Malformed, non-dominant or unparsable weights and module labels."""


class InstanceTooLargeError(RepresentationError):
    """A brute-force oracle was asked for an instance above its size guard."""


class OrbitError(LieTheoryError):
    """Orbit data requested for a zero weight or an empty module."""


class RealFormError(LieTheoryError):
    """Unknown real-form names or gradings over the wrong algebra."""


class GoldenDataError(LieTheoryError):
    """The golden data file is missing or does not match its schema."""


class ClassificationViolation(LieTheoryError):
    """A computed result disagrees with the golden data or a theorem."""
