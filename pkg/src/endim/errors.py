"""Exception types shared across the toolkit."""


class EndimError(Exception):
    """Base class for all toolkit errors."""


class UnsupportedDimensionError(EndimError):
    pass


class DimensionMismatchError(EndimError):
    pass


class EmptyShapeError(EndimError):
    pass


class InfeasibleAnnulusError(EndimError):
    """An annulus is too small for the number of points requested from it."""


class ScaleSelectionError(EndimError):
    """No scale sequence satisfying the required growth inequalities exists
    within the computed range."""


class MarginError(EndimError):
    """A block code was applied to a pattern that does not contain the
    required window around every output site."""

    def __init__(self, missing_points):
        self.missing_points = sorted(missing_points)
        super().__init__(f"pattern lacks window points {self.missing_points}")


class CoverageGapError(EndimError):
    """A family of clopen sets fails to cover the language on its base."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"uncovered pattern {witness!r}")


class InfeasibleCoverError(EndimError):
    """Set-cover instance with an element no set contains."""


class UnreachablePatternError(EndimError):
    """Requested codomain pattern is not in the codomain language."""


class DegenerateSystemError(EndimError):
    pass


class CapacityError(EndimError):
    """Request exceeds a hard representational limit (e.g. shattering
    vector space larger than 2**20)."""


class FactorSoundnessError(EndimError):
    """A declared factor map sends admissible patterns outside the declared
    codomain language."""


class ConfigError(EndimError):
    """Invalid experiment configuration; carries a JSON-pointer-ish path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


class InvariantViolationError(EndimError):
    """An internal consistency check failed; indicates a bug, not bad input."""
