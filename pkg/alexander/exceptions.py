# exceptions.py


class AlgebraError(Exception):
    """Base class for every failure raised by the alexander library."""


class ResourceLimit(AlgebraError):
    """A configured computation cap (minor count) would be exceeded."""


class StepLimit(AlgebraError):
    """The reduction loop ran past its step cap.

    Reduction always terminates on finitely generated abelian groups, so
    hitting this means a bug, not a hard input.
    """


class IllDefined(AlgebraError):
    """A matrix does not define a homomorphism between presented groups."""


class NotInduced(AlgebraError):
    """A homomorphism does not descend to the requested quotients."""


class LatticeError(AlgebraError):
    """Lattice pair extraction failed; ``reason`` is a short code."""

    reason = "LatticeError"

    def __str__(self):
        detail = super().__str__()
        return f"{self.reason}: {detail}" if detail else self.reason


class NotFree(LatticeError):
    reason = "NotFree"


class RankMismatch(LatticeError):
    reason = "RankMismatch"


class Singular(LatticeError):
    reason = "Singular"


class InputError(AlgebraError):
    """A malformed input file; the message names the line or field."""
