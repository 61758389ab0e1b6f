"""Exception hierarchy shared by every module.

Every error carries a short machine-readable ``kind`` (used by the CLI to
emit structured JSON) plus the usual human-readable message.
"""

from __future__ import annotations


class TanvarError(Exception):
    """Base class for all engine errors."""

    kind = "Error"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail

    def to_json(self) -> dict:
        return {"error": {"kind": self.kind, "detail": self.detail}}


class ParseSyntaxError(TanvarError):
    kind = "SyntaxError"


class UnknownVariable(TanvarError):
    kind = "UnknownVariable"


class DimensionMismatch(TanvarError):
    kind = "DimensionMismatch"


class FieldMismatch(TanvarError):
    kind = "FieldMismatch"


class DegreeCapExceeded(TanvarError):
    kind = "DegreeCapExceeded"


class NotHomogeneous(TanvarError):
    kind = "NotHomogeneous"


class NotZeroDimensional(TanvarError):
    kind = "NotZeroDimensional"


class EliminantDegenerate(TanvarError):
    kind = "EliminantDegenerate"


class InvalidSpec(TanvarError):
    kind = "InvalidSpec"


class SmoothnessCheckFailed(TanvarError):
    kind = "SmoothnessCheckFailed"


class ImageDegenerate(TanvarError):
    kind = "ImageDegenerate"


class CenterContainsVariety(TanvarError):
    kind = "CenterContainsVariety"


class NotHypersurface(TanvarError):
    kind = "NotHypersurface"


class PointNotOnAmbient(TanvarError):
    kind = "PointNotOnAmbient"


class FiberNotFinite(TanvarError):
    kind = "FiberNotFinite"


class NoRegularPointFound(TanvarError):
    kind = "NoRegularPointFound"


class NotFinite(TanvarError):
    kind = "NotFinite"


class DisagreementAcrossTrials(TanvarError):
    kind = "DisagreementAcrossTrials"


class SliceSingularityHit(TanvarError):
    kind = "SliceSingularityHit"


class OddOrderedCount(TanvarError):
    kind = "OddOrderedCount"


class TangentFamilyDegenerate(TanvarError):
    kind = "TangentFamilyDegenerate"


class DegenerateFamily(TanvarError):
    kind = "DegenerateFamily"


class ManifestParseError(TanvarError):
    kind = "ManifestParseError"


class GenericityWarning(UserWarning):
    """Raised as a warning when repeated randomized trials disagree but a
    majority value still exists."""
