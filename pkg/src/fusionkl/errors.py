"""Exception hierarchy.

Every error carries a short machine-readable ``code`` so the CLI can emit
``{"error": code, "message": ...}`` without string matching.
"""


class FusionError(Exception):
    code = "FusionError"

    def to_json(self) -> dict:
        return {"error": self.code, "message": str(self)}


class InvalidLevel(FusionError, ValueError):
    code = "InvalidLevel"


class UnsupportedP(InvalidLevel):
    code = "UnsupportedP"


class BadQ(InvalidLevel):
    code = "BadQ"


class NonCoprime(InvalidLevel):
    code = "NonCoprime"


class InvalidArgument(FusionError, ValueError):
    code = "InvalidArgument"


class MixedLevels(FusionError, ValueError):
    code = "MixedLevels"


class UnsupportedLabel(FusionError):
    code = "UnsupportedLabel"


class UnsupportedPair(FusionError):
    code = "UnsupportedPair"


class UnsupportedHom(FusionError):
    code = "UnsupportedHom"


class NotProjective(FusionError):
    code = "NotProjective"


class NotTilting(FusionError):
    code = "NotTilting"


class InternalNonNegativity(FusionError, AssertionError):
    code = "InternalNonNegativity"


class QuantumIntegerZero(FusionError, ZeroDivisionError):
    code = "QuantumIntegerZero"


class StrandMismatch(FusionError, ValueError):
    code = "StrandMismatch"


class NonConvergent(FusionError, ArithmeticError):
    code = "NonConvergent"


class BadParameter(FusionError, ValueError):
    code = "BadParameter"


class PoleAt(FusionError, ValueError):
    code = "PoleAt"


class UnsupportedLogCase(FusionError):
    code = "UnsupportedLogCase"


class IndexLimitExceeded(FusionError):
    code = "IndexLimitExceeded"
