"""Exception types shared across the package.

Every domain error carries a short machine-readable code so the CLI can emit
structured error objects.
"""


class LietauError(Exception):
    code = "error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details

    def to_json(self):
        obj = {"error": self.code, "message": str(self)}
        if self.details:
            obj["details"] = {k: repr(v) for k, v in self.details.items()}
        return obj


class UnknownGeneratorError(LietauError):
    code = "unknown-generator"


class DimensionMismatchError(LietauError):
    code = "dimension-mismatch"


class PreconditionError(LietauError):
    code = "precondition-violation"


class DepthTooShallowError(LietauError):
    code = "depth-too-shallow"


class RelationViolatedError(LietauError):
    code = "relation-violated"


class WeightTooLowError(LietauError):
    code = "weight-too-low"


class NotIsotropicError(LietauError):
    code = "not-isotropic"


class NotDirectSummandError(LietauError):
    code = "not-a-direct-summand"


class GenusTooLargeError(LietauError):
    code = "genus-too-large"


class UnexpectedTorsionError(LietauError):
    # Torsion in a Labute quotient would invalidate the integer correction
    # step; it is surfaced loudly instead of being discarded.
    code = "unexpected-torsion"


class InternalFault(LietauError):
    code = "internal-fault"
