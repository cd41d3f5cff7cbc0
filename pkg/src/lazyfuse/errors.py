"""Exception types raised across the package."""


class LazyFuseError(Exception):
    """Base class for all lazyfuse errors."""


class IncompatibleShapes(LazyFuseError):
    """Operand shapes cannot be broadcast together."""


class ShapeMismatch(LazyFuseError):
    """Shapes violate an operation's structural requirements."""


class DTypeMismatch(LazyFuseError):
    """An operand has a dtype the operation cannot accept."""


class UnsupportedDType(LazyFuseError):
    """A dtype outside the supported set (f32/f64/i32/i64/bool8)."""


class BadAxis(LazyFuseError):
    """An axis index or permutation is invalid for the operand rank."""


class OutOfBounds(LazyFuseError):
    """A linear or multi-index lies outside its iteration domain."""


class AlreadyMaterializedWithDifferentData(LazyFuseError):
    """A node was materialized twice with different values."""


class UnsupportedNodeInFusedStep(LazyFuseError):
    """A reduction/scan/library node appeared in a fused-step interior."""


class NpyFormatError(LazyFuseError):
    """File is not an accepted npy v1.0 tensor."""


class VerificationFailed(LazyFuseError):
    """A benchmark result exceeded its tolerance against the oracle."""
