"""Exception types shared across the package."""


class SgkError(Exception):
    """Base class for all package errors."""


class GeneratorCountMismatch(SgkError):
    pass


class NotHomogeneous(SgkError):
    pass


class MixedDegrees(SgkError):
    pass


class SliceMismatch(SgkError):
    pass


class SliceTooLarge(SgkError):
    """Raised when a degree slice would exceed the dense-coordinate guardrail."""


class CapExceeded(SgkError):
    def __init__(self, cap: int):
        super().__init__(f"lattice closure exceeded cap of {cap} elements")
        self.cap = cap


class NotDistributiveInput(SgkError):
    pass


class CertificateFailure(SgkError):
    """A constructed adapted basis failed verification.

    This is surfaced loudly instead of being patched: it means the explicit
    construction (not the generic lattice machinery) produced a wrong set.
    """


class ParseError(SgkError):
    pass


class UnknownGenerator(ParseError):
    pass


class ZeroRelation(SgkError):
    pass


class NotPBWShape(SgkError):
    pass


class ShapeMismatch(SgkError):
    pass


class UnknownCatalogEntry(SgkError):
    pass


class RelationWithConstantTerm(SgkError):
    pass


class WeightedGradingUnsupported(SgkError):
    pass
