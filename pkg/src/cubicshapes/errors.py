"""Exception types shared across the package."""


class PrecisionError(ArithmeticError):
    """An enclosure is too wide to decide a comparison; retry with more bits."""


class NotTotallyReal(ValueError):
    """The cubic does not have three distinct real roots."""


class NonIntegralCoefficients(ValueError):
    """A family polynomial came out with a non-integral coefficient."""

    def __init__(self, which, value):
        super().__init__(f"coefficient {which} = {value} is not an integer")
        self.which = which
        self.value = value


class NotAUnit(ValueError):
    """An element expected to be a unit has norm outside {1, -1}."""


class CertificateNotApplicable(ValueError):
    """The discriminant is too small for the regulator/discriminant test."""


class InconclusiveCertificate(RuntimeError):
    """The fundamental-unit certificate could not be established."""


class ConsistencyError(AssertionError):
    """Two independent computations of the same quantity disagree."""
