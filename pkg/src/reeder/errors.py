"""Exception hierarchy shared by all modules."""


class ReederError(Exception):
    """Base class for every error raised by this package."""


class InvalidTypeError(ReederError, ValueError):
    """Unknown series or rank out of bounds."""


class UnsupportedSubsetError(ReederError, ValueError):
    """A vertex subset whose induced diagram is not of finite type."""


class UnsupportedIsogenyError(ReederError):
    """The subgroup's fundamental group has even order."""


class UnsupportedFormError(ReederError):
    """A real form outside what a routine can handle (e.g. outer ambient)."""


class CapExceededError(ReederError):
    """Exhaustive enumeration would exceed the configured vertex cap."""


class CatalogError(ReederError, ValueError):
    """A real-form name that does not parse or has invalid parameters."""


class InvalidSpecError(ReederError, ValueError):
    """Inconsistent real-form data (non-involutive tau, stray coloring, ...)."""


class KacValidationError(ReederError, ValueError):
    """A Kac diagram violating the weighted-sum or shape condition."""


class NotAvailableError(ReederError):
    """No closed-form count is known for this form."""
