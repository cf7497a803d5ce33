class DomainError(ValueError):
    """Input outside the domain of an operation (as opposed to a usage error)."""


class WindowTooLarge(DomainError):
    pass


class NotSupersymmetric(DomainError):
    pass
