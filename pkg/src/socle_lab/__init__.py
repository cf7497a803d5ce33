"""Exact socle-filtration and Grothendieck-group computations for gl(m|n) category O."""

from .errors import DomainError, NotSupersymmetric, WindowTooLarge

__version__ = "0.1.0"

__all__ = ["DomainError", "NotSupersymmetric", "WindowTooLarge", "__version__"]
