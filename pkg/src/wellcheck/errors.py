"""Exception types shared across the package."""


class InputError(ValueError):
    """Invalid instance document or option; carries a path into the document."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class UnsupportedFamilyError(ValueError):
    """Operation not defined for the given perturbation family."""


class BudgetExceededError(RuntimeError):
    """Lattice search space exceeds the candidate budget."""


class VerificationError(RuntimeError):
    """A constructed witness or certificate failed its own re-verification."""
