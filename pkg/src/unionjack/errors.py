"""Exception types raised across the package."""


class SizeError(ValueError):
    """Lattice or cycle dimensions are too small to give a simple graph."""


class ConvergenceError(RuntimeError):
    """A numerical routine stopped before meeting its tolerance."""


class OrderCapError(ValueError):
    """A dense matrix exceeds the configured order cap."""
