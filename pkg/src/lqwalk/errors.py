"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """A numerical invariant was violated (norm drift, loss of unitarity,
    ill-conditioned eigenbasis). Distinct from ValueError so the CLI can map
    it to its own exit code."""
