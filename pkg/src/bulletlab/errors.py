"""Exceptions shared across the simulation kernels."""


class RunawayDiagramError(RuntimeError):
    """Raised when a simulation exceeds its event budget.

    Diagram construction is almost surely finite, but nothing at runtime
    proves that for arbitrary parameters, so the sweep counts its work and
    bails out rather than looping forever.
    """
