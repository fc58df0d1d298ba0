import os
from dataclasses import dataclass, field, fields, replace


def default_max_sweeps():
    """Jacobi sweep cap; ``DQSPECTRA_MAX_SWEEPS`` overrides the default of 64."""
    value = os.environ.get("DQSPECTRA_MAX_SWEEPS")
    if value is None or value == "":
        return 64
    n = int(value)
    if n < 1:
        raise ValueError("DQSPECTRA_MAX_SWEEPS must be a positive integer")
    return n


@dataclass(frozen=True)
class RunConfig:
    """Tolerances shared by the decompositions and the CLI.

    ``zero_tol`` decides zero vs. nonzero (and hence appreciable vs.
    infinitesimal) in floating point and is relative to the norm of the
    quantity being classified.  ``cluster_tol`` is the relative gap below which
    standard eigenvalues are merged into one cluster.  ``gap_tol`` is the
    absolute separation required by the simple-spectrum formulas.
    """

    residual_tol: float = 1e-9
    zero_tol: float = 1e-8
    cluster_tol: float = 1e-8
    gap_tol: float = 1e-3
    struct_tol: float = 1e-10
    seed: int = 0
    max_sweeps: int = field(default_factory=default_max_sweeps)

    def __post_init__(self):
        for f in fields(self):
            if f.name.endswith("_tol") and not getattr(self, f.name) > 0:
                raise ValueError(f"{f.name} must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be positive")

    def with_(self, **changes):
        return replace(self, **changes)


