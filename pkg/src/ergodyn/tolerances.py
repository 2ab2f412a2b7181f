"""Numeric tolerances used across the package.

The values are standard double-precision compromises.  Every emitted report
embeds the active tolerance set so results are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class Tolerances:
    tol_fix: float = 1e-10        # fixed-point residual |f(p) - p|
    tol_root: float = 1e-12       # root residual |f(x) - y|
    tol_crit: float = 1e-8        # |f'(x)| below which a point counts as critical
    tol_hyp: float = 1e-6         # hyperbolicity margin around modulus 1
    tol_escape: float = 1e-12     # slack before an iterate counts as escaped
    tol_ineq: float = 1e-8        # slack tolerance for inequality certificates
    fd_step: float = 1e-6         # central finite-difference step
    r_metric: int = 40            # truncation depth of the prehistory metric
    tail_target: float = 1e-12    # target for discounted-sum truncation tails

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT = Tolerances()

#: Global RNG seed used when a config does not override it.
DEFAULT_SEED = 0x5EED
