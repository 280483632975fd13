"""Numerical tolerances used across the package.

All thresholds live in one immutable record. Functions accept ``tol=None``
and fall back to :data:`DEFAULT`; pass ``DEFAULT.replace(cluster=1e-6)`` or
similar to override a single value for one call.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # rows of an orthonormal set must satisfy |QQ^T - I| <= orth
    orth: float = 1e-10
    # relative rank threshold; None means max(rows, cols) * machine epsilon
    rank: float | None = None
    # two eigenvalues in [0, 1] belong to one principal value iff their gap <= cluster
    cluster: float = 1e-7
    # symmetric input accepted iff |A - A^T|_max <= symmetry * |A|_max
    symmetry: float = 1e-12
    # Jacobi stops when the off-diagonal Frobenius mass <= jacobi * |A|_F
    jacobi: float = 1e-14
    max_sweeps: int = 64
    # determinant/containment/orthogonality checks on the subspace level
    check: float = 1e-9
    # eigenvalue treated as zero iff |lambda| <= zero * |A|_max (inertia counts)
    zero: float = 1e-9

    def replace(self, **changes):
        return replace(self, **changes)


DEFAULT = Tolerances()


def resolve(tol):
    return DEFAULT if tol is None else tol
