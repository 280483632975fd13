"""Negative-eigenvalue counts of a symmetric form restricted to subspaces.

For a symmetric nonsingular A and a subspace L with orthonormal basis
columns V, and W spanning the complement L*, the number of negative
eigenvalues splits as

    ind(A) = ind(V^T A V) + ind(W^T A^-1 W)

provided both restrictions are nonsingular. As a consequence A is positive
definite as soon as both restricted forms are.
"""

from dataclasses import dataclass

import numpy as np

from . import matcore
from .errors import DimensionError, MathError, NotPositiveDefiniteError, PreconditionError, SingularMatrixError
from .subspace import orthogonal_complement
from .tolerances import resolve


@dataclass(frozen=True)
class InertiaReport:
    ind_full: int
    ind_restricted: int
    ind_complement: int
    additivity_holds: bool


def _symmetric(a, n, tol):
    a = matcore.as_matrix(a, "a")
    if a.shape != (n, n):
        raise DimensionError(f"form must be {n} x {n} to act on the subspace, got {a.shape}")
    if matcore.max_abs(a - a.T) > tol.symmetry * matcore.max_abs(a):
        raise MathError("form is not symmetric")
    return 0.5 * (a + a.T)


def _zero_threshold(a, tol):
    return tol.zero * matcore.max_abs(a)


def _negative_count(m, threshold, tol, what):
    values = matcore.sym_eigen(m, tol).values
    if np.any(np.abs(values) <= threshold):
        raise SingularMatrixError(f"singular restriction: {what} has an eigenvalue within {threshold:.1e} of 0")
    return int(np.sum(values < -threshold))


def restricted_index(a, l, tol=None):
    """Number of negative eigenvalues of ``V^T A V``, V the basis columns of ``l``."""
    tol = resolve(tol)
    a = _symmetric(a, l.ambient_dim, tol)
    v = l.ortho_basis.T
    return _negative_count(v.T @ a @ v, _zero_threshold(a, tol), tol, "V^T A V")


def inertia_split(a, l, tol=None):
    """All three counts of the splitting identity, each computed separately."""
    tol = resolve(tol)
    n = l.ambient_dim
    a = _symmetric(a, n, tol)
    threshold = _zero_threshold(a, tol)
    full = matcore.sym_eigen(a, tol).values
    if np.any(np.abs(full) <= threshold):
        raise SingularMatrixError("form is singular")
    ind_full = int(np.sum(full < -threshold))
    ind_restricted = restricted_index(a, l, tol)

    if l.dim == n:
        ind_complement = 0
    else:
        inv = matcore.inverse(a)
        inv = 0.5 * (inv + inv.T)
        w = orthogonal_complement(l).ortho_basis.T
        inv_threshold = tol.zero * matcore.max_abs(inv)
        ind_complement = _negative_count(w.T @ inv @ w, inv_threshold, tol, "W^T A^-1 W")
    holds = ind_full == ind_restricted + ind_complement
    return InertiaReport(ind_full, ind_restricted, ind_complement, holds)


def split_frame(a, l, tol=None):
    """The n x n matrix with columns ``A V`` followed by ``W``.

    It is nonsingular whenever ``V^T A V`` is: applying ``V^T`` to
    ``A V x + W y = 0`` leaves ``V^T A V x = 0``, so x and then y vanish.
    """
    tol = resolve(tol)
    a = _symmetric(a, l.ambient_dim, tol)
    v = l.ortho_basis.T
    if l.dim == l.ambient_dim:
        return a @ v
    return np.hstack([a @ v, orthogonal_complement(l).ortho_basis.T])


def positive_definite_by_split(a, l, tol=None):
    """True iff both ``V^T A V`` and ``W^T A^-1 W`` admit a Cholesky factor.

    A true answer is double-checked against the full spectrum of ``a``.
    """
    tol = resolve(tol)
    n = l.ambient_dim
    a = _symmetric(a, n, tol)
    if l.dim >= n:
        raise PreconditionError("subspace must be proper")
    v = l.ortho_basis.T
    w = orthogonal_complement(l).ortho_basis.T
    try:
        matcore.cholesky(v.T @ a @ v)
        inv = matcore.inverse(a)
        matcore.cholesky(w.T @ (0.5 * (inv + inv.T)) @ w)
    except NotPositiveDefiniteError:
        return False
    low = float(np.min(matcore.sym_eigen(a, tol).values))
    if not low > _zero_threshold(a, tol):
        raise MathError(f"split test accepted a form with smallest eigenvalue {low:.3e}")
    return True
