"""Dense real matrix kernels.

Matrices are plain 2-D float64 ``numpy.ndarray`` values; vectors are rows.
numpy is used for storage and elementwise arithmetic only. The
factorizations (LU, Cholesky, pivoted Gram-Schmidt, cyclic Jacobi) are
written out here so that the rest of the package does not depend on
LAPACK and can be checked against it independently.
"""

from typing import NamedTuple

import numpy as np

from .errors import (
    ConvergenceError,
    DimensionError,
    MathError,
    NotPositiveDefiniteError,
    SingularMatrixError,
)
from .tolerances import resolve

EPS = np.finfo(float).eps


class EigenPair(NamedTuple):
    """Eigenvalues sorted descending and the matching eigenvectors as columns."""

    values: np.ndarray
    vectors: np.ndarray


def as_matrix(a, name="matrix"):
    """Validate and copy ``a`` into a finite 2-D float array with no empty axis."""
    m = np.array(a, dtype=float)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"{name} must be a non-empty 2-D array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise MathError(f"{name} contains NaN or Inf")
    return m


def as_vector(x, name="vector"):
    v = np.array(x, dtype=float).reshape(-1)
    if v.size < 1:
        raise DimensionError(f"{name} is empty")
    if not np.all(np.isfinite(v)):
        raise MathError(f"{name} contains NaN or Inf")
    return v


def max_abs(a):
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


def multiply(a, b):
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def _require_square(a, what):
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"{what} needs a square matrix, got {a.shape}")


def lu_factor(a):
    """Doolittle LU with partial pivoting.

    Returns ``(lu, perm, sign)`` where ``lu`` packs L (unit diagonal, strictly
    lower part) and U, ``perm`` is the row permutation and ``sign`` its parity.
    A zero pivot column is left in place; the caller decides what that means.
    """
    lu = as_matrix(a)
    _require_square(lu, "LU")
    n = lu.shape[0]
    perm = np.arange(n)
    sign = 1.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(lu[k:, k])))
        if piv != k:
            lu[[k, piv]] = lu[[piv, k]]
            perm[[k, piv]] = perm[[piv, k]]
            sign = -sign
        if lu[k, k] == 0.0:
            continue
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm, sign


def determinant(a):
    lu, _, sign = lu_factor(a)
    return float(sign * np.prod(np.diag(lu)))


def solve(a, rhs):
    """Solve ``a x = rhs`` for general square ``a`` by pivoted LU."""
    lu, perm, _ = lu_factor(a)
    n = lu.shape[0]
    diag = np.abs(np.diag(lu))
    if np.min(diag) <= n * EPS * max(max_abs(lu), 1e-300):
        raise SingularMatrixError("matrix is numerically singular")
    b = np.array(rhs, dtype=float)
    vec = b.ndim == 1
    b = b.reshape(n, -1)[perm]
    for i in range(n):
        b[i] -= lu[i, :i] @ b[:i]
    for i in range(n - 1, -1, -1):
        b[i] = (b[i] - lu[i, i + 1:] @ b[i + 1:]) / lu[i, i]
    return b[:, 0] if vec else b


def inverse(a):
    """Columns of the inverse by solving against each axis vector."""
    a = as_matrix(a)
    _require_square(a, "inverse")
    return solve(a, np.eye(a.shape[0]))


def cholesky(a):
    """Lower Cholesky factor of a symmetric positive definite matrix."""
    a = as_matrix(a)
    _require_square(a, "Cholesky")
    n = a.shape[0]
    low = np.zeros_like(a)
    for j in range(n):
        pivot = a[j, j] - low[j, :j] @ low[j, :j]
        if not pivot > 0.0:
            raise NotPositiveDefiniteError(f"nonpositive pivot {pivot:.3e} at index {j}")
        low[j, j] = np.sqrt(pivot)
        low[j + 1:, j] = (a[j + 1:, j] - low[j + 1:, :j] @ low[j, :j]) / low[j, j]
    return low


def solve_spd(a, rhs):
    """Solve ``a x = rhs`` for symmetric positive definite ``a`` via Cholesky."""
    low = cholesky(a)
    n = low.shape[0]
    b = np.array(rhs, dtype=float)
    vec = b.ndim == 1
    b = b.reshape(n, -1).copy()
    if b.shape[0] != n:
        raise DimensionError(f"rhs has {b.shape[0]} rows, expected {n}")
    for i in range(n):
        b[i] = (b[i] - low[i, :i] @ b[:i]) / low[i, i]
    for i in range(n - 1, -1, -1):
        b[i] = (b[i] - low[i + 1:, i] @ b[i + 1:]) / low[i, i]
    return b[:, 0] if vec else b


def _pivoted_gram_schmidt(work, limit, max_rank):
    # Picks the remaining row of largest norm (earliest index on near ties),
    # normalizes it and removes it from the rest; two projection passes keep
    # the result orthonormal to working precision.
    basis = []
    work = work.copy()
    alive = np.ones(work.shape[0], dtype=bool)
    while len(basis) < max_rank:
        norms = np.where(alive, np.sqrt(np.einsum("ij,ij->i", work, work)), -1.0)
        top = norms.max()
        if top <= limit:
            break
        k = int(np.flatnonzero(norms >= top * (1.0 - 1e-10))[0])
        q = work[k] / norms[k]
        for prev in basis:
            q -= (q @ prev) * prev
        q /= np.linalg.norm(q)
        basis.append(q)
        alive[k] = False
        work -= np.outer(work @ q, q)
        work[~alive] = 0.0
    return basis


def orthonormalize(rows, tol=None):
    """Orthonormal basis of the row span of ``rows`` and its numerical rank.

    Rank is decided during column-pivoted elimination: a residual row is
    discarded once its norm falls to ``max(rows, cols) * eps * (largest input
    row norm)``. An all-zero input gives rank 0 and a ``(0, cols)`` basis.
    """
    tol = resolve(tol)
    m = as_matrix(rows, "rows")
    norms = np.sqrt(np.einsum("ij,ij->i", m, m))
    scale = float(norms.max())
    rel = tol.rank if tol.rank is not None else max(m.shape) * EPS
    basis = _pivoted_gram_schmidt(m, rel * scale, min(m.shape)) if scale > 0 else []
    if not basis:
        return np.zeros((0, m.shape[1])), 0
    return np.array(basis), len(basis)


def complete_basis(basis):
    """Extend orthonormal rows ``basis`` (k x n) to an orthonormal frame of R^n.

    Returns only the ``n - k`` new rows, obtained by running the pivoted
    elimination on the axis vectors with the span of ``basis`` projected out.
    """
    basis = np.asarray(basis, dtype=float).reshape(-1, np.shape(basis)[-1])
    k, n = basis.shape
    if k >= n:
        return np.zeros((0, n))
    residual = np.eye(n) - basis.T @ basis
    extra = _pivoted_gram_schmidt(residual, 0.0, n - k)
    extra = np.array(extra)
    # one more pass against the given rows guards against leakage
    extra -= (extra @ basis.T) @ basis
    extra, rank = orthonormalize(extra)
    if rank != n - k:
        raise MathError("failed to complete an orthonormal frame")
    return extra


def sym_eigen(a, tol=None):
    """Full spectrum of a symmetric matrix by cyclic Jacobi rotations.

    The input is symmetrized by averaging with its transpose. Sweeps continue
    until the off-diagonal Frobenius mass drops to ``tol.jacobi * |A|_F``.
    """
    tol = resolve(tol)
    a = as_matrix(a)
    _require_square(a, "sym_eigen")
    scale = max_abs(a)
    if max_abs(a - a.T) > tol.symmetry * scale:
        raise MathError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    n = a.shape[0]
    v = np.eye(n)
    target = tol.jacobi * np.linalg.norm(a)
    diag_mask = np.eye(n, dtype=bool)
    sweeps = 0
    while True:
        off = np.sqrt(np.sum(a[~diag_mask] ** 2))
        if off <= target:
            break
        if sweeps >= tol.max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge after {sweeps} sweeps", sweeps)
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p].copy(), a[q].copy()
                a[p], a[q] = c * rp - s * rq, s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p], a[:, q] = c * cp - s * cq, s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p], v[:, q] = c * vp - s * vq, s * vp + c * vq
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return EigenPair(values[order], v[:, order])


def singular_values(a, tol=None):
    """Singular values, descending, as square roots of the smaller Gram spectrum."""
    a = as_matrix(a)
    gram = a @ a.T if a.shape[0] <= a.shape[1] else a.T @ a
    values = sym_eigen(gram, tol).values
    return np.sqrt(np.clip(values, 0.0, None))
