"""Linear subspaces of R^n and the angle between two of them.

The angle between subspaces of dimensions p <= q is defined through Gram
determinants::

    cos(phi) = sqrt(det(M M^T)) / (sqrt(G1) * sqrt(G2))

where ``M`` holds the inner products between the two bases and ``G1``,
``G2`` are the Gram determinants of those bases.
"""

from dataclasses import dataclass
from math import acos, sqrt

import numpy as np

from . import matcore
from .errors import DegenerateSubspaceError, DimensionError, MathError
from .tolerances import resolve


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of R^n given by spanning row vectors.

    ``ortho_basis`` is an orthonormal basis of the row span of ``raw_basis``
    and ``dim`` is its numerical rank. Build instances with
    :func:`make_subspace`.
    """

    ambient_dim: int
    raw_basis: np.ndarray
    ortho_basis: np.ndarray
    dim: int

    @property
    def projector(self):
        """Orthogonal projector onto the subspace, an n x n matrix."""
        return self.ortho_basis.T @ self.ortho_basis

    @property
    def raw_independent(self):
        return self.raw_basis.shape[0] == self.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


@dataclass(frozen=True)
class AngleResult:
    cos_phi: float
    phi: float
    det_mmt: float
    gamma1: float
    gamma2: float


def make_subspace(ambient_dim, spanning_rows, tol=None):
    rows = matcore.as_matrix(spanning_rows, "spanning_rows")
    if rows.shape[1] != ambient_dim:
        raise DimensionError(
            f"spanning rows have length {rows.shape[1]}, ambient dimension is {ambient_dim}"
        )
    basis, rank = matcore.orthonormalize(rows, tol)
    if rank == 0:
        raise DegenerateSubspaceError("degenerate subspace: spanning rows have rank 0")
    rows.setflags(write=False)
    basis.setflags(write=False)
    return Subspace(int(ambient_dim), rows, basis, rank)


def _from_orthonormal(rows):
    # internal shortcut for rows already known to be orthonormal
    rows = np.array(rows, dtype=float)
    rows.setflags(write=False)
    return Subspace(rows.shape[1], rows, rows, rows.shape[0])


def _check_pair(s1, s2):
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError(
            f"ambient dimensions differ: {s1.ambient_dim} vs {s2.ambient_dim}"
        )


def _basis(s, use_raw):
    if use_raw:
        if not s.raw_independent:
            raise DegenerateSubspaceError("raw basis rows are linearly dependent")
        return s.raw_basis
    return s.ortho_basis


def gram_determinant(s, use_raw=False):
    """Gram determinant of the raw or orthonormal basis of ``s``.

    Small negative round-off (down to -1e-12) is clamped to zero.
    """
    b = _basis(s, use_raw)
    g = matcore.determinant(b @ b.T)
    if g < -1e-12:
        raise MathError(f"Gram determinant is negative ({g:.3e})")
    return max(g, 0.0)


def cross_gram(s1, s2, use_raw=False):
    """The p x q matrix of inner products between the bases of ``s1`` and ``s2``."""
    _check_pair(s1, s2)
    return _basis(s1, use_raw) @ _basis(s2, use_raw).T


def angle_between(s1, s2):
    """Angle between two subspaces, acute representative.

    The pair is reordered so the first subspace is the smaller one, and
    orthonormal bases are used throughout; the formula is invariant under a
    change of basis, so nothing is lost.
    """
    _check_pair(s1, s2)
    if s1.dim > s2.dim:
        s1, s2 = s2, s1
    m = cross_gram(s1, s2)
    det_mmt = max(matcore.determinant(m @ m.T), 0.0)
    gamma1 = gram_determinant(s1)
    gamma2 = gram_determinant(s2)
    cos_phi = min(sqrt(det_mmt) / (sqrt(gamma1) * sqrt(gamma2)), 1.0)
    return AngleResult(cos_phi, acos(cos_phi), det_mmt, gamma1, gamma2)


def orthogonal_complement(s):
    if s.dim >= s.ambient_dim:
        raise DegenerateSubspaceError("complement is zero space")
    return _from_orthonormal(matcore.complete_basis(s.ortho_basis))


def is_subspace_of(s1, s2, tol=None):
    """True when every vector of ``s1`` lies in ``s2``.

    The projector residual of the basis of ``s1`` against ``s2`` decides;
    ``det(M M^T) == 1`` for orthonormal bases is required as well.
    """
    tol = resolve(tol)
    _check_pair(s1, s2)
    if s1.dim > s2.dim:
        return False
    b1 = s1.ortho_basis
    residual = matcore.max_abs(b1 - b1 @ s2.projector)
    m = cross_gram(s1, s2)
    det_mmt = matcore.determinant(m @ m.T)
    return residual <= tol.check and abs(det_mmt - 1.0) <= tol.check


def bordered_matrix_minors(x, rows):
    """Scalar minors of the bordered Gram matrix along its vector column.

    The bordered matrix has first row ``(0, (x,a1), ..., (x,ak))`` and rows
    ``(a_i, (a_i,a1), ..., (a_i,ak))``. Row 0's entry in the vector column is
    the zero vector, so only the k minors for rows 1..k are returned.
    """
    k = rows.shape[0]
    gram = rows @ rows.T
    top = rows @ x
    scalar_part = np.vstack([top, gram])
    return [matcore.determinant(np.delete(scalar_part, i, axis=0)) for i in range(1, k + 1)]


def project_gram(x, s):
    """Orthogonal projection of ``x`` onto ``s`` by expanding a bordered Gram determinant.

    Works with the raw spanning rows, which must be linearly independent.
    """
    x = matcore.as_vector(x, "x")
    if x.size != s.ambient_dim:
        raise DimensionError(f"vector has length {x.size}, ambient dimension is {s.ambient_dim}")
    rows = _basis(s, use_raw=True)
    gamma = gram_determinant(s, use_raw=True)
    if gamma <= 0.0:
        raise DegenerateSubspaceError("raw basis has zero Gram determinant")
    minors = bordered_matrix_minors(x, rows)
    # cofactor expansion down the first column; the vector a_i sits in row i
    expansion = np.zeros_like(x)
    for i, (a_i, minor) in enumerate(zip(rows, minors), start=1):
        expansion += (-1) ** i * minor * a_i
    return -expansion / gamma
