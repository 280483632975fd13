"""Principal values and principal subspaces of a pair of subspaces.

For bases ``A1`` (p x n) and ``A2`` (q x n) with p <= q the matrix

    f(A1, A2) = A1 A2^T (A2 A2^T)^-1 A2 A1^T (A1 A1^T)^-1

has p eigenvalues in [0, 1], the squared cosines of the principal angles.
Its spectrum does not depend on the chosen bases. Distinct eigenvalues are
called principal values; each one owns a principal subspace on either side.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import matcore
from .errors import DegenerateSubspaceError, MathError
from .subspace import Subspace, _check_pair, _from_orthonormal, orthogonal_complement
from .tolerances import resolve


@dataclass(frozen=True)
class PrincipalSpectrum:
    """Distinct principal values (descending) with their multiplicities."""

    values: tuple
    multiplicities: tuple
    total: int

    def expanded(self):
        """Every value repeated by its multiplicity, descending."""
        return np.repeat(np.array(self.values, dtype=float), self.multiplicities)

    def multiplicity(self, value):
        """Multiplicity of an exact value (use 1.0 or 0.0, which are snapped)."""
        for v, r in zip(self.values, self.multiplicities):
            if v == value:
                return r
        return 0

    def interior(self):
        """``(value, multiplicity)`` pairs for values strictly inside (0, 1)."""
        return [(v, r) for v, r in zip(self.values, self.multiplicities) if 0.0 < v < 1.0]

    def product(self):
        return float(np.prod(self.expanded()))


@dataclass(frozen=True)
class PrincipalDecomposition:
    """Paired principal subspaces.

    ``pairs[i]`` holds the parts of the first and second subspace belonging
    to ``spectrum.values[i]``; both parts have equal dimension. When the two
    subspaces differ in dimension, the directions of the larger one that are
    left over (orthogonal to the whole smaller subspace) are kept in
    ``unmatched1`` or ``unmatched2``.
    """

    spectrum: PrincipalSpectrum
    pairs: list
    unmatched1: Subspace | None = None
    unmatched2: Subspace | None = None


class DualSpectra(NamedTuple):
    pair_spectrum: PrincipalSpectrum
    dual_spectrum: PrincipalSpectrum
    unit_mult_shift: int


def cluster_groups(eigenvalues, tol=None):
    """Group sorted eigenvalues into principal values.

    Values within ``tol.cluster`` of 1 or 0 are snapped there first; then
    neighbors closer than ``tol.cluster`` join the same group. Returns the
    clustered values (group means) and, per group, the indices into the
    input order.
    """
    tol = resolve(tol)
    eig = np.asarray(eigenvalues, dtype=float)
    if np.any(eig < -1e-9) or np.any(eig > 1.0 + 1e-9):
        raise MathError(f"principal values out of [0, 1]: {eig}")
    eig = np.clip(eig, 0.0, 1.0)
    eig = np.where(eig >= 1.0 - tol.cluster, 1.0, eig)
    eig = np.where(eig <= tol.cluster, 0.0, eig)
    order = np.argsort(-eig, kind="stable")
    groups = []
    for idx in order:
        if groups and eig[groups[-1][-1]] - eig[idx] <= tol.cluster:
            groups[-1].append(int(idx))
        else:
            groups.append([int(idx)])
    values = [float(np.mean(eig[g])) for g in groups]
    return values, groups


def spectrum_from_values(eigenvalues, tol=None):
    values, groups = cluster_groups(eigenvalues, tol)
    return PrincipalSpectrum(tuple(values), tuple(len(g) for g in groups), len(eigenvalues))


def f_matrix(a1, a2, tol=None):
    """The p x p matrix f(A1, A2) with the inverses applied by Cholesky solves."""
    a1 = matcore.as_matrix(a1, "a1")
    a2 = matcore.as_matrix(a2, "a2")
    if a1.shape[1] != a2.shape[1]:
        raise MathError(f"bases live in different spaces: {a1.shape} vs {a2.shape}")
    for name, a in (("a1", a1), ("a2", a2)):
        if matcore.orthonormalize(a, tol)[1] < a.shape[0]:
            raise DegenerateSubspaceError(f"{name} does not have full row rank")
    cross = a1 @ a2.T
    g1 = a1 @ a1.T
    g2 = a2 @ a2.T
    left = cross @ matcore.solve_spd(g2, cross.T)
    return matcore.solve_spd(g1, left.T).T


def _ordered(s1, s2):
    _check_pair(s1, s2)
    if s1.dim > s2.dim:
        return s2, s1, True
    return s1, s2, False


def _eigen_of_pair(b1, b2, tol):
    f = f_matrix(b1, b2, tol)
    return matcore.sym_eigen(0.5 * (f + f.T), tol)


def principal_spectrum(s1, s2, tol=None):
    """Principal values of the pair; ``total`` equals the smaller dimension."""
    small, large, _ = _ordered(s1, s2)
    eig = _eigen_of_pair(small.ortho_basis, large.ortho_basis, tol)
    return spectrum_from_values(eig.values, tol)


def principal_decomposition(s1, s2, tol=None):
    """Split both subspaces into mutually orthogonal principal subspaces.

    Parts of the smaller subspace come from the eigenvectors of f on its
    orthonormal basis. For a nonzero principal value c^2 the partner part is
    the normalized projection onto the other subspace, so that the paired
    vectors satisfy ``(x_u, y_v) = c * delta_uv``. What remains of the larger
    subspace is orthogonal to the smaller one and supplies the partner of the
    zero value and the unmatched directions.
    """
    tol = resolve(tol)
    small, large, swapped = _ordered(s1, s2)
    b1, b2 = small.ortho_basis, large.ortho_basis
    p, q = small.dim, large.dim
    eig = _eigen_of_pair(b1, b2, tol)
    values, groups = cluster_groups(eig.values, tol)
    m = b1 @ b2.T

    pairs = []
    used_coords = []
    zero_part = None
    for value, group in zip(values, groups):
        u = eig.vectors[:, group]
        part1 = u.T @ b1
        if value == 0.0:
            zero_part = part1
            continue
        coords = u.T @ m
        coords /= np.linalg.norm(coords, axis=1, keepdims=True)
        used_coords.append(coords)
        pairs.append((part1, coords @ b2))

    if used_coords:
        rest_coords = matcore.complete_basis(np.vstack(used_coords))
    else:
        rest_coords = np.eye(q)
    rest = rest_coords @ b2
    unmatched = None
    if zero_part is not None:
        r = zero_part.shape[0]
        pairs.append((zero_part, rest[:r]))
        rest = rest[r:]
    if rest.shape[0]:
        unmatched = _from_orthonormal(rest)

    spectrum = PrincipalSpectrum(tuple(values), tuple(len(g) for g in groups), p)
    built = [(_from_orthonormal(x), _from_orthonormal(y)) for x, y in pairs]
    if swapped:
        built = [(y, x) for x, y in built]
        return PrincipalDecomposition(spectrum, built, unmatched1=unmatched)
    return PrincipalDecomposition(spectrum, built, unmatched2=unmatched)


def max_angle_direction(s1, s2, tol=None):
    """A unit vector of ``s1`` whose squared cosine with ``s2`` is largest.

    Returns ``(direction, value)``; the value is the top principal value.
    """
    _check_pair(s1, s2)
    b1 = s1.ortho_basis
    m = b1 @ s2.ortho_basis.T
    eig = matcore.sym_eigen(m @ m.T, tol)
    values, _ = cluster_groups(eig.values, tol)
    direction = eig.vectors[:, 0] @ b1
    return direction / np.linalg.norm(direction), values[0]


def dual_principal_values(s1, s2, tol=None):
    """Spectra of the pair and of the pair of orthogonal complements.

    Values strictly between 0 and 1 coincide with equal multiplicities; the
    multiplicity of the value 1 changes by ``n - p - q`` (returned as
    ``unit_mult_shift``, positive when the complements share more).
    """
    tol = resolve(tol)
    _check_pair(s1, s2)
    n = s1.ambient_dim
    if s1.dim >= n or s2.dim >= n:
        raise DegenerateSubspaceError("complement is zero space")
    pair = principal_spectrum(s1, s2, tol)
    dual = principal_spectrum(orthogonal_complement(s1), orthogonal_complement(s2), tol)
    shift = n - s1.dim - s2.dim

    inner_pair, inner_dual = pair.interior(), dual.interior()
    same = [r for _, r in inner_pair] == [r for _, r in inner_dual] and all(
        abs(u - v) <= 1e-8 for (u, _), (v, _) in zip(inner_pair, inner_dual)
    )
    if not same:
        raise MathError(f"interior principal values differ: {inner_pair} vs {inner_dual}")
    if dual.multiplicity(1.0) - pair.multiplicity(1.0) != shift:
        raise MathError(
            f"multiplicity of 1 is {pair.multiplicity(1.0)} for the pair and "
            f"{dual.multiplicity(1.0)} for the complements, expected shift {shift}"
        )
    return DualSpectra(pair, dual, shift)
