"""Canonical form of a pair of subspaces.

For subspaces S (dim p) and T (dim q) with p <= q and p + q <= n, there are
orthonormal bases of S, S*, T, T* (stars denote orthogonal complements)
whose mutual inner products form a fixed orthogonal n x n matrix that
depends only on the principal values. Rows of that matrix run over the
basis of S followed by the basis of S* in reverse order; columns over T
followed by T* in reverse. In block form::

    row\\col  | T:1   c_1..c_s      0    ext | T*: 0'   c_s..c_1   1'
    ---------+-----------------------------+--------------------------
    S: 1     | I                           |
       c_i   |       c_i I                 |           d_i I'
       0     |                             |  I'
    S*: ext  |                         I   |
       0'    |                     I'      |
       c_i'  |      -d_i I'                |           c_i I
       1'    |                             |                      I

with ``d_i = sqrt(1 - c_i^2)`` and ``I'`` the anti-diagonal identity. The
block sizes are the multiplicities r_0 (value 1), r_1..r_s, r_{s+1}
(value 0), ``q - p`` and ``r_0' = r_0 + n - p - q``.
"""

from dataclasses import dataclass
from math import sqrt
from typing import NamedTuple

import numpy as np

from . import matcore
from .errors import DegenerateSubspaceError, PreconditionError
from .principal import _eigen_of_pair, cluster_groups
from .subspace import Subspace, _check_pair, make_subspace, orthogonal_complement
from .tolerances import resolve


@dataclass(frozen=True)
class CanonicalSpec:
    """Block structure of a canonical matrix.

    ``values`` are the cosines strictly between 0 and 1, descending, with
    ``multiplicities``; ``r0`` counts the value 1 and ``r_last`` the value 0.
    """

    n: int
    p: int
    q: int
    values: tuple = ()
    multiplicities: tuple = ()
    r0: int = 0
    r_last: int = 0

    @property
    def r0_prime(self):
        return self.r0 + self.n - self.p - self.q

    @property
    def extra(self):
        return self.q - self.p

    @property
    def sines(self):
        return tuple(sqrt(max(1.0 - c * c, 0.0)) for c in self.values)

    def squared_values(self):
        """All p principal values c^2 with multiplicity, descending."""
        inner = np.repeat(np.square(self.values), self.multiplicities)
        return np.concatenate([np.ones(self.r0), inner, np.zeros(self.r_last)])

    def validate(self):
        n, p, q = self.n, self.p, self.q
        if not (1 <= p <= q <= n):
            raise PreconditionError(f"need 1 <= p <= q <= n, got n={n}, p={p}, q={q}")
        if p + q > n:
            raise PreconditionError(f"layout needs p + q <= n, got p + q = {p + q} > n = {n}")
        if len(self.values) != len(self.multiplicities):
            raise PreconditionError("values and multiplicities differ in length")
        if any(r < 1 for r in self.multiplicities) or self.r0 < 0 or self.r_last < 0:
            raise PreconditionError("multiplicities must be positive")
        if self.r0 + sum(self.multiplicities) + self.r_last != p:
            raise PreconditionError(
                f"r0 + sum(r_i) + r_last = "
                f"{self.r0 + sum(self.multiplicities) + self.r_last} differs from p = {p}"
            )
        vals = list(self.values)
        if any(not 0.0 < c < 1.0 for c in vals):
            raise PreconditionError("interior values must lie strictly between 0 and 1")
        if any(a <= b for a, b in zip(vals, vals[1:])):
            raise PreconditionError("values must be strictly descending")
        return self

    def block_sizes(self):
        """Sizes of the row (equivalently column) blocks of the canonical matrix."""
        mid = list(self.multiplicities)
        return [self.r0, *mid, self.r_last, self.extra, self.r_last, *mid[::-1], self.r0_prime]


@dataclass(frozen=True)
class CanonicalForm:
    """Ordered orthonormal bases of S, S*, T, T* and their canonical matrix.

    ``sigma_source`` and ``pi_source`` say which input the roles S and T
    were taken from ("s1", "s2", or a complement "s1*", "s2*").
    """

    spec: CanonicalSpec
    matrixP: np.ndarray
    basis_sigma: np.ndarray
    basis_sigma_star: np.ndarray
    basis_pi: np.ndarray
    basis_pi_star: np.ndarray
    sigma_source: str = "s1"
    pi_source: str = "s2"

    def row_vectors(self):
        return np.vstack([self.basis_sigma, self.basis_sigma_star[::-1]])

    def column_vectors(self):
        return np.vstack([self.basis_pi, self.basis_pi_star[::-1]])

    def inner_products(self):
        return self.row_vectors() @ self.column_vectors().T


class SynthesizedPair(NamedTuple):
    first: Subspace
    second: Subspace
    dualized: bool


def canonical_spec(n, p, q, squared_values, tol=None):
    """Cluster ``p`` squared cosines into a :class:`CanonicalSpec`."""
    values, groups = cluster_groups(squared_values, tol)
    r0 = r_last = 0
    inner, mults = [], []
    for v, g in zip(values, groups):
        if v == 1.0:
            r0 = len(g)
        elif v == 0.0:
            r_last = len(g)
        else:
            inner.append(sqrt(v))
            mults.append(len(g))
    return CanonicalSpec(n, p, q, tuple(inner), tuple(mults), r0, r_last).validate()


def _slices(sizes):
    out, start = [], 0
    for size in sizes:
        out.append(slice(start, start + size))
        start += size
    return out


def build_canonical_matrix(spec):
    spec.validate()
    s = len(spec.values)
    blocks = _slices(spec.block_sizes())
    # block index of: value-1 block, interior i, value-0 block, extra, and mirrored ones
    one, zero, ext = 0, s + 1, s + 2
    zero_star, one_star = s + 3, 2 * s + 4

    def inner(i):
        return i + 1

    def inner_star(i):
        return 2 * s + 3 - i

    P = np.zeros((spec.n, spec.n))

    def put(r, c, block):
        P[blocks[r], blocks[c]] = block

    anti = lambda k: np.fliplr(np.eye(k))  # noqa: E731
    put(one, one, np.eye(spec.r0))
    for i, (c, d, r) in enumerate(zip(spec.values, spec.sines, spec.multiplicities)):
        put(inner(i), inner(i), c * np.eye(r))
        put(inner(i), inner_star(i), d * anti(r))
        put(inner_star(i), inner(i), -d * anti(r))
        put(inner_star(i), inner_star(i), c * np.eye(r))
    put(zero, zero_star, anti(spec.r_last))
    put(ext, ext, np.eye(spec.extra))
    put(zero_star, zero, anti(spec.r_last))
    put(one_star, one_star, np.eye(spec.r0_prime))
    return P


def _star(source):
    return source[:-1] if source.endswith("*") else source + "*"


def _normalize_pair(s1, s2):
    # returns (S, T, sources) with dim S <= dim T and dim S + dim T <= n
    n = s1.ambient_dim
    if s1.dim >= n or s2.dim >= n:
        raise PreconditionError("canonical form needs two proper subspaces")
    sig, pi_, src = s1, s2, ("s1", "s2")
    if sig.dim > pi_.dim:
        sig, pi_, src = pi_, sig, src[::-1]
    if sig.dim + pi_.dim > n:
        sig, pi_ = orthogonal_complement(pi_), orthogonal_complement(sig)
        src = (_star(src[1]), _star(src[0]))
    return sig, pi_, src


def canonical_bases(s1, s2, tol=None):
    """Canonical bases and matrix for a pair of subspaces.

    The pair is first brought to ``p <= q`` (by swapping) and ``p + q <= n``
    (by passing to the complements); the roles actually used are recorded in
    ``sigma_source``/``pi_source``. Vectors are fixed in the order: basis of
    S, then T, then S*, then T*.
    """
    tol = resolve(tol)
    _check_pair(s1, s2)
    sig, pi_, (sigma_source, pi_source) = _normalize_pair(s1, s2)
    n, p, q = sig.ambient_dim, sig.dim, pi_.dim
    b1, b2 = sig.ortho_basis, pi_.ortho_basis
    eig = _eigen_of_pair(b1, b2, tol)
    values, groups = cluster_groups(eig.values, tol)
    m = b1 @ b2.T

    a_parts, b_parts, w_parts, bstar_parts, used = [], [], [], [], []
    a_last = np.zeros((0, n))
    inner_c, inner_r, r0 = [], [], 0
    for value, group in zip(values, groups):
        u = eig.vectors[:, group]
        a = u.T @ b1
        if value == 0.0:
            a_last = a
            continue
        coords = u.T @ m
        coords /= np.linalg.norm(coords, axis=1, keepdims=True)
        used.append(coords)
        b = coords @ b2
        a_parts.append(a)
        b_parts.append(b)
        if value == 1.0:
            r0 = len(group)
            continue
        inner_c.append(sqrt(value))
        inner_r.append(len(group))
        # component of b orthogonal to S, normalized
        w = b - (b @ b1.T) @ b1
        w /= np.linalg.norm(w, axis=1, keepdims=True)
        cos_b = np.sum(a * b, axis=1, keepdims=True)
        sin_b = np.sqrt(np.clip(1.0 - cos_b**2, 0.0, None))
        w_parts.append(-w)
        bstar_parts.append(sin_b * a - cos_b * w)
    rest_coords = matcore.complete_basis(np.vstack(used)) if used else np.eye(q)
    rest = rest_coords @ b2
    r_last = a_last.shape[0]
    b_last, b_ext = rest[:r_last], rest[r_last:]

    basis_sigma = np.vstack(a_parts + [a_last])
    basis_pi = np.vstack(b_parts + [b_last, b_ext])
    partial_star = np.vstack(w_parts + [b_last, b_ext[::-1]])
    known = np.vstack([basis_sigma, partial_star])
    a_star0 = matcore.complete_basis(known)
    basis_sigma_star = np.vstack([a_star0, partial_star])
    basis_pi_star = np.vstack([a_star0] + bstar_parts + [a_last])

    spec = CanonicalSpec(n, p, q, tuple(inner_c), tuple(inner_r), r0, r_last).validate()
    form = CanonicalForm(
        spec,
        np.zeros((n, n)),
        basis_sigma,
        basis_sigma_star,
        basis_pi,
        basis_pi_star,
        sigma_source,
        pi_source,
    )
    return _with_matrix(form, form.inner_products())


def _with_matrix(form, P):
    return CanonicalForm(
        form.spec,
        P,
        form.basis_sigma,
        form.basis_sigma_star,
        form.basis_pi,
        form.basis_pi_star,
        form.sigma_source,
        form.pi_source,
    )


def dual_permutation(cf):
    """Canonical form of the pair (S, T*), read off by permuting ``cf``.

    Principal values become ``1 - c_i^2`` with the same multiplicities; the
    blocks of size ``q - p`` and ``n - p - q`` trade places. The returned
    matrix is a row and column permutation of ``cf.matrixP``. It agrees with
    :func:`build_canonical_matrix` of the new spec up to the sign of the rows
    belonging to the interior values of S*.
    """
    spec = cf.spec
    n, p, q = spec.n, spec.p, spec.q
    r0, rl, r0p, ext = spec.r0, spec.r_last, spec.r0_prime, spec.extra
    mults = list(spec.multiplicities)

    def runs(start, sizes):
        out = []
        for size in sizes:
            out.append(np.arange(start, start + size))
            start += size
        return out

    # forward block indices inside each basis
    sig_0, *sig_mid, sig_last = runs(0, [r0, *mults, rl])
    ss_0, *ss_rest = runs(0, [r0p, *mults, rl, ext])
    ss_mid, ss_last, ss_ext = ss_rest[:-2], ss_rest[-2], ss_rest[-1]
    pi_0, *pi_rest = runs(0, [r0, *mults, rl, ext])
    pi_mid, pi_last, pi_ext = pi_rest[:-2], pi_rest[-2], pi_rest[-1]
    ps_0, *ps_rest = runs(0, [r0p, *mults, rl])
    ps_mid, ps_last = ps_rest[:-1], ps_rest[-1]

    cat = np.concatenate
    new_sig = cat([sig_last, *sig_mid[::-1], sig_0])
    new_sig_star = cat([ss_last, ss_ext, *ss_mid[::-1], ss_0[:r0], ss_0[r0:][::-1]])
    new_pi = cat([ps_last, *ps_mid[::-1], ps_0])
    new_pi_star = cat([pi_last, pi_ext[::-1], *pi_mid[::-1], pi_0])

    # positions in the ordered row/column lists of cf
    def row_pos_sigma(k):
        return k

    def row_pos_star(k):
        return p + (n - p - 1 - k)

    def col_pos_star(k):
        return q + (n - q - 1 - k)

    new_q = n - q
    row_order = cat([row_pos_sigma(new_sig), row_pos_star(new_sig_star)[::-1]])
    # the new T is the old T*, the new T* is the old T
    col_order = cat([col_pos_star(new_pi), new_pi_star[::-1]])

    new_spec = CanonicalSpec(
        n,
        p,
        new_q,
        tuple(spec.sines[::-1]),
        tuple(mults[::-1]),
        rl,
        r0,
    ).validate()
    rows = cf.row_vectors()[row_order]
    cols = cf.column_vectors()[col_order]
    return CanonicalForm(
        new_spec,
        cf.matrixP[np.ix_(row_order, col_order)],
        rows[:p],
        rows[p:][::-1],
        cols[:new_q],
        cols[new_q:][::-1],
        cf.sigma_source,
        _star(cf.pi_source),
    )


def synthesize_pair(n, p, q, squared_values, tol=None):
    """Two subspaces of R^n, of dimensions p <= q, with prescribed principal values.

    The first subspace is spanned by the first p axis vectors; the second by
    the first q columns of the canonical matrix. When ``p + q > n`` the pair
    is built from the canonical matrix of the complements, which requires at
    least ``p + q - n`` of the values to equal 1; ``dualized`` reports this.
    """
    n, p, q = int(n), int(p), int(q)
    if not (1 <= p <= q <= n):
        raise PreconditionError(f"need 1 <= p <= q <= n, got n={n}, p={p}, q={q}")
    vals = np.asarray(squared_values, dtype=float).reshape(-1)
    if vals.size != p:
        raise PreconditionError(f"expected {p} squared values, got {vals.size}")
    if not np.all(np.isfinite(vals)) or np.any(vals < 0.0) or np.any(vals > 1.0):
        raise PreconditionError("squared values must lie in [0, 1]")

    eye = np.eye(n)
    if p + q <= n:
        P = build_canonical_matrix(canonical_spec(n, p, q, vals, tol))
        return SynthesizedPair(make_subspace(n, eye[:p]), make_subspace(n, P[:, :q].T), False)

    forced = p + q - n
    tol_ = resolve(tol)
    ones = np.flatnonzero(vals >= 1.0 - tol_.cluster)
    if ones.size < forced:
        raise PreconditionError(
            f"p + q - n = {forced} but only {ones.size} of the values equal 1; "
            "two subspaces this large must share that many dimensions"
        )
    if q == n:
        return SynthesizedPair(make_subspace(n, eye[:p]), make_subspace(n, eye), True)
    rest = np.delete(vals, ones[:forced])
    dp, dq = n - q, n - p
    P = build_canonical_matrix(canonical_spec(n, dp, dq, rest, tol))
    first = make_subspace(n, P[:, dq:].T)
    second = make_subspace(n, eye[dp:])
    return SynthesizedPair(first, second, True)


def frame_map(cf_from, cf_to):
    """Orthogonal map (acting on row vectors) carrying one canonical frame to another."""
    src = np.vstack([cf_from.basis_sigma, cf_from.basis_sigma_star])
    dst = np.vstack([cf_to.basis_sigma, cf_to.basis_sigma_star])
    if src.shape != dst.shape:
        raise DegenerateSubspaceError("frames have different sizes")
    return src.T @ dst
