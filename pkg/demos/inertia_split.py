"""Counting negative eigenvalues piece by piece.

The negative eigenvalues of a symmetric nonsingular form split between its
restriction to a subspace L and the restriction of its inverse to the
complement of L. Both restrictions being positive definite forces the form
itself to be positive definite.
"""

import numpy as np

from subspace_angles import SingularMatrixError, inertia_split, make_subspace, positive_definite_by_split

rng = np.random.default_rng(11)
x = rng.standard_normal((6, 6))
a = x + x.T
l = make_subspace(6, rng.standard_normal((3, 6)))

try:
    r = inertia_split(a, l)
except SingularMatrixError as exc:
    raise SystemExit(f"pick another seed: {exc}")
print(f"negative eigenvalues: {r.ind_full} = {r.ind_restricted} on L + {r.ind_complement} on L*")
print("count by eigvalsh:", int(np.sum(np.linalg.eigvalsh(a) < 0)))

spd = x @ x.T + np.eye(6)
print("positive definite by split:", positive_definite_by_split(spd, l))
print("indefinite form:", positive_definite_by_split(a, l))
