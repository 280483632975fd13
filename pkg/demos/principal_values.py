"""Principal values of a random pair, checked against an SVD.

The principal values are the distinct eigenvalues of f(A1, A2); they do
not depend on the bases used. The orthogonal complements share every value
strictly between 0 and 1, and only the multiplicity of 1 moves.
"""

import numpy as np

from subspace_angles import (
    dual_principal_values,
    make_subspace,
    max_angle_direction,
    principal_decomposition,
    principal_spectrum,
)

rng = np.random.default_rng(7)
n = 7
s1 = make_subspace(n, rng.standard_normal((2, n)))
s2 = make_subspace(n, rng.standard_normal((3, n)))

spec = principal_spectrum(s1, s2)
svd = np.linalg.svd(s1.ortho_basis @ s2.ortho_basis.T, compute_uv=False) ** 2
print("principal values:", np.round(spec.values, 12))
print("squared singular values:", np.round(svd, 12))

direction, top = max_angle_direction(s1, s2)
reach = np.linalg.norm(direction @ s2.ortho_basis.T) ** 2
print(f"best direction reaches cos^2 = {reach:.12f} (top value {top:.12f})")

d = principal_decomposition(s1, s2)
for value, (x, y) in zip(d.spectrum.values, d.pairs):
    print(f"value {value:.6f}: x.y = {float(x.ortho_basis[0] @ y.ortho_basis[0]):.6f}")

dual = dual_principal_values(s1, s2)
print("complements:", dual.dual_spectrum.values, dual.dual_spectrum.multiplicities)
print("value 1 gains", dual.unit_mult_shift, "in multiplicity")
