"""Orthogonal projection written with bordered Gram determinants.

No normal equations are solved: the projection is a combination of the
spanning vectors with coefficients given by minors of the bordered Gram
matrix. It agrees with least squares to rounding.
"""

import numpy as np

from subspace_angles import make_subspace, project_gram

rng = np.random.default_rng(3)
rows = rng.standard_normal((3, 6))
x = rng.standard_normal(6)
xp = project_gram(x, make_subspace(6, rows))
coef, *_ = np.linalg.lstsq(rows.T, x, rcond=None)
print("bordered determinants:", np.round(xp, 10))
print("least squares:        ", np.round(coef @ rows, 10))
print("residual against each row:", np.round(rows @ (x - xp), 14))
