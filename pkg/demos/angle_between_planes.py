"""Angle between two planes in R^4, and what the Gram determinants say.

Two planes that tilt away from each other by the same angle in both
directions have a single principal value of multiplicity two. The overall
cosine is the product of the individual cosines, so it is cos^2 here.
"""

from math import cos, degrees, pi, sin

import numpy as np

from subspace_angles import angle_between, cross_gram, gram_determinant, is_subspace_of, make_subspace

phi = pi / 3
c, s = cos(phi), sin(phi)
floor = make_subspace(4, [[1, 0, 0, 0], [0, 1, 0, 0]])
tilted = make_subspace(4, [[c, 0, s, 0], [0, c, 0, s]])

r = angle_between(floor, tilted)
print(f"cos(phi) = {r.cos_phi:.12f}  (cos^2(pi/3) = {c * c:.12f})")
print(f"phi = {degrees(r.phi):.6f} degrees")

# the same numbers from raw, non-orthonormal spanning rows
skewed = make_subspace(4, [[c, 0, s, 0], [2 * c, c, 2 * s, s]])
m = cross_gram(floor, skewed, use_raw=True)
det_mmt = np.linalg.det(m @ m.T)
gammas = gram_determinant(floor, use_raw=True) * gram_determinant(skewed, use_raw=True)
print(f"det(MM^T) = {det_mmt:.6f} <= Gamma1 * Gamma2 = {gammas:.6f}")
print(f"ratio under the square root: {np.sqrt(det_mmt / gammas):.12f}")

# equality of the Gram bound detects containment
line = make_subspace(4, [[1, 1, 0, 0]])
print("line inside the floor plane:", is_subspace_of(line, floor))
print("line inside the tilted plane:", is_subspace_of(line, tilted))
