"""Angles, principal values and canonical forms of pairs of subspaces of R^n."""

from .canonical import (
    CanonicalForm,
    CanonicalSpec,
    SynthesizedPair,
    build_canonical_matrix,
    canonical_bases,
    canonical_spec,
    dual_permutation,
    frame_map,
    synthesize_pair,
)
from .errors import (
    ConvergenceError,
    DegenerateSubspaceError,
    DimensionError,
    MathError,
    NotPositiveDefiniteError,
    PreconditionError,
    SingularMatrixError,
)
from .inertia import InertiaReport, inertia_split, positive_definite_by_split, restricted_index, split_frame
from .principal import (
    DualSpectra,
    PrincipalDecomposition,
    PrincipalSpectrum,
    dual_principal_values,
    f_matrix,
    max_angle_direction,
    principal_decomposition,
    principal_spectrum,
)
from .subspace import (
    AngleResult,
    Subspace,
    angle_between,
    bordered_matrix_minors,
    cross_gram,
    gram_determinant,
    is_subspace_of,
    make_subspace,
    orthogonal_complement,
    project_gram,
)
from .tolerances import DEFAULT, Tolerances

__version__ = "0.1.0"
