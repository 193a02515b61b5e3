"""Exact decision procedures for rank-one completion of partial tensors.

Everything runs in exact arithmetic (arbitrary-precision integers and
fractions); no floating point enters any decision.

Capabilities
------------
- completability of a partial tensor over the complex numbers (circuit
  binomials), the reals (sign systems over GF(2)), and uniqueness /
  finiteness of completions (matroid closure, lattice saturation);
- exact enumeration of all real rank-one completions, with values kept
  as signed monomials in the observed entries;
- integer Smith normal form, exact rational and GF(2) solvers;
- univariate Sturm sequences, real root counting, derivative-sign
  interval thresholds; sparse multivariate polynomials over Q;
- the Jacobian determinant factorization for simplex-parametrized
  observation patterns with as many observations as parameters, and the
  exact membership test for the 2x2x2 antidiagonal pattern;
- the full inequality description of the completable region of observed
  diagonals, with a rigorous n-th-root-sum oracle.
"""

from .completability import (
    CompletabilityReport,
    analyze,
    is_complex_completable,
    is_real_completable,
    is_uniquely_completable,
)
from .completion import (
    Completion,
    SignedMonomial,
    complete_entry,
    count_complex_completions,
    enumerate_real_completions,
    witness_is_rank_one,
)
from .cyclotomic import CyclotomicInt, cyclotomic_poly
from .diagonal import (
    DiagonalDescription,
    RootSumVerdict,
    build_description,
    diagonal_membership,
    nth_root_sum_oracle,
)
from .jacobian import (
    JacobianFactorization,
    SimplexParametrization,
    antidiag222_boundary_polynomial,
    antidiag222_constraint_poly,
    antidiag222_sign_conditions,
    graph_ideal_generators,
    jacobian_determinant_poly,
    jacobian_identity_check,
    linear_factor,
    simplex_membership_antidiag222,
    simplex_parametrization,
)
from .linalg import (
    SmithForm,
    det_fraction,
    det_int,
    f2_matrix,
    fraction_matrix,
    int_matrix,
    rank,
    rational_kernel_basis,
    smith_normal_form,
    solve_f2,
    solve_rational,
)
from .multipoly import MultiPoly
from .poly import (
    SturmSequence,
    UniPoly,
    count_real_roots,
    min_threshold_all_derivs_nonneg,
    rational_roots,
    sturm_sequence,
)
from .segre import (
    Circuit,
    SegreMatrix,
    circuits,
    circuits_of_matrix,
    matroid_closure,
    restricted_matrix,
    saturation_index,
    saturation_index_of,
    segre_matrix,
)
from .tensor import (
    IndexDomain,
    PartialTensor,
    Slice,
    StripResult,
    is_rank_one,
    is_zero_consistent,
    rank_one_tensor,
    strip_zero_slices,
)

__version__ = "0.1.0"
