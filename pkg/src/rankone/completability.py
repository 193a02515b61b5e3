"""Decision layer: complex, real, finite, and unique completability.

A partial tensor with nonzero entries extends to a complex rank-one
tensor iff it satisfies the binomial equation of every circuit among its
observed indices; with zeros, the tensor must additionally be
zero-consistent and the test runs on the zero-stripped core.  Real
completability on top of that depends only on the signs of the entries
and reduces to solvability of a linear system over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InternalConsistencyError,
    NotComplexCompletableError,
    NotRealCompletableError,
)
from .linalg import smith_normal_form, solve_f2
from .segre import (
    Circuit,
    circuits,
    matroid_closure,
    restricted_matrix,
    saturation_index_of,
)
from .tensor import (
    PartialTensor,
    StripResult,
    is_zero_consistent,
    strip_zero_slices,
)


def circuit_satisfied(values: dict, circuit: Circuit) -> bool:
    """Exact check of the binomial equation of one circuit."""
    lhs = rhs = 1
    for idx, u in zip(circuit.support, circuit.vector):
        if u > 0:
            lhs *= values[idx] ** u
        elif u < 0:
            rhs *= values[idx] ** (-u)
    return lhs == rhs


def violated_circuit(t: PartialTensor) -> Circuit | None:
    """First violated circuit among the observed indices (enumerative)."""
    for c in circuits(t.domain, t.sorted_indices()):
        if not circuit_satisfied(t.entries, c):
            return c
    return None


def _lattice_consistent(t: PartialTensor) -> bool:
    """Membership of a nonzero-entry tensor in the circuit variety.

    Equivalent to satisfying every circuit binomial, but polynomial time:
    the trailing right-transform columns of the Smith decomposition are a
    lattice basis of the kernel of A_E, and it suffices that every basis
    relation evaluates to one.
    """
    observed = t.sorted_indices()
    if len(observed) <= 1:
        return True
    a_e = restricted_matrix(t.domain, observed)
    snf = smith_normal_form(a_e)
    nrank = len(snf.elementary_divisors)
    for col in range(nrank, a_e.shape[1]):
        prod = 1
        for pos, e in enumerate(observed):
            exp = int(snf.V[pos, col])
            if exp:
                prod *= t.entries[e] ** exp
        if prod != 1:
            return False
    return True


def is_complex_completable(t: PartialTensor) -> tuple[bool, Circuit | None]:
    """Whether t extends to a complex rank-one tensor.

    Must be zero-consistent, and the zero-stripped core must satisfy the
    binomial equation of every circuit among its observed indices.
    Returns (True, None) or (False, witness); the witness is a violated
    circuit (labels refer to the original index grid) when the failure is
    algebraic rather than a zero-consistency defect.  Witness search is
    enumerative, so it is subject to the circuit column cap; the decision
    itself is not.
    """
    if not is_zero_consistent(t):
        return False, None
    sr = strip_zero_slices(t)
    if _lattice_consistent(sr.tensor):
        return True, None
    bad = violated_circuit(sr.tensor)
    if bad is None:
        raise InternalConsistencyError(
            "kernel lattice relation fails but every circuit is satisfied"
        )
    return False, Circuit(
        support=tuple(sr.to_original_index(i) for i in bad.support),
        vector=bad.vector,
    )


def _sign_bits(t: PartialTensor) -> list[int]:
    return [1 if t.entries[i] < 0 else 0 for i in t.sorted_indices()]


def sign_system_matrix(t: PartialTensor):
    """GF(2) matrix of the sign constraints: rows = entries, cols = parameters.

    Shape is kept explicit so an empty observation set still reports every
    parameter as a free sign.
    """
    import numpy as np

    a_e = restricted_matrix(t.domain, t.sorted_indices())
    nparams, nobs = a_e.shape
    m2 = np.zeros((nobs, nparams), dtype=np.uint8)
    for r in range(nobs):
        for c in range(nparams):
            m2[r, c] = int(a_e[c, r]) & 1
    return m2


def is_real_completable(t: PartialTensor) -> bool:
    """Whether a complex-completable t extends to a real rank-one tensor.

    Depends only on the signs of the entries: the parameter sign bits must
    solve the entry-sign system over GF(2).  Raises if t is not
    complex-completable.
    """
    ok, _ = is_complex_completable(t)
    if not ok:
        raise NotComplexCompletableError("tensor is not complex-completable")
    sr = strip_zero_slices(t)
    core = sr.tensor
    if not core.entries:
        return True
    result = solve_f2(sign_system_matrix(core), _sign_bits(core)) is not None
    index = saturation_index_of(core.domain, core.sorted_indices())
    if index % 2 == 1 and not result:
        raise InternalConsistencyError(
            "odd saturation index must imply real completability"
        )
    return result


def is_uniquely_completable(t: PartialTensor, field: str) -> bool:
    """Unique completability over ``field`` ("complex" or "real").

    Requires completability over the field.  Decided on the zero-stripped
    core: all core entries must be finitely determined and the column
    lattice saturated (complex) or of odd saturation index (real).
    Stripped zero slices are recompleted by zeros.
    """
    if field not in ("complex", "real"):
        raise ValueError("field must be 'complex' or 'real'")
    ok, _ = is_complex_completable(t)
    if not ok:
        raise NotComplexCompletableError("tensor is not complex-completable")
    if field == "real" and not is_real_completable(t):
        raise NotRealCompletableError("tensor is not real-completable")
    sr = strip_zero_slices(t)
    core = sr.tensor
    observed = core.sorted_indices()
    closure = matroid_closure(core.domain, observed)
    if len(closure) != core.domain.size:
        return False
    index = saturation_index_of(core.domain, observed)
    return index == 1 if field == "complex" else index % 2 == 1


@dataclass(frozen=True)
class CompletabilityReport:
    """Full decision record for one partial tensor.

    ``finitely_completable_entries`` is the matroid closure of the observed
    index set, i.e. the generically finitely determined entries; special
    tensors may determine more.  ``saturation_index`` refers to the
    zero-stripped core.  Fields are None when their precondition fails.
    """

    zero_consistent: bool
    complex_completable: bool
    real_completable: bool | None = None
    finitely_completable_entries: frozenset | None = None
    uniquely_completable_complex: bool | None = None
    uniquely_completable_real: bool | None = None
    saturation_index: int | None = None
    failing_circuit: Circuit | None = None


def analyze(t: PartialTensor) -> CompletabilityReport:
    """Run every decision and collect the results."""
    if not is_zero_consistent(t):
        return CompletabilityReport(zero_consistent=False, complex_completable=False)
    closure = matroid_closure(t.domain, t.sorted_indices())
    sr: StripResult = strip_zero_slices(t)
    core = sr.tensor
    index = saturation_index_of(core.domain, core.sorted_indices())
    ok, witness = is_complex_completable(t)
    if not ok:
        return CompletabilityReport(
            zero_consistent=True,
            complex_completable=False,
            finitely_completable_entries=closure,
            uniquely_completable_complex=False,
            uniquely_completable_real=False,
            saturation_index=index,
            failing_circuit=witness,
        )
    real = is_real_completable(t)
    unique_c = is_uniquely_completable(t, "complex")
    unique_r = is_uniquely_completable(t, "real") if real else False
    return CompletabilityReport(
        zero_consistent=True,
        complex_completable=True,
        real_completable=real,
        finitely_completable_entries=closure,
        uniquely_completable_complex=unique_c,
        uniquely_completable_real=unique_r,
        saturation_index=index,
    )
