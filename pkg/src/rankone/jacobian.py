"""Simplex-parametrized tensors with as many observations as parameters:
the Jacobian determinant factors as a monomial in the parameter linear
forms times a polynomial of degree at most one, read off the kernel of an
incidence matrix.  Includes the exact Sturm-based membership test for the
2x2x2 antidiagonal observation pattern.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateIndexSetError
from .linalg import det_fraction, det_int, int_matrix
from .multipoly import MultiPoly
from .poly import UniPoly, count_real_roots, sturm_sequence
from .tensor import IndexDomain


def _theta_name(j: int, k: int) -> str:
    return f"th{j}_{k}"


def _x_name(idx) -> str:
    if all(i <= 9 for i in idx):
        return "x" + "".join(str(i) for i in idx)
    return "x" + "_".join(str(i) for i in idx)


@dataclass(frozen=True)
class SimplexParametrization:
    """Observation pattern with |E| = sum(d_j - 1) over simplex parameters.

    Axis j carries free parameters th{j}_1 .. th{j}_{d_j-1}; the last
    level's linear form is 1 minus their sum.  Coordinate i of the map is
    the product of its per-axis linear forms.
    """

    domain: IndexDomain
    observed: tuple[tuple[int, ...], ...]
    variables: tuple[str, ...]
    linear_forms: dict
    coordinates: dict

    @property
    def alpha(self) -> dict:
        """alpha(j, k): how often parameter level (j, k) occurs in the pattern."""
        counts = {
            (j + 1, k): 0
            for j, d in enumerate(self.domain.dims)
            for k in range(1, d + 1)
        }
        for idx in self.observed:
            for j, i in enumerate(idx):
                counts[(j + 1, i)] += 1
        return counts

    @property
    def degenerate(self) -> bool:
        """True when some maximal slice is never observed."""
        return any(a == 0 for a in self.alpha.values())


def simplex_parametrization(domain: IndexDomain, observed) -> SimplexParametrization:
    # Listing order is preserved: it fixes the row order of the incidence
    # matrix and thereby the sign of the pinned linear factor.
    observed = tuple(tuple(i) for i in observed)
    if len(set(observed)) != len(observed):
        raise ValueError("duplicate observed index")
    expected = sum(d - 1 for d in domain.dims)
    if len(observed) != expected:
        raise ValueError(
            f"need exactly {expected} observed entries, got {len(observed)}"
        )
    for idx in observed:
        if idx not in domain:
            raise ValueError(f"index {idx} outside domain {domain.dims}")
    variables = tuple(
        _theta_name(j + 1, k)
        for j, d in enumerate(domain.dims)
        for k in range(1, d)
    )
    forms = {}
    for j, d in enumerate(domain.dims):
        acc = MultiPoly.constant(variables, 1)
        for k in range(1, d):
            v = MultiPoly.variable(variables, _theta_name(j + 1, k))
            forms[(j + 1, k)] = v
            acc = acc - v
        forms[(j + 1, d)] = acc
    coords = {}
    for idx in observed:
        p = MultiPoly.constant(variables, 1)
        for j, i in enumerate(idx):
            p = p * forms[(j + 1, i)]
        coords[idx] = p
    return SimplexParametrization(
        domain=domain,
        observed=observed,
        variables=variables,
        linear_forms=forms,
        coordinates=coords,
    )


@dataclass(frozen=True)
class JacobianFactorization:
    """det(J) == linear_factor * monomial_factor, with deg(linear_factor) <= 1."""

    alpha: dict
    monomial_factor: MultiPoly
    linear_factor: MultiPoly
    incidence: tuple  # rows of the reduced incidence matrix (with ones column)
    kernel_vector: tuple[int, ...]


def reduced_incidence_matrix(p: SimplexParametrization):
    """Rows = observed indices, columns = free parameters (j, k<d_j);
    entry 1 iff the index has level k on axis j.  Returns (matrix, labels)."""
    labels = [
        (j + 1, k) for j, d in enumerate(p.domain.dims) for k in range(1, d)
    ]
    rows = []
    for idx in p.observed:
        rows.append([1 if idx[j - 1] == k else 0 for (j, k) in labels])
    return int_matrix(rows), labels


def linear_factor(p: SimplexParametrization) -> JacobianFactorization:
    """The complete Jacobian determinant factorization for the pattern.

    The kernel of the incidence matrix extended by an all-ones column is
    one-dimensional; its entries are the coefficients (and constant term)
    of the linear factor.  The kernel vector is computed as signed maximal
    minors, which pins the scale: the constant term equals the determinant
    of the reduced incidence matrix.
    """
    alpha = p.alpha
    if p.degenerate:
        missing = sorted(jk for jk, a in alpha.items() if a == 0)
        raise DegenerateIndexSetError(
            f"pattern misses maximal slices {missing}; every (axis, level) must occur"
        )
    b_tilde, labels = reduced_incidence_matrix(p)
    m = len(p.observed)
    rows = [[int(b_tilde[i, j]) for j in range(m)] + [1] for i in range(m)]
    b_full = int_matrix(rows)
    w = []
    for drop in range(m + 1):
        keep = [c for c in range(m + 1) if c != drop]
        minor = det_int(b_full[:, keep])
        w.append((-1) ** (m - drop) * minor)
    if all(x == 0 for x in w):
        raise DegenerateIndexSetError(
            "incidence matrix is rank-deficient; the completable region has empty interior"
        )
    terms = {(0,) * len(p.variables): Fraction(w[-1])}
    for pos, (j, k) in enumerate(labels):
        e = [0] * len(p.variables)
        e[p.variables.index(_theta_name(j, k))] = 1
        terms[tuple(e)] = Fraction(w[pos])
    l_e = MultiPoly(p.variables, terms)
    monomial = MultiPoly.constant(p.variables, 1)
    for jk, a in alpha.items():
        if a > 1:
            monomial = monomial * p.linear_forms[jk] ** (a - 1)
    return JacobianFactorization(
        alpha=alpha,
        monomial_factor=monomial,
        linear_factor=l_e,
        incidence=tuple(tuple(r) for r in rows),
        kernel_vector=tuple(w),
    )


def _jacobian_entry_value(p, idx, j, k, form_values) -> Fraction:
    d_j = p.domain.dims[j - 1]
    level = idx[j - 1]
    if level == k:
        dcoef = 1
    elif level == d_j:
        dcoef = -1
    else:
        return Fraction(0)
    prod = Fraction(dcoef)
    for m, i in enumerate(idx):
        if m != j - 1:
            prod *= form_values[(m + 1, i)]
    return prod


def evaluate_jacobian(p: SimplexParametrization, point: dict):
    """The Jacobian matrix of the coordinate map at an exact point."""
    form_values = {jk: f.evaluate(point) for jk, f in p.linear_forms.items()}
    labels = [
        (j + 1, k) for j, d in enumerate(p.domain.dims) for k in range(1, d)
    ]
    rows = []
    for idx in p.observed:
        rows.append(
            [_jacobian_entry_value(p, idx, j, k, form_values) for (j, k) in labels]
        )
    return rows, form_values


def jacobian_identity_check(
    p: SimplexParametrization,
    f: JacobianFactorization,
    trials: int = 20,
    seed: int | None = None,
) -> bool:
    """Compare det(J) with the claimed factorization at random rational points.

    Exact evaluation at every point; with 20 or more points from a large
    rational box a disagreement of these polynomials would be detected
    with overwhelming probability.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = random.Random(seed)
    from .linalg import fraction_matrix

    for _ in range(trials):
        point = {
            v: Fraction(rng.randint(-999, 999), rng.randint(1, 40))
            for v in p.variables
        }
        rows, form_values = evaluate_jacobian(p, point)
        det = det_fraction(fraction_matrix(rows))
        rhs = f.linear_factor.evaluate(point)
        for jk, a in f.alpha.items():
            if a > 1:
                rhs *= form_values[jk] ** (a - 1)
        if det != rhs:
            return False
    return True


def jacobian_determinant_poly(p: SimplexParametrization) -> MultiPoly:
    """det(J) expanded symbolically (cofactor expansion; desk scale only)."""
    labels = [
        (j + 1, k) for j, d in enumerate(p.domain.dims) for k in range(1, d)
    ]
    d_of = {j + 1: d for j, d in enumerate(p.domain.dims)}

    def entry(idx, jk) -> MultiPoly:
        j, k = jk
        level = idx[j - 1]
        if level == k:
            dcoef = 1
        elif level == d_of[j]:
            dcoef = -1
        else:
            return MultiPoly.zero(p.variables)
        prod = MultiPoly.constant(p.variables, dcoef)
        for m, i in enumerate(idx):
            if m != j - 1:
                prod = prod * p.linear_forms[(m + 1, i)]
        return prod

    matrix = [[entry(idx, jk) for jk in labels] for idx in p.observed]

    def det(rows, cols):
        if not cols:
            return MultiPoly.constant(p.variables, 1)
        r = rows[0]
        acc = MultiPoly.zero(p.variables)
        for pos, c in enumerate(cols):
            piece = matrix[r][c]
            if piece.is_zero:
                continue
            sub = det(rows[1:], cols[:pos] + cols[pos + 1 :])
            term = piece * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        return acc

    n = len(p.observed)
    return det(list(range(n)), list(range(n)))


def graph_ideal_generators(p: SimplexParametrization) -> list[MultiPoly]:
    """Generators x_i - p_i of the vanishing ideal of the graph of the map,
    over the joint roster (observation variables first, then parameters).
    Feeding these plus the linear factor to an elimination engine yields
    the boundary hypersurface; no elimination is performed here."""
    xvars = tuple(_x_name(idx) for idx in p.observed)
    roster = xvars + p.variables
    gens = []
    for idx, xv in zip(p.observed, xvars):
        gens.append(
            MultiPoly.variable(roster, xv) - p.coordinates[idx].with_variables(roster)
        )
    return gens


# ---------------------------------------------------------------------------
# The worked 2x2x2 antidiagonal membership test
# ---------------------------------------------------------------------------

ANTIDIAG222_PATTERN = ((1, 1, 2), (1, 2, 1), (2, 1, 1))


def antidiag222_constraint_poly(x112, x121, x211) -> UniPoly:
    """Entries of a rank-one completion sum to one iff the unobserved corner
    entry x solves this cubic (after clearing x^2)."""
    a, b, c = Fraction(x112), Fraction(x121), Fraction(x211)
    e1 = a + b + c
    e2 = a * b + a * c + b * c
    e3 = a * b * c
    return UniPoly.from_coeffs([e3, e2, e1 - 1, 1])


def simplex_membership_antidiag222(x112, x121, x211) -> bool:
    """Whether observations at (1,1,2), (1,2,1), (2,1,1) extend to a
    rank-one probability tensor.

    Strictly positive observations force a positive corner entry, so
    membership is an exact Sturm root count of the constraint cubic on
    (0, 1].  A zero observation forces a vertex parameter and reduces to a
    2x2 matrix problem on the two complementary entries u, v, with exact
    condition sqrt(u) + sqrt(v) <= 1.
    """
    a, b, c = Fraction(x112), Fraction(x121), Fraction(x211)
    if min(a, b, c) < 0:
        return False
    if a == 0 or b == 0 or c == 0:
        if a == 0:
            u, v = b, c
        elif b == 0:
            u, v = a, c
        else:
            u, v = a, b
        return u + v <= 1 and (1 - u - v) ** 2 >= 4 * u * v
    f0 = antidiag222_constraint_poly(a, b, c)
    return count_real_roots(f0, 0, 1) >= 1


def antidiag222_sign_conditions(x112, x121, x211):
    """The interior sign-condition shortcut: (mu, sigma, verdict) or None.

    Applicable only for strictly positive observations with e_1 < 1 and a
    generic Sturm chain (length 4 with linear third element); then the
    constraint cubic has a root in (0, 1] iff both signs are nonnegative.
    The authoritative decision remains the root count.
    """
    a, b, c = Fraction(x112), Fraction(x121), Fraction(x211)
    if min(a, b, c) <= 0 or a + b + c >= 1:
        return None
    chain = sturm_sequence(antidiag222_constraint_poly(a, b, c))
    if len(chain) != 4 or chain[2].degree != 1 or chain[3].degree != 0:
        return None
    mu = chain[2](Fraction(1))
    sigma = chain[3](Fraction(0))
    return mu, sigma, (mu >= 0 and sigma >= 0)


def antidiag222_boundary_polynomial() -> MultiPoly:
    """The irreducible boundary hypersurface of the completable region for
    the 2x2x2 antidiagonal pattern, in variables (x112, x121, x211).

    Hard-coded expansion; the suite cross-checks it against the cleared
    numerator of the Sturm constant of the constraint cubic.
    """
    # exponents are (x112, x121, x211)
    terms = {
        # degree 6
        (0, 2, 4): 1, (0, 3, 3): -2, (0, 4, 2): 1,
        (1, 1, 4): -2, (1, 2, 3): 2, (1, 3, 2): 2, (1, 4, 1): -2,
        (2, 0, 4): 1, (2, 1, 3): 2, (2, 2, 2): -6, (2, 3, 1): 2, (2, 4, 0): 1,
        (3, 0, 3): -2, (3, 1, 2): 2, (3, 2, 1): 2, (3, 3, 0): -2,
        (4, 0, 2): 1, (4, 1, 1): -2, (4, 2, 0): 1,
        # degree 5
        (0, 2, 3): -2, (0, 3, 2): -2,
        (1, 1, 3): 8, (1, 2, 2): -4, (1, 3, 1): 8,
        (2, 0, 3): -2, (2, 1, 2): -4, (2, 2, 1): -4, (2, 3, 0): -2,
        (3, 0, 2): -2, (3, 1, 1): 8, (3, 2, 0): -2,
        # degree 4
        (0, 2, 2): 1,
        (1, 1, 2): -10, (1, 2, 1): -10,
        (2, 0, 2): 1, (2, 1, 1): -10, (2, 2, 0): 1,
        # degree 3
        (1, 1, 1): 4,
    }
    return MultiPoly(("x112", "x121", "x211"), {e: Fraction(c) for e, c in terms.items()})
