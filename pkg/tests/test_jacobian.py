import itertools
import random
from fractions import Fraction

import pytest

from rankone.errors import DegenerateIndexSetError
from rankone.jacobian import (
    antidiag222_boundary_polynomial,
    antidiag222_constraint_poly,
    antidiag222_sign_conditions,
    evaluate_jacobian,
    graph_ideal_generators,
    jacobian_determinant_poly,
    jacobian_identity_check,
    linear_factor,
    simplex_membership_antidiag222,
    simplex_parametrization,
)
from rankone.linalg import det_fraction, det_int, fraction_matrix, int_matrix
from rankone.multipoly import MultiPoly
from rankone.poly import sturm_sequence
from rankone.tensor import IndexDomain

REFERENCE_PATTERN = [(2, 1, 1), (1, 2, 1), (1, 1, 2)]


def reference_parametrization():
    return simplex_parametrization(IndexDomain((2, 2, 2)), REFERENCE_PATTERN)


def test_incidence_and_kernel_golden():
    fac = linear_factor(reference_parametrization())
    assert fac.incidence == ((0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1))
    assert fac.kernel_vector == (-1, -1, -1, 2)


def test_linear_factor_golden():
    p = reference_parametrization()
    fac = linear_factor(p)
    lin = fac.linear_factor
    assert lin.constant_term() == 2
    for name in ("th1_1", "th2_1", "th3_1"):
        e = [0] * 3
        e[p.variables.index(name)] = 1
        assert lin.coefficient(tuple(e)) == -1
    assert lin.to_text() == "-th1_1 - th2_1 - th3_1 + 2"
    assert fac.monomial_factor.to_text() == "th1_1*th2_1*th3_1"
    assert fac.alpha == {
        (1, 1): 2, (1, 2): 1, (2, 1): 2, (2, 2): 1, (3, 1): 2, (3, 2): 1,
    }


def test_constant_term_equals_incidence_determinant():
    p = reference_parametrization()
    fac = linear_factor(p)
    b_tilde = int_matrix([row[:-1] for row in fac.incidence])
    assert fac.linear_factor.constant_term() == det_int(b_tilde)


def test_jacobian_point_golden():
    p = reference_parametrization()
    fac = linear_factor(p)
    pt = {"th1_1": Fraction(1, 2), "th2_1": Fraction(1, 3), "th3_1": Fraction(1, 5)}
    rows, _ = evaluate_jacobian(p, pt)
    det = det_fraction(fraction_matrix(rows))
    assert det == Fraction(29, 900)
    assert fac.linear_factor.evaluate(pt) * fac.monomial_factor.evaluate(pt) == det


def test_symbolic_determinant_equals_factorization():
    p = reference_parametrization()
    fac = linear_factor(p)
    assert jacobian_determinant_poly(p) == fac.linear_factor * fac.monomial_factor


def test_identity_check_seeded():
    p = reference_parametrization()
    fac = linear_factor(p)
    assert jacobian_identity_check(p, fac, trials=20, seed=11)


def test_identity_2x2_offdiagonal():
    p = simplex_parametrization(IndexDomain((2, 2)), [(1, 2), (2, 1)])
    fac = linear_factor(p)
    assert jacobian_determinant_poly(p) == fac.linear_factor * fac.monomial_factor
    assert jacobian_identity_check(p, fac, trials=20, seed=5)


def test_identity_random_2x2x3():
    rng = random.Random(99)
    dom = IndexDomain((2, 2, 3))
    grid = list(dom.tuples())
    need = sum(d - 1 for d in dom.dims)
    tried = 0
    while tried < 5:
        observed = rng.sample(grid, need)
        p = simplex_parametrization(dom, observed)
        try:
            fac = linear_factor(p)
        except DegenerateIndexSetError:
            continue
        tried += 1
        assert jacobian_determinant_poly(p) == fac.linear_factor * fac.monomial_factor
        assert jacobian_identity_check(p, fac, trials=10, seed=rng.randint(0, 10**6))


def test_degenerate_patterns_rejected():
    dom = IndexDomain((2, 2, 2))
    # (1,*,*) only: axis 1 never takes level 2
    with pytest.raises(DegenerateIndexSetError):
        linear_factor(simplex_parametrization(dom, [(1, 1, 1), (1, 1, 2), (1, 2, 1)]))


def test_degree_bound():
    # deg det(J) <= (|E| - 1)(n - 1) on exhaustive desk-scale instances
    for dims in [(2, 2), (2, 3), (2, 2, 2)]:
        dom = IndexDomain(dims)
        grid = list(dom.tuples())
        need = sum(d - 1 for d in dims)
        n = len(dims)
        for observed in itertools.combinations(grid, need):
            p = simplex_parametrization(dom, list(observed))
            det = jacobian_determinant_poly(p)
            assert det.total_degree() <= (need - 1) * (n - 1)


def test_zero_constant_term_pattern():
    # the reduced incidence matrix is singular (constant term 0), but the
    # extended matrix still has a one-dimensional kernel: the factorization
    # exists with a homogeneous linear factor
    dom = IndexDomain((2, 2, 2))
    p = simplex_parametrization(dom, [(1, 1, 1), (1, 1, 2), (2, 2, 1)])
    fac = linear_factor(p)
    assert fac.linear_factor.constant_term() == 0
    assert not fac.linear_factor.is_zero
    assert jacobian_determinant_poly(p) == fac.linear_factor * fac.monomial_factor


def test_rank_deficient_pattern_has_zero_determinant():
    # all maximal slices hit but the extended incidence matrix drops rank:
    # the determinant vanishes identically and the factor is undefined
    dom = IndexDomain((2, 2, 2, 2))
    p = simplex_parametrization(
        dom, [(1, 1, 2, 2), (1, 2, 1, 2), (2, 1, 2, 1), (2, 2, 1, 1)]
    )
    with pytest.raises(DegenerateIndexSetError):
        linear_factor(p)
    assert jacobian_determinant_poly(p).is_zero


def test_graph_ideal_generators():
    p = reference_parametrization()
    gens = graph_ideal_generators(p)
    assert len(gens) == 3
    roster = gens[0].variables
    assert roster[:3] == ("x211", "x121", "x112")
    # each generator vanishes on the graph: substitute a parameter point and
    # the matching coordinate values
    pt = {"th1_1": Fraction(1, 2), "th2_1": Fraction(1, 3), "th3_1": Fraction(1, 5)}
    coords = {idx: p.coordinates[idx].evaluate(pt) for idx in p.observed}
    full_point = dict(pt)
    for idx in p.observed:
        name = "x" + "".join(str(i) for i in idx)
        full_point[name] = coords[idx]
    for g in gens:
        assert g.evaluate(full_point) == 0


# ---------------------------------------------------------------------------
# the 2x2x2 antidiagonal membership test
# ---------------------------------------------------------------------------


def brute_force_membership(a, b, c, steps=40) -> bool:
    """Grid search over parameters; a hit proves membership (no-hit proves
    nothing, so only use positively or on known-complete grids)."""
    vals = [Fraction(k, steps) for k in range(steps + 1)]
    for t1 in vals:
        for t2 in vals:
            # solve the third parameter from x112 = t1 t2 (1 - t3) when possible
            if t1 == 0 or t2 == 0:
                continue
            t3 = 1 - Fraction(a) / (t1 * t2)
            if not 0 <= t3 <= 1:
                continue
            if t1 * (1 - t2) * t3 == b and (1 - t1) * t2 * t3 == c:
                return True
    return False


def test_membership_interior_point():
    a = Fraction(1, 8)
    assert simplex_membership_antidiag222(a, a, a)
    # witness: parameters (1/2, 1/2, 1/2)
    assert brute_force_membership(a, a, a, steps=8)
    f0 = antidiag222_constraint_poly(a, a, a)
    assert f0.coeffs == (Fraction(1, 512), Fraction(3, 64), Fraction(3, 8) - 1, 1)


def test_membership_too_large():
    h = Fraction(1, 2)
    assert not simplex_membership_antidiag222(h, h, h)
    assert not simplex_membership_antidiag222(2, 0, 0)


def test_membership_zero_cases():
    # one zero: reduces to sqrt(u) + sqrt(v) <= 1 on the other two entries
    assert simplex_membership_antidiag222(0, 1, 0)
    assert simplex_membership_antidiag222(0, Fraction(1, 4), Fraction(1, 4))
    assert not simplex_membership_antidiag222(0, Fraction(1, 2), Fraction(1, 2))
    assert simplex_membership_antidiag222(0, 0, 1)
    assert simplex_membership_antidiag222(0, 0, 0)
    assert not simplex_membership_antidiag222(0, 0, Fraction(3, 2))
    assert not simplex_membership_antidiag222(-1, Fraction(1, 4), Fraction(1, 4))


def test_membership_matches_witness_search():
    rng = random.Random(41)
    vals = [Fraction(k, 12) for k in range(13)]
    hits = misses = 0
    for t1 in [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]:
        for t2 in [Fraction(1, 3), Fraction(2, 3)]:
            for t3 in [Fraction(1, 5), Fraction(4, 5)]:
                a = t1 * t2 * (1 - t3)
                b = t1 * (1 - t2) * t3
                c = (1 - t1) * t2 * t3
                assert simplex_membership_antidiag222(a, b, c)
                hits += 1
    # far outside: entries summing above one can never complete
    for _ in range(20):
        a, b, c = (
            Fraction(rng.randint(40, 90), 100),
            Fraction(rng.randint(40, 90), 100),
            Fraction(rng.randint(40, 90), 100),
        )
        assert not simplex_membership_antidiag222(a, b, c)
        misses += 1
    assert hits and misses


def test_sign_shortcut_agrees_with_root_count():
    rng = random.Random(7)
    checked = 0
    for _ in range(400):
        a = Fraction(rng.randint(1, 60), 100)
        b = Fraction(rng.randint(1, 60), 100)
        c = Fraction(rng.randint(1, 60), 100)
        res = antidiag222_sign_conditions(a, b, c)
        if res is None:
            continue
        mu, sigma, verdict = res
        assert verdict == simplex_membership_antidiag222(a, b, c)
        checked += 1
    assert checked > 100


def test_sign_shortcut_declines_on_degenerate_chain():
    # exactly on the boundary the constraint cubic has a double root, the
    # remainder chain shortens, and the shortcut must defer to the root
    # count, which still decides (membership is closed)
    s = Fraction(4, 27)
    assert antidiag222_sign_conditions(s, s, s) is None
    assert simplex_membership_antidiag222(s, s, s)
    chain = sturm_sequence(antidiag222_constraint_poly(s, s, s))
    assert len(chain) == 3  # gcd(f, f') is nontrivial at a double root
    bval = antidiag222_boundary_polynomial().evaluate(
        {"x112": s, "x121": s, "x211": s}
    )
    assert bval == 0


def test_boundary_polynomial_proportional_to_sturm_numerator():
    # symbolic check: the cleared numerator of the Sturm constant equals a
    # rational multiple of the hard-coded boundary polynomial
    vs = ("x112", "x121", "x211")
    a = MultiPoly.variable(vs, "x112")
    b = MultiPoly.variable(vs, "x121")
    c = MultiPoly.variable(vs, "x211")
    one = MultiPoly.constant(vs, 1)
    e1, e2, e3 = a + b + c, a * b + a * c + b * c, a * b * c
    alpha = Fraction(2, 9) * (e1 * e1 - 3 * e2 - 2 * e1 + one)
    beta = Fraction(1, 9) * (e1 * e2 - e2 - 9 * e3)
    numerator = -(3 * beta * beta - 2 * (e1 - one) * alpha * beta + e2 * alpha * alpha)
    boundary = antidiag222_boundary_polynomial()
    assert numerator == Fraction(1, 9) * boundary


def test_sturm_constant_proportionality_at_points():
    rng = random.Random(2024)
    boundary = antidiag222_boundary_polynomial()
    ratio = None
    checked = 0
    while checked < 50:
        a = Fraction(rng.randint(1, 99), 100)
        b = Fraction(rng.randint(1, 99), 100)
        c = Fraction(rng.randint(1, 99), 100)
        chain = sturm_sequence(antidiag222_constraint_poly(a, b, c))
        if len(chain) != 4 or chain[2].degree != 1:
            continue
        f3 = chain[3](Fraction(0))
        lead = chain[2].coeffs[1]
        bval = boundary.evaluate({"x112": a, "x121": b, "x211": c})
        if bval == 0 or lead == 0:
            continue
        r = (f3 * lead**2) / bval
        if ratio is None:
            ratio = r
        assert r == ratio
        checked += 1
    assert ratio == Fraction(1, 9)
