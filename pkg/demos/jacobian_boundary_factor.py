"""The boundary of the completable region for simplex-parametrized tensors.

When the parameters of each axis live on a probability simplex and exactly
as many entries are observed as there are free parameters, the Jacobian
determinant of the observation map factors as

    det(J) = (product of parameter linear forms) * (linear polynomial),

and the linear polynomial is read off the kernel of a small 0/1 incidence
matrix.  Its zero set is the only non-coordinate piece of the boundary.
"""

from fractions import Fraction

from rankone import (
    IndexDomain,
    antidiag222_boundary_polynomial,
    antidiag222_constraint_poly,
    graph_ideal_generators,
    jacobian_determinant_poly,
    jacobian_identity_check,
    linear_factor,
    simplex_membership_antidiag222,
    simplex_parametrization,
    sturm_sequence,
)

# Observations at (2,1,1), (1,2,1), (1,1,2) on a 2x2x2 tensor: three
# observations, three free parameters th1_1, th2_1, th3_1.
p = simplex_parametrization(IndexDomain((2, 2, 2)), [(2, 1, 1), (1, 2, 1), (1, 1, 2)])
fac = linear_factor(p)

print("incidence matrix (with appended ones column):")
for row in fac.incidence:
    print("  ", list(row))
print("kernel vector:    ", fac.kernel_vector)
print("linear factor:    ", fac.linear_factor.to_text())
print("monomial factor:  ", fac.monomial_factor.to_text())
print("det(J) symbolic:  ", jacobian_determinant_poly(p).to_text())
print("20-point identity:", jacobian_identity_check(p, fac, trials=20, seed=1))

# The generators of the graph ideal are exposed for external elimination
# engines; eliminating the parameters from them plus the linear factor
# yields the boundary hypersurface in the observation coordinates.
print("\ngraph ideal generators:")
for g in graph_ideal_generators(p):
    print("  ", g.to_text())

# For this pattern the boundary polynomial is known in expanded form; the
# package exposes it and the suite checks it against the Sturm route.
boundary = antidiag222_boundary_polynomial()
print("\nboundary polynomial has", len(boundary.terms), "terms, degree", boundary.total_degree())

# Membership itself is decided exactly by counting roots of a cubic on
# (0, 1]: the unobserved corner entry of a probability completion.
point = (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8))
print("\nconstraint cubic at (1/8,1/8,1/8):", antidiag222_constraint_poly(*point).to_text("x"))
print("Sturm chain:", [f.to_text("x") for f in sturm_sequence(antidiag222_constraint_poly(*point))])
print("member:", simplex_membership_antidiag222(*point))

for pt in [
    (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
    (Fraction(3, 10), Fraction(3, 10), Fraction(3, 10)),
    (0, Fraction(1, 4), Fraction(1, 4)),
    (0, Fraction(1, 2), Fraction(1, 2)),
]:
    print("membership", tuple(map(str, pt)), "->", simplex_membership_antidiag222(*pt))

# A coarse picture of the completable slice x112 = x121 = x211 = s: the
# diagonal leaves the region exactly at s = 4/27 (a zero of the boundary
# polynomial, witnessed by parameters (2/3, 2/3, 2/3)).
print("\ndiagonal slice s -> member")
for k in range(0, 8):
    s = Fraction(k, 54)
    mark = "#" if simplex_membership_antidiag222(s, s, s) else "."
    print(f"  s = {str(s):>5}  {mark}")
s = Fraction(4, 27)
print(f"  s = {str(s):>5}  {'#' if simplex_membership_antidiag222(s, s, s) else '.'}   (boundary)")
boundary_val = boundary.evaluate({"x112": s, "x121": s, "x211": s})
print("  boundary polynomial at (4/27, 4/27, 4/27):", boundary_val)
