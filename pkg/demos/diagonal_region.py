"""The exact inequality description of completable diagonals.

A nonnegative vector (x_1, ..., x_d) is the diagonal of some rank-one
probability tensor of order n exactly when sum x_i^(1/n) <= 1.  Twisting
t - (x_1 + ... + x_d) by all n-th roots of unity and expanding gives a
rational polynomial whose t-derivatives at t = 1 cut the same region out
by polynomial inequalities: finitely many, and just one for odd n.
"""

from fractions import Fraction

from rankone import (
    build_description,
    diagonal_membership,
    nth_root_sum_oracle,
)

desc = build_description(2, 2)
print("order 2, two diagonal entries")
print("  expanded product:", desc.product_poly.to_text())
print("  compressed:      ", desc.compressed.to_text())
for i, p in enumerate(desc.inequalities):
    print(f"  P_{i} =", p.to_text())

# Membership versus the rigorous root-sum oracle on a few points.
print("\npoints (order 2):")
for x in [(Fraction(1, 4), Fraction(1, 4)), (Fraction(1, 2), Fraction(1, 2)),
          (Fraction(1, 9), Fraction(4, 9)), (Fraction(2, 5), Fraction(1, 10))]:
    member = diagonal_membership(2, 2, x)
    oracle = nth_root_sum_oracle(2, x)
    print(f"  {tuple(map(str, x))}: member={member}  oracle={oracle.value}")

# Odd order needs a single inequality.
desc3 = build_description(3, 2)
print("\norder 3, two diagonal entries: single inequality")
print("  P_0 =", desc3.inequalities[0].to_text())
print("  (1/27, 8/27) on the boundary:", diagonal_membership(3, 2, [Fraction(1, 27), Fraction(8, 27)]))

# An ASCII picture of the order-2 region on [0,1]^2 (row = x2 top-down).
print("\norder-2 region, '#' = completable:")
steps = 20
for j in range(steps, -1, -1):
    x2 = Fraction(j, steps)
    row = "".join(
        "#" if diagonal_membership(2, 2, [Fraction(i, steps), x2]) else "."
        for i in range(steps + 1)
    )
    print("  " + row)

# Larger formats expand quickly but stay exact; (3,3) has 220 terms.
desc33 = build_description(3, 3)
print("\norder 3, three entries: compressed polynomial has",
      len(desc33.compressed.terms), "terms; degree", desc33.compressed.degree_in("t"))
print("  (1/27, 1/27, 1/27) member:", diagonal_membership(3, 3, [Fraction(1, 27)] * 3))
print("  (8/27, 8/27, 8/27) member:", diagonal_membership(3, 3, [Fraction(8, 27)] * 3))
