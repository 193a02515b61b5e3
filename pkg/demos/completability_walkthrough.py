"""Which partial tensors extend to a rank-one tensor, and over which field?

The running example is the 2x2x2 partial tensor with third-coordinate
slices

    ( ?  1 )      ( 1  ? )
    ( 1  ? )      ( ? -1 )

i.e. values 1, 1, 1, -1 at positions (1,1,2), (1,2,1), (2,1,1), (2,2,2).
It famously completes over the complex numbers but not over the reals.
"""

from rankone import (
    analyze,
    enumerate_real_completions,
    is_complex_completable,
    is_real_completable,
    PartialTensor,
)

positions = [(1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2)]
t = PartialTensor.from_entries((2, 2, 2), dict(zip(positions, [1, 1, 1, -1])))

ok, witness = is_complex_completable(t)
print("complex completable:", ok)
print("real completable:   ", is_real_completable(t))

# The whole story is in the report: the observed incidence columns span a
# lattice of index 2 in its saturation, and an even index makes real
# completability depend on the signs of the entries.
report = analyze(t)
print("saturation index:   ", report.saturation_index)
print("finitely determined:", len(report.finitely_completable_entries), "of 8 entries")

# The sign rule: these four positions complete over R exactly when an even
# number of the observed values is negative.
print("\nsign pattern -> real completable")
import itertools

for signs in itertools.product([1, -1], repeat=4):
    tt = PartialTensor.from_entries((2, 2, 2), dict(zip(positions, signs)))
    marks = "".join("+" if s > 0 else "-" for s in signs)
    print(f"  {marks}   {is_real_completable(tt)}")

# With all-positive values the same positions have exactly two real
# completions, mirror images of each other in the corner entry.
t2 = PartialTensor.from_entries((2, 2, 2), dict(zip(positions, [1, 1, 1, 1])))
completions = enumerate_real_completions(t2)
print(f"\nvalues (1,1,1,1): {len(completions)} real completions")
for c in completions:
    corner = c.values[(1, 1, 1)]
    print("  corner entry (1,1,1) =", corner.as_fraction(c.base))

# Irrational branches stay exact: with values (1,1,1,2) the corner entry
# is +-1/sqrt(2), carried symbolically and rendered on demand.
t3 = PartialTensor.from_entries((2, 2, 2), dict(zip(positions, [1, 1, 1, 2])))
for c in enumerate_real_completions(t3):
    corner = c.witness[(1, 1, 1)]
    print(
        "values (1,1,1,2): corner =",
        corner.to_text(),
        "=",
        corner.decimal(c.base, 12),
    )
