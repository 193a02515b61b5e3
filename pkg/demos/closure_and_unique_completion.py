"""Which unobserved entries are pinned down, and when is the completion unique?

The matroid closure of the observed index set answers the first question
combinatorially: an entry is (generically) finitely determined iff its
incidence column lies in the span of the observed ones.  Saturation of the
observed column lattice then separates "finitely many" from "exactly one".
"""

from rankone import (
    IndexDomain,
    PartialTensor,
    analyze,
    complete_entry,
    enumerate_real_completions,
    matroid_closure,
    saturation_index_of,
)

# Three entries of a 2x2 matrix force the fourth through the determinant.
dom = IndexDomain((2, 2))
observed = [(1, 1), (1, 2), (2, 1)]
print("2x2 with three entries observed")
print("  closure:", sorted(matroid_closure(dom, observed)))

t = PartialTensor.from_entries((2, 2), {(1, 1): 2, (1, 2): 3, (2, 1): 4})
(value,) = complete_entry(t, (2, 2))
print("  forced (2,2) entry:", value.as_fraction(t.entries))
print("  exponents:", dict(value.exponents))  # T12 * T21 / T11

report = analyze(t)
print("  uniquely completable over C:", report.uniquely_completable_complex)
print("  uniquely completable over R:", report.uniquely_completable_real)

# The 2x2x2 antidiagonal is the classic counterexample: three observations,
# nothing else determined, and no block structure to blame.
dom3 = IndexDomain((2, 2, 2))
anti = [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
print("\n2x2x2 antidiagonal pattern")
print("  closure:", sorted(matroid_closure(dom3, anti)))
print("  (equals the observed set: no entry is finitely determined)")

# Diagonal observations of a matrix determine nothing off the diagonal.
print("\n2x2 diagonal pattern")
print("  closure:", sorted(matroid_closure(dom, [(1, 1), (2, 2)])))

# Uniqueness bookkeeping: closure = everything AND saturated lattice.
print("\nsaturation indices")
print("  three matrix entries:", saturation_index_of(dom, ((1, 1), (1, 2), (2, 1))))
pattern = ((1, 1, 2), (1, 2, 1), (2, 1, 1), (2, 2, 2))
print("  cube parity pattern: ", saturation_index_of(dom3, pattern))

t2 = PartialTensor.from_entries((2, 2, 2), dict(zip(pattern, [1, 1, 1, 1])))
comps = enumerate_real_completions(t2)
print("  -> index 2 gives", len(comps), "real completions (finite but not unique)")

# A zero entry is handled by stripping its all-zero slice first; the
# stripped slice is recompleted by zeros.
t3 = PartialTensor.from_entries((2, 2), {(1, 1): 0, (1, 2): 0, (2, 1): 3, (2, 2): 6})
(comp,) = enumerate_real_completions(t3)
print("\nzero-slice example [[0,0],[3,6]] completes to")
rows = [[comp.witness_as_fractions()[(i, j)] for j in (1, 2)] for i in (1, 2)]
for row in rows:
    print("  ", row)
