"""Tour of the built-in codes.

Each code is a systematic parity-check matrix: k weight-3 data columns
followed by an identity block. Summing neighbouring columns gives the
syndrome an adjacent double error leaves behind; those sums form the
Q-matrix and all have even weight, which is what lets a decoder tell a
single flip (odd syndrome) from an adjacent pair (even syndrome).
"""

from secdaec import available, builtin, parity_bound, q_matrix

for name in available():
    spec = builtin(name)
    print(f"({spec.n}, {spec.k})  parity bits={spec.r}  bound={parity_bound(spec.k).value}"
          f"  data-row weights={spec.data_row_weights}")

spec = builtin("14-8")
print("\nH for (14, 8):")
print(spec.to_text())

print("Q-matrix, one column per data bit, rows list the set positions:")
for row in q_matrix(spec).as_rows():
    print("  " + " ".join(f"{v:>2}" for v in row))
