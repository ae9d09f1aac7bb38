# coding: utf-8

# # Where the printed objects disagree with the derivations
#
# Every printed matrix and table is kept verbatim as a fixture and diffed
# against what the product table forces. Mismatches are findings, not errors.

from octoclif import so7
from octoclif import split_octonion as so
from octoclif.checks import run_suite

# Left-multiplication operators whose printed index lists differ, with the
# table products that justify the derived cells.

for k in so.SplitBasis:
    for cell in so.left_mul_diff(k):
        print(f"L({k.label}) [{cell['row']},{cell['col']}] derived {cell['derived']}, "
              f"printed {cell['printed']}  ({cell['justification']})")

# The combined block matrices.

for A in range(8):
    print(f"U{A} matches printed:", so.u_matrix(A) == so.u_fixture(A))

# The printed X is traceless but not Hermitian, and not equal to sum f_A U_A.

x = so7.x_fixture()
print("\nprinted X non-Hermitian cells:", so7.hermitian_violations(x))
print("cells differing from sum f_A U_A:", len(so7.x_fixture_vs_assembled()))

# The component table: per-row counts under convention A.

diff = so7.compare_table2(so7.transform_table("A"), so7.fixture_rows())
for pair in diff.rows():
    print(f"R{pair[0]}{pair[1]}", diff.counts(pair))
print("totals", diff.counts())

# And the one-line summary the command line tool reports.

s = run_suite("all")
print(f"\n{s.passed}/{s.run} checks passed; forced identities all hold: {s.internal_ok}")
