# coding: utf-8

# # The split-octonion product table
#
# Every product of two split basis elements is a signed basis element or zero.
# This walkthrough prints the table, checks the algebra rules against it and
# looks at the same algebra in the e-basis.

from octoclif import split_octonion as so
from octoclif.split_octonion import SplitBasis, SplitOctonion, mul, u, ustar

# A few single products first.

for x, y in [(u(1), u(2)), (u(0), ustar(0)), (u(1), ustar(1)), (ustar(2), ustar(3))]:
    print(f"{x.label} * {y.label} = {so.format_signed(so.mul_basis(x, y))}")

# The full table, rows times columns, in the printed order.

print()
print("      " + "".join(f"{c:>6}" for c in so.TABLE_ORDER))
for r in so.TABLE_ORDER:
    x = SplitBasis.parse(r)
    cells = [so.format_signed(so.mul_basis(x, SplitBasis.parse(c))) for c in so.TABLE_ORDER]
    print(f"{r:>6}" + "".join(f"{c:>6}" for c in cells))

# The algebra rules (antisymmetry, the delta and epsilon identities, the
# idempotents and the annihilations) are checked cell by cell.

report = so.validate_table()
print(f"\n{len(report.checks)} rule checks, {len(report.violations)} violations")

# Changing basis to e0..e7 turns the algebra into an octonion-like one:
# e0 is the unit and every other e_a squares to -e0.

table = so.derive_e_table()
print("e1 * e1 =", so.format_e(table[1][1]))
print("e1 * e2 =", so.format_e(table[1][2]))
print("properties:", so.e_table_properties(table))

# It is not associative. Here is the first triple an exhaustive search finds.

x, y, z = so.associator_witnesses(limit=1)[0]
X, Y, Z = (SplitOctonion.basis(b) for b in (x, y, z))
print(f"({x.label} {y.label}) {z.label} = {mul(mul(X, Y), Z)}")
print(f"{x.label} ({y.label} {z.label}) = {mul(X, mul(Y, Z))}")
