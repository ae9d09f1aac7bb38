# coding: utf-8

# # Infinitesimal rotations, exactly
#
# X = sum f_A U_A is built from seven real symbols. A rotation in the (k, l)
# plane is R = 1 + theta G with theta * theta = 0, so X' = R X R^-1 can be
# computed exactly and projected back onto the generators.

from octoclif import so7
from octoclif.matrix import to_text
from octoclif.scalars import format_scalar, symbols

x = so7.assemble_X(symbols())
print("X =")
print(to_text(x))

# Rotate in the (1, 2) plane using G = U1 U2.

out = so7.rotate(x, so7.rotation_operator(1, 2, "A"))
print("\nprojection residual is zero:", out.residual_zero)
for a, img in enumerate(out.projected, start=1):
    print(f"  f{a} -> {format_scalar(img)}")

# The other convention, G = (1/2i)[U1, U2], is the one whose matrix matches
# the printed R12.

print("\nconventions reproducing the printed R12:", so7.r12_convention_report()["matching"])

# Invariants over all 21 planes. The plain sum of squares is only kept when
# both indices have the same signature; the signature-weighted sum always is.

for k, l in so7.PAIRS:
    inv = so7.pair_invariants(k, l, "A")
    print(f"R{k}{l}: trace(X'^2) kept={inv.trace_square_preserved} "
          f"plain norm kept={inv.norm_first_order_zero} "
          f"weighted norm kept={inv.signature_norm_first_order_zero}")
