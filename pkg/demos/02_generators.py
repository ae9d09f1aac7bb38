# coding: utf-8

# # Two ways to build the seven generators
#
# One route uses Kronecker products of Dirac and Pauli matrices. The other
# adds and subtracts left-multiplication matrices of the split octonions.
# Here we compare them and look at the signature they carry.

from octoclif import clifford as cl
from octoclif import split_octonion as so
from octoclif.matrix import to_text

# Left multiplication by u1, as a matrix whose row i expands u1 * (basis i).

print("L(u1) =")
print(to_text(so.left_mul_matrix(so.u(1))))

# U1 = L(u1) + L(u1*):

split = so.split_generator_set()
print("\nU1 =")
print(to_text(split[1]))

# The Kronecker formulas give the same matrices up to a sign on the first
# generator; the fourth one differs in shape, so no scalar can fix it.

kron = cl.kronecker_set()
summary = cl.comparison_summary(kron, split)
print("\nKronecker vs split: equal on", summary["holds"], "differ on", summary["fails"])
print("scalar corrections:", {a: (None if c is None else str(c))
                              for a, c in cl.correction_factors().items()})

# Anticommutators are all scalar, but the squares are not all +1.

sig = cl.signature_check(split)
print("\nsquares:", [str(s) for s in sig.diagonal_signs])
print("pairs that differ from the unit diagonal:", list(sig.mismatches_vs_delta))

# Together with their 21 brackets they span a 28-dimensional space.

print("rank of 7 + 21 generators:", cl.generator_rank(split))
