"""
Quaternionic operators on H^2 and their real 8x8 matrices
=========================================================

We build a few elements ``(a, b)`` of the stabilizer of the isotropic line Hp,
look at their real matrices in the basis (p, ip, jp, kp, q, iq, jq, kq) and
check that realification turns the quaternionic bracket into the matrix
commutator.
"""
# %%
# Quaternion arithmetic is exact: coefficients are Fractions.
from fractions import Fraction

import numpy as np

from quatholonomy import I, J, K, q
from quatholonomy.algebra import ab, g1
from quatholonomy.quaternion import ab_pair, op_bracket
from quatholonomy.realification import BASIS_LABELS, commutator, endo_to_bivector, is_so44, realify_op

x = q(1, Fraction(1, 2), 0, -3)
print("x =", x, "  conj(x) x =", x.conj() * x)
print("i j =", I * J, "  j i =", J * I)

# %%
# The element (0, i) only has an upper-right block: it maps q-vectors to p-vectors.
M = ab(0, I)
print("real matrix of (0, i):")
print(np.array(M, dtype=int))
print("skew for eta:", is_so44(M))

# %%
# Realification is a Lie algebra homomorphism.
A, B = ab_pair(I, 0), ab_pair(0, J)
lhs = realify_op(op_bracket(A, B))
rhs = commutator(realify_op(A), realify_op(B))
a, b = op_bracket(A, B).as_ab_pair()
print(f"[(i,0), (0,j)] = ({a}, {b})   matches commutator:", np.array_equal(lhs, rhs))

# %%
# Skew endomorphisms and bivectors are the same thing.  Print the bivector of
# every generator of g1 with its nonzero coefficients.
from quatholonomy.realification import PAIRS

for label, M in zip(g1().params["_labels"], g1().basis):
    terms = [f"{c}*{BASIS_LABELS[a]}^{BASIS_LABELS[b]}"
             for c, (a, b) in zip(endo_to_bivector(M), PAIRS) if c]
    print(f"{label:>8}: " + " + ".join(terms))
