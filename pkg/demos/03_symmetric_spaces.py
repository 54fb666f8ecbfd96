"""
Symmetric spaces and the lambda invariant
=========================================

A curvature tensor killed by its own holonomy algebra, whose images span the
algebra, defines a symmetric space.  We sweep the catalog, then classify the
one-parameter family of tensors of type g4 by a canonical lambda.
"""
# %%
from fractions import Fraction

from quatholonomy.algebra import basis_change_matrix, g4
from quatholonomy.quaternion import q
from quatholonomy.symmetric import (
    SymmetricPair, build_triple, canonical_lambda, family_tensor, holonomy_filter,
    phi_from_tensor, rotate_tensor,
)

# %%
res = holonomy_filter()
for e in res.entries:
    print(f"{e.algebra:<10} dim R = {e.dim_R:>2}  dim R0 = {e.dim_R0:>2}  spans: {e.spans}")
print("Ricci-flat symmetric:", res.hyper_kahler, "  nonzero scalar:", res.nonzero_scalar)

# %%
# Each family member gives a Lie algebra g4 + R^{4,4}: Jacobi holds on every basis triple.
for lam in (Fraction(-1, 2), Fraction(-1, 4), Fraction(1, 3), 1, 2):
    R = family_tensor(lam)
    triple = build_triple(SymmetricPair(g4(), R), check_pair=True)
    inv = canonical_lambda(phi_from_tensor(R))
    print(f"lambda = {str(lam):>5}: dim h = {triple.dim}, canonical lambda = {inv.render()}")

# %%
# Rewriting the tensor in a rotated basis (x p, x q) changes Mat phi but not the invariant.
R = family_tensor(Fraction(1, 3))
for x in (q(1, 2, -1, 3), q(0, 1, 1, 0), q(2, 0, 0, 1)):
    R2 = rotate_tensor(R, basis_change_matrix(x))
    print(x, "->", canonical_lambda(phi_from_tensor(R2)).render())
