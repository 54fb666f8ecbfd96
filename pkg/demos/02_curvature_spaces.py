"""
Curvature tensors of type g and the Berger test
===============================================

For every algebra in the catalog we solve the linear Bianchi system for
R(g), the space of maps Lambda^2 R^{4,4} -> g satisfying the first Bianchi
identity, and check whether the images of those tensors span g.
"""
# %%
import time

from quatholonomy import algebra
from quatholonomy.curvature import (
    berger_check, bianchi_nullspace, prop1_basis, r0_tensor, r1_tensor, ricci,
    scalar_curvature, section6_conditions, split_nu_W,
)

# %%
# The Berger table over the whole catalog.
for g in algebra.catalog():
    t = time.perf_counter()
    print(f"{berger_check(g)}   ({time.perf_counter() - t:.2f} s)")

# %%
# The stabilizer g1 of Hp has a 13-parameter family of curvature tensors.  The
# solver basis and the explicit parametrization span the same space, and the
# same is true for the subalgebras with the extra linear conditions.
space = bianchi_nullspace(algebra.g1())
print("dim R(g1) =", space.dim, " same span as closed form:", space.same_span(prop1_basis()))
for name in ("g2", "g3", "g4", "g5", "g6"):
    check = section6_conditions(name)
    print(f"{name}: dim {check.solver_dim:>2}  conditions: {check.description}")

# %%
# All of these are Ricci-flat.  The model tensors R0 and R1 are not.
print("Ricci of R(g1) vanishes:", all(not any(ricci(T).flat) for T in space.basis))
print("scal(R0) =", scalar_curvature(r0_tensor()), "  scal(R1) =", scalar_curvature(r1_tensor()))

# %%
# Split 5 R1 + R' with R' in R(g1) into nu R0 + W.  R1 has nu = -1 and R' has
# nu = 0, so nu = -5 comes back exactly.
R = r1_tensor() * 5 + space.combination(range(1, 14))
nu, W = split_nu_W(R)
print("nu =", nu, "  W Ricci-flat:", not any(ricci(W).flat))
