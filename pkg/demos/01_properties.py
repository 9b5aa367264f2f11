"""Property profiles of the built-in finite semirings.

Run: python3 demos/01_properties.py
"""
from semisym import builtin, make_n_quotient, property_report
from semisym.finite import ghost_ideal, intrinsic_order

# N modulo 2 = 4: Frobenius but the intrinsic order is only a preorder
q = make_n_quotient(2, 4)
print(property_report(q).to_text())
print()

# the preorder identifies [2] and [3]
order = intrinsic_order(q)
print("classes of ~:", [[q.token(x) for x in c] for c in order.classes()])
g = ghost_ideal(q)
print("ghost ideal:", [q.token(x) for x in g.members])
print("nu:", {q.token(x): q.token(int(g.nu[x])) for x in q.elements()})
print()

# a compact table of verdicts across constructions
names = ["boolean", "zn:2", "zn:3", "sat:3", "maxplus:2", "super:2", "nq:2:4", "quotient:nq:2:4"]
cols = ["upper_bound", "frobenius", "quasiidempotent", "supertropical", "two_eq_three", "symhomomorphic"]
print("semiring".ljust(18) + "".join(c[:12].ljust(14) for c in cols))
for name in names:
    rep = property_report(builtin(name))
    print(name.ljust(18) + "".join(rep[c].status.ljust(14) for c in cols))
