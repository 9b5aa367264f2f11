"""Semantic elementarity through the generated function algebra.

The closure of the constants and the e_k tables under pointwise + and *
contains exactly the functions S^n -> S that are polynomials in e1..en.
"""
from semisym import builtin, semantic_elementarity, theorem_suite_upper_bound
from semisym.elementarize import semantic_n_elementary
from semisym.poly import Polynomial


def power_sum(sr, n):
    return Polynomial(sr, 2, {(n, 0): sr.one, (0, n): sr.one})


for name in ["sat:3", "sat:4", "zn:2", "zn:3", "super:2", "nq:2:4"]:
    sr = builtin(name)
    res = semantic_elementarity(sr, 2, power_sum(sr, 2))
    full = semantic_n_elementary(sr, 2)
    print(f"{name:8s} x^2+y^2: {res.status:10s} every symmetric function: {full.describe(sr)}")

print()
print(theorem_suite_upper_bound(builtin("sat:3")).to_text())
