"""Writing symmetric polynomials in e1, ..., en and checking the result.

The rewriting sigma(d) -> e1^(d1-d2) ... en^dn is always available; it is
a valid identity of functions only over symhomomorphic semirings.
"""
from semisym import builtin, elementarize, parse_polynomial, verify_elementarization

for text in ["x1^2 + x2^2", "x1^2*x2 + x1*x2^2 + x1^3 + x2^3", "x1^2 x2^2 x3 + x1^2 x2 x3^2 + x1 x2^2 x3^2"]:
    print(text)
    for name in ["boolean", "super:2", "maxplus:3", "nq:2:4", "sat:3", "zn:3"]:
        sr = builtin(name)
        p = parse_polynomial(text, sr)
        r = elementarize(p)
        v = verify_elementarization(p, r)
        print(f"  {name:10s} {r.combination}  =>  {r}   [{v.describe(sr)}]")
