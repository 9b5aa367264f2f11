"""Multiplying a segment by an elementary polynomial.

Over N the product regroups into segments with natural multiplicities;
over a symhomomorphic semiring everything but the leading term is absorbed.
"""
from semisym import frobenius_segment_times_elementary, make_supertropical, segment_times_elementary

ex = segment_times_elementary((3, 2, 0, 0), 2)
print(f"sigma(3,2,0,0) * e2 has {ex.raw_products} monomial products")
for t in ex.terms:
    print(f"  j={t.j}  alpha={t.alpha}  a={t.multiplicity}  -> sigma{t.profile}")
print("  =", ex.combination)

sr = make_supertropical(2)
r = frobenius_segment_times_elementary((3, 2, 0, 0), 2, sr)
print(f"\nover {sr.name}: {r.combination}   check: {r.check.describe(sr)}")

# the same identity mapped into super2 via numerals (2 becomes the ghost g0)
print("numeral image over super2:", segment_times_elementary((3, 2, 0, 0), 2, sr).combination)
