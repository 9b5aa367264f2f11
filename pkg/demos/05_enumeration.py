"""All uc-semirings of order at most 4, classified."""
from semisym import enumerate_semirings, property_report, theorem_suite_upper_bound
from semisym.finite import is_upper_bound

for m in range(1, 5):
    classes = list(enumerate_semirings(m))
    ub = [sr for sr in classes if is_upper_bound(sr).holds]
    agree = sum(bool(theorem_suite_upper_bound(sr).consistent) for sr in ub)
    print(f"order {m}: {len(classes)} classes, {len(ub)} upper-bound, "
          f"Frobenius <=> 2-elementary on {agree}/{len(ub)}")

print()
for sr in enumerate_semirings(3):
    rep = property_report(sr)
    flags = " ".join(k for k in rep if rep[k].holds)
    print(sr.name, sr.add_table.tolist(), sr.mul_table.tolist(), "|", flags)
