"""Centralizer orders from class types, and how they compare with the lower bounds."""

from chevcount.centralizer import (
    class_equation_check, class_type_centralizer, enumerate_class_types, min_centralizer_exact,
    min_centralizer_lower_bound,
)

# Each class type carries a multiplicity; summing multiplicity / |C| must give 1.
for fam, n, q in (("GL", 3, 2), ("GL", 4, 3), ("GU", 3, 3)):
    total, classes = class_equation_check(fam, n, q)
    print(f"{fam}({n},{q}): {classes} classes, sum of 1/|C| over classes = {total}")

print("\nThe five smallest centralizers in GL(4,3):")
orders = sorted(class_type_centralizer("GL", ct, 3) for ct, _ in enumerate_class_types("GL", 4, 3))
print(" ", orders[:5])

print("\nSmallest centralizer against the closed-form bound:")
for fam in ("GL", "GU"):
    for n in (2, 3, 4):
        exact = min_centralizer_exact(fam, n, 2)
        bound = min_centralizer_lower_bound(fam, n, 2)
        print(f"  {fam}({n},2): exact {exact:>4}  bound {bound.value:8.3f}  ratio {exact / bound.value:.1f}")
