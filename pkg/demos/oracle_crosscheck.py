"""Checking formulas against explicit matrix groups.

The oracle builds each group as a numpy array of matrices over F_q, closes it
under multiplication, and splits it into conjugacy classes. Small groups only.
"""

import time

from chevcount import oracle
from chevcount.classcount import GroupSpec, class_number

cases = [("GL", 2, 3), ("SU", 3, 2), ("Sp", 4, 3), ("OMinus", 4, 2), ("OmegaPlus", 4, 5)]

print(f"{'group':<16}{'order':>8}{'formula':>9}{'enumerated':>12}{'secs':>7}")
for fam, n, q in cases:
    t = time.perf_counter()
    G = oracle.build_group(fam, n, q)
    cd = oracle.conjugacy_data(G)
    formula, _ = class_number(GroupSpec(fam, n, q))
    print(f"{fam + str((n, q)):<16}{G.order:>8}{formula:>9}{cd.k:>12}{time.perf_counter() - t:>7.1f}")

# Sp(4,3) in more detail: classes of elements of order prime to 3 are the
# semisimple ones, and elements of 3-power order are unipotent.
G = oracle.build_group("Sp", 4, 3)
cd = oracle.conjugacy_data(G)
print("\nSp(4,3):", cd.k, "classes,", int(cd.p_prime.sum()), "semisimple,",
      int(cd.sizes[cd.p_power].sum()), "unipotent elements (3^8 =", 3**8, ")")

# Burnside's count of commuting pairs gives k independently.
small = oracle.build_group("SL", 2, 3)
print("SL(2,3): classes", oracle.conjugacy_data(small).k, "| commuting pairs / |G| =",
      oracle.burnside_class_count(small))
