"""Counting irreducible polynomials, with and without the z -> 1/z symmetry."""

from chevcount.oracle import brute_force_star_counts
from chevcount.polycount import count_irreducible, star_counts, verify_polycount_identities

q = 3
print("Monic irreducibles over F_3 by degree (z excluded):")
print(" ", [count_irreducible(q, d) for d in range(1, 9)])

pc = star_counts(q, 6)
brute = brute_force_star_counts(q, 6)
print("\nSelf-reciprocal polynomials N* and reciprocal pairs M*, solved vs. enumerated:")
for d in range(1, 7):
    print(f"  d={d}: solved ({pc.nstar(d)}, {pc.mstar[d]})  enumerated {brute[d]}")

report = verify_polycount_identities(q, 60)
print(f"\nAll {len(report['checks'])} identity checks to degree 60 pass: {report['passed']}")
