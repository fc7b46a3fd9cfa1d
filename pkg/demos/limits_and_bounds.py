"""How k(G)/q^rank approaches its limit, and the inequality sweep.

The limits are infinite products in 1/q; the ratios use exact class numbers.
"""

from chevcount.bounds import check_inequalities, convergence_table, limit_value

for fam, q in (("GL", 2), ("GU", 2), ("Sp", 3), ("SO", 2)):
    lim = limit_value(fam, q)
    print(f"{fam}, q={q}: limit {lim:.6f}")
    for row in convergence_table(fam, q, range(5, 31, 5)):
        print(f"    n={row['n']:2d}  ratio={row['ratio']:.6f}  delta={row['delta']:+.2e}")

# q = 2 converges slowly; SO at q=2 is still a visible distance away at n=30.

print("\nA short sweep over small n and q:")
report = check_inequalities(range(1, 9), (2, 3, 4, 5), suites=["GL", "Sp", "uniform."])
print(report.to_table())
