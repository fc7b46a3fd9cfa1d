"""Class numbers from generating functions.

Run with ``python3 demos/class_numbers.py``.
"""

from chevcount.classcount import GroupSpec, class_number, k_gl, k_gu, k_o_even, k_sp

print("k(GL(n,q)) is a polynomial in q. The first few, lowest coefficient first:")
for n in range(1, 6):
    print(f"  n={n}: {k_gl(n)}")

print("\nThe unitary groups behave the same way:")
for n in range(1, 5):
    print(f"  n={n}: {k_gu(n)}")

print("\nNumbers grow like q^n. Here is k(Sp(2n,3)) next to 3^n:")
for n in range(1, 9):
    print(f"  n={n:2d}  k={k_sp(2 * n, 3):>10}  3^n={3**n:>8}")

print("\nEven-dimensional orthogonal groups come in two types:")
for q in (2, 3, 4, 5):
    plus, minus = k_o_even(4, q)
    print(f"  q={q}: k(O+(4,q))={plus}, k(O-(4,q))={minus}")

print("\nGroupSpec wraps every family behind one call:")
for spec in (GroupSpec("SL", 2, 5), GroupSpec("PSU", 3, 5), GroupSpec("Exceptional", 8, 2, "E8")):
    value, label = class_number(spec)
    print(f"  {spec.family}({spec.n},{spec.q}) -> {value} ({label})")
