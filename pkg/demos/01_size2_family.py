"""Walk through the size-2 family.

Every 2x2 unit upper-triangular matrix [[1, a], [0, 1]] with |a| <= 2 has
monodromy eigenvalues on the unit circle.  The spectral number alpha_1
solves 2 sin(pi alpha_1) = a, the attached spectral pairs degenerate to a
single length-2 ladder exactly at the boundary |a| = 2, and the
irreducible class of the pairing changes accordingly.
"""

from fractions import Fraction

from spectral_stokes import lowdim
from spectral_stokes.seifert import type_label_multiset

print(f"{'a':>6} {'beta1':>8} {'alpha1':>8}  pairs / class")
print("-" * 72)
for a in (-2, -1, 0, 1, 2):
    beta1, alpha1, spp, types = lowdim.solve2(a)
    print(f"{a:>6} {str(beta1):>8} {str(alpha1):>8}  {spp}")
    print(f"{'':>25} {type_label_multiset(types)}")

print()
print("Between the table rows the angle moves continuously:")
for num in range(0, 9):
    a = Fraction(num, 4)
    beta1, alpha1, _, _ = lowdim.solve2(a)
    print(f"  a = {str(a):>5}: beta1 = {float(beta1):.6f}, alpha1 = {float(alpha1):+.6f}")
