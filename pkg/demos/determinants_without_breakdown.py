"""
Determinants when a pivot vanishes
==================================

The continued-fraction pivots c_i = d_i - a_{i-1} b_{i-1} / c_{i-1} divide by
the previous pivot. A zero pivot would stop them cold, so tridkit switches to
the three-term recurrence from that point on.
"""

from tridkit import Sufficiency, TridiagonalMatrix, determinant, is_nonsingular_sufficient, minor_tables

# d = [1, 1, 3], a = b = [1, 2]: the second leading minor is 1*1 - 1*1 = 0
A = TridiagonalMatrix([1, 1, 3], [1, 2], [1, 2], mode="rational")
t = minor_tables(A)

# pivots stop at the zero; the minors keep going
print("pivots c:", [str(c) for c in t.c])
print("switched to the three-term recurrence at m =", t.f_switch)
print("leading minors f:", [str(x) for x in t.f])
print("trailing minors g:", [str(x) for x in t.g])

# both sweeps end on the determinant
print("det =", determinant(A, verify=True))

# the trailing pivots are all nonzero here, which already proves det != 0
print("sufficient test:", is_nonsingular_sufficient(A))
assert is_nonsingular_sufficient(A) is Sufficiency.ALL_E_NONZERO

# a singular matrix just gives det = 0
S = TridiagonalMatrix([2, 2, 2, -3], [-1, 1, 3], [-2, 1, -1], mode="rational")
print("singular example det =", determinant(S))
