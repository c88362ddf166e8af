"""
Large orders and operation counts
=================================

Minors of a diagonally dominant matrix grow geometrically and overflow
binary64 near n = 700. Scaled mode keeps an unbounded exponent beside each
significand. The flop counter shows the linear and quadratic costs.
"""

import numpy as np

from tridkit import determinant, invert
from tridkit.bench import count_flops, random_dominant

rng = np.random.default_rng(0)
A = random_dominant(1024, rng)

# double precision: the determinant overflows
print("double det:", determinant(A))

# scaled mode: same matrix, finite answer
S = A.astype("scaled")
det = determinant(S)
print("scaled det: %r (about 2^%d)" % (det, det.exp))

# the inverse itself is well scaled, so entries fit in a float again
inv = invert(S)
print("alpha_11 =", inv.alpha[0, 0])

# doubling n doubles the determinant cost and quadruples the inverse cost
for n in (128, 256, 512):
    B = random_dominant(n, np.random.default_rng([0, n]), mode="scaled")
    print(n, count_flops("determinant", B), count_flops("invert", B))
