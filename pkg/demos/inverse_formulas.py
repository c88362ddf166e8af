"""
Four ways to the same inverse
=============================

The O(n^2) inverse uses alpha_ij = (-1)^{i+j} b_i..b_{j-1} f_{i-1} g_{j+1} / f_n
(for i <= j). tridkit also ships the pivot-ratio form, a Kronecker-delta sum
and a Hadamard split R o S as cross-checks.
"""

import numpy as np

from tridkit import (
    BreakdownEncountered,
    SignedOffdiagonals,
    TridiagonalMatrix,
    hadamard_factors,
    hadamard_recombine,
    inverse_entry,
    inverse_entry_kumar,
    invert,
    invert_huang,
    minor_tables,
    zero_structure,
)
from tridkit.oracle import dense_inverse, to_dense
from tridkit.textio import format_grid

A = TridiagonalMatrix([25, 13, 5, 1], [-9, -4, -1], [-9, -4, -1], mode="rational")
inv = invert(A)
print("det =", inv.delta)
print(format_grid(inv.alpha * inv.delta, "rational"))

# single entries in O(1) once the minor tables exist
t = minor_tables(A)
off = SignedOffdiagonals.from_matrix(A)
print("alpha_24 =", inverse_entry(t, off, t.det, 2, 4), "=", inverse_entry_kumar(t, off, t.det, 2, 4))

# Hadamard split: R carries the leading minors, S the trailing ones
fac = hadamard_factors(A)
assert (hadamard_recombine(fac).alpha == inv.alpha).all()

# the pivot-ratio form needs every pivot nonzero
B = TridiagonalMatrix([1, 1, 3], [1, 2], [1, 2], mode="rational")
try:
    invert_huang(B)
except BreakdownEncountered as exc:
    print("pivot-ratio form fails at", exc.which, exc.index, "; invert still works:")
print(format_grid(invert(B).alpha, "rational"))

# a vanishing trailing minor g_4 forces zeros into the inverse
Z = TridiagonalMatrix([1, 3, 1, 1, 1], [-1] * 4, [-1] * 4, mode="rational")
mask = zero_structure(Z, minor_tables(Z))
print("predicted zeros:")
print(format_grid(mask.astype(int), "rational"))
print("oracle inverse:")
print(format_grid(dense_inverse(to_dense(Z)), "rational"))
assert np.all(invert(Z).alpha[mask] == 0)
