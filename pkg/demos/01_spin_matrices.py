"""
Spin-1 matrices and the identities everything else rests on
============================================================

A quick tour: build the three spin matrices, look at their algebra, and see
why contracting the helicity operator with its own momentum gives exactly
zero -- the matrix shadow of "curl grad = 0".
"""

import numpy as np

from chimaxwell.spin_algebra import (
    annihilation_residual,
    build_spin_matrices,
    product_identity_residual,
    singularity_report,
    spin_dot_p,
)

np.set_printoptions(precision=3, suppress=True)

sx, sy, sz = build_spin_matrices()
print("S_z =\n", sz, "\n")

# The algebra closes: [S_x, S_y] = i S_z, and cyclically.
print("[S_x, S_y] - i S_z =", np.max(np.abs(sx @ sy - sy @ sx - 1j * sz)))

# Eigenvalues of the helicity operator along any direction are -1, 0, +1.
p = np.array([1.0, 2.0, 3.0])
print("eig(S.p_hat) =", np.round(np.linalg.eigvalsh(spin_dot_p(p / np.linalg.norm(p))), 12))

# The key identity: (S.p) p = 0 for every momentum -- exactly, not just to
# rounding, because each component is an antisymmetrized product.
print("|(S.p) p| at p = (1, 2, 3):", annihilation_residual(p))

# Products S_i (S.p) reduce to first-order expressions.  This is what lets a
# first-order wave equation generate the full curl/divergence system.
worst = max(product_identity_residual(axis, p) for axis in ("x", "y", "z"))
print("product-identity residual:", worst)

# But the matrices are singular: det S_i = 0, rank 2.  Multiplying an
# equation by S_i is therefore not an equivalence -- it can only enlarge the
# solution set.  That loophole is where the scalar extension lives.
print("determinants:", singularity_report())
print("ranks:", [np.linalg.matrix_rank(m) for m in (sx, sy, sz)])
