"""
From the factorization identity to chi-extended plane waves
===========================================================

The second-order dispersion operator factorizes into first-order pieces for
any (E, p, psi) whatsoever.  The textbook route then imposes the transverse
first-order pair; here we also build the larger family that a scalar
amplitude chi opens up, and watch it force the massless dispersion relation.
"""

import numpy as np

from chimaxwell.planewaves import (
    MomentumState,
    RSVector,
    build_generalized_planewave,
    chi_onshell_residual,
    factorization_residual,
    generalized_solution_residual,
    standard_solution_residual,
)

rng = np.random.default_rng(0)

# --- 1. the factorization is an identity, not an equation of motion -------
worst = 0.0
for _ in range(500):
    e = rng.uniform(-10, 10)                  # deliberately OFF shell
    p = rng.uniform(-10, 10, 3)
    psi = rng.normal(size=3) + 1j * rng.normal(size=3)
    scale = (1 + e * e + p @ p) * np.linalg.norm(psi)
    worst = max(worst, factorization_residual(MomentumState(e, p), RSVector(psi)) / scale)
print("factorization residual over 500 off-shell states:", worst)

# --- 2. the homogeneous (chi = 0) transverse solution ----------------------
p = np.array([0.0, 0.0, 1.0])
state, wave = build_generalized_planewave(p, +1, transverse_amplitude=1.0, chi=0.0)
print("\ntransverse mode at p = z_hat:", np.round(wave.psi, 6))
print("residual pair:", standard_solution_residual(state, wave))

# --- 3. switch on chi: a longitudinal component appears --------------------
state, wave = build_generalized_planewave(p, +1, transverse_amplitude=1.0, chi=0.5)
print("\nwith chi = 0.5:", np.round(wave.psi, 6))
print("extended residual pair:", generalized_solution_residual(state, wave))

# The longitudinal part is (p / E) chi: the divergence equations pick up
# time-derivative sources, i.e. effective charge densities.
print("E field:", np.round(wave.e_field, 6))
print("B field:", np.round(wave.b_field, 6))

# --- 4. chi is only consistent on the massless shell ------------------------
print("\n(E^2 - p^2) chi over the built family:")
worst = 0.0
for _ in range(200):
    q = rng.uniform(-5, 5, 3)
    if np.linalg.norm(q) < 1e-3:
        continue
    st, v = build_generalized_planewave(q, int(rng.choice([-1, 1])),
                                        complex(rng.normal()), complex(rng.normal()))
    worst = max(worst, chi_onshell_residual(st, v))
print("max residual:", worst)
print("-> a nonzero chi forces |E| = |p|: the extension adds solutions, "
      "not new dispersion branches")
