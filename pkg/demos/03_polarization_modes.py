"""
Massive vector modes: three spin-1 polarizations plus a spin-0 imposter
=======================================================================

The four polarization 4-vectors of a massive vector field, the B/E triplets
of its field-strength tensor, and two diagnostics that split genuine spin-1
content from the time-like mode.
"""

import numpy as np

from chimaxwell.polarization import (
    CONSTANT,
    MODES,
    TRIPLET_MODES,
    ast_from_potential,
    field_triplet,
    magnetic_from_ast,
    mode_gram,
    normalization_change_check,
    phase_relation,
    polarization_vector,
    proca_residual,
)

np.set_printoptions(precision=4, suppress=True)

p = np.array([0.0, 0.0, 3.0])
m = 4.0

print(f"polarization 4-vectors at p = {p}, m = {m} (N = 1):")
for mode in MODES:
    u = polarization_vector(p, mode, m, CONSTANT).u
    print(f"  u({mode:>3}) =", np.round(u, 4))

# The coupled first-order system (potential + rescaled field strength) is
# solved by the three transverse modes and violated by the time-like one --
# whose residual is exactly (m/2) max|u|: the spin-0 content of a 4-vector.
print("\nfield-equation residuals:")
for mode in MODES:
    pol = polarization_vector(p, mode, m)
    marker = "" if mode != "0_t" else "   <- spin-0 mode, fails by (m/2)|u|"
    print(f"  {mode:>3}: {proca_residual(pol):.3e}{marker}")

print("\nafter the rescaling A -> 2m A (textbook normalization):")
for mode in MODES:
    pol = polarization_vector(p, mode, m)
    print(f"  {mode:>3}: {normalization_change_check(pol):.3e}")

# B triplets: closed form vs the field-strength route.
print("\nmagnetic triplet of the +1 mode, two routes:")
printed = field_triplet(p, "+1", "B", +1, m).vec
tensor = magnetic_from_ast(ast_from_potential(polarization_vector(p, "+1", m), +1))
print("  closed form :", np.round(printed, 5))
print("  from F^{mn} :", np.round(tensor, 5))

# Positive- and negative-frequency triplets of opposite modes agree up to a
# sign that flips only for the longitudinal mode.
q = np.array([0.7, -1.1, 0.4])
print(f"\nphase ratios kind^(+)(p, l) / kind^(-)(p, -l) at p = {q}:")
for kind in ("B", "E"):
    ratios = [phase_relation(q, mode, kind, 1.0) for mode in TRIPLET_MODES]
    print(f"  {kind}: ", [f"{r.real:+.3f}{r.imag:+.3f}i" for r in ratios])

# Orthogonality of the four modes under the Minkowski product (N = m).
print("\nGram matrix with N = m (diag -m^2, -m^2, -m^2, +m^2):")
print(np.round(mode_gram(q, 2.0).real, 10))
