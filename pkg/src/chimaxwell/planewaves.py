"""Momentum-space plane-wave families of the scalar-extended photon system.

The complex field combination psi = E - iB turns the two curl equations into
a single first-order system.  In momentum space the second-order (dispersion)
operator factorizes algebraically:

    (E^2 - p^2) psi = (E I - S.p)(E I + S.p) psi - p (p.psi)        (identity)

which holds for EVERY (E, p, psi), on-shell or not.  The standard solution
family imposes

    (E I + S.p) psi = 0,     p.psi = 0,

but the factorization is equally annihilated by the one-parameter extension

    (E I + S.p) psi = p chi,     p.psi = E chi,

for an arbitrary scalar amplitude chi, because (S.p) p = 0 identically.
Splitting psi and chi into real and imaginary parts under the operator map
E -> i d/dt, p -> -i grad reproduces the coordinate-space system solved by
`chi_solver` (curl equations sourced by grad chi, divergences by d/dt chi).

Contracting p with the extended first equation and using (S.p) p = 0 forces
(E^2 - p^2) chi = 0: a nonzero chi exists only on the massless shell.

Conventions: natural units c = hbar = 1; helicity eigenvectors are built by
the explicit rotation R_z(phi) R_y(theta) from the z-frame eigenvectors with
phi = atan2(py, px) (phi = 0 on the z-axis), so all phases are deterministic.
Everything here is pure and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionViolated, ZeroMomentum
from .spin_algebra import spin_dot_p

__all__ = [
    "MomentumState",
    "RSVector",
    "helicity_eigenvector",
    "factorization_residual",
    "standard_solution_residual",
    "generalized_solution_residual",
    "build_generalized_planewave",
    "chi_onshell_residual",
]


@dataclass(frozen=True)
class MomentumState:
    """Kinematic record (E, p, m); natural units."""

    energy: float
    p: np.ndarray
    mass: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "p", np.asarray(self.p, dtype=np.float64))
        if self.p.shape != (3,):
            raise ValueError("p must be a 3-vector")

    def on_shell(self) -> bool:
        gap = self.energy**2 - float(self.p @ self.p) - self.mass**2
        return abs(gap) <= 1e-12 * max(1.0, self.energy**2)


@dataclass(frozen=True)
class RSVector:
    """Complex field amplitude psi = E - iB plus the scalar amplitude chi."""

    psi: np.ndarray
    chi: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "psi", np.asarray(self.psi, dtype=np.complex128))
        object.__setattr__(self, "chi", complex(self.chi))
        if self.psi.shape != (3,):
            raise ValueError("psi must be a complex 3-vector")

    @property
    def e_field(self) -> np.ndarray:
        return self.psi.real.copy()

    @property
    def b_field(self) -> np.ndarray:
        return -self.psi.imag.copy()


_BASE_Z = {
    +1: -np.array([1.0, 1.0j, 0.0]) / np.sqrt(2.0),
    -1: np.array([1.0, -1.0j, 0.0]) / np.sqrt(2.0),
    0: np.array([0.0, 0.0, 1.0], dtype=np.complex128),
}


def helicity_eigenvector(p: np.ndarray, helicity: int) -> np.ndarray:
    """Unit eigenvector of S.p_hat with eigenvalue `helicity` in {+1, -1, 0}.

    Built by rotating the z-frame eigenvectors with R_z(phi) R_y(theta);
    the azimuthal branch is atan2, with phi = 0 whenever px = py = 0.
    """
    p = np.asarray(p, dtype=np.float64)
    norm = float(np.linalg.norm(p))
    if norm == 0.0:
        raise ZeroMomentum("helicity basis undefined at p = 0")
    if helicity not in (-1, 0, 1):
        raise ValueError("helicity must be one of -1, 0, +1")
    theta = np.arccos(np.clip(p[2] / norm, -1.0, 1.0))
    phi = np.arctan2(p[1], p[0])
    ct, st = np.cos(theta), np.sin(theta)
    cp, sp = np.cos(phi), np.sin(phi)
    rot = np.array([[cp, -sp, 0.0], [sp, cp, 0.0], [0.0, 0.0, 1.0]]) @ np.array(
        [[ct, 0.0, st], [0.0, 1.0, 0.0], [-st, 0.0, ct]]
    )
    return rot @ _BASE_Z[helicity]


def factorization_residual(state: MomentumState, v: RSVector) -> float:
    """Max-component residual of the factorization identity

        (E^2 - p^2) psi  vs  (E I - S.p)(E I + S.p) psi - p (p.psi).

    An operator identity, not an equation of motion: bounded by
    1e-12 * (1 + E^2 + |p|^2) * |psi| for arbitrary, including off-shell,
    inputs.  chi plays no role here.
    """
    e, p, psi = state.energy, state.p, v.psi
    sp = spin_dot_p(p)
    lhs = (e * e - float(p @ p)) * psi
    eye = np.eye(3)
    rhs = (e * eye - sp) @ ((e * eye + sp) @ psi) - p * np.dot(p, psi)
    return float(np.max(np.abs(lhs - rhs)))


def standard_solution_residual(state: MomentumState, v: RSVector) -> tuple[float, float]:
    """(|(E I + S.p) psi|, |p.psi|) -- both vanish on the homogeneous
    transverse family."""
    e, p, psi = state.energy, state.p, v.psi
    first = np.linalg.norm(e * psi + spin_dot_p(p) @ psi)
    second = abs(np.dot(p, psi))
    return float(first), float(second)


def generalized_solution_residual(state: MomentumState, v: RSVector) -> tuple[float, float]:
    """(|(E I + S.p) psi - p chi|, |p.psi - E chi|).

    With chi = 0 this equals `standard_solution_residual` bit for bit.
    """
    e, p, psi, chi = state.energy, state.p, v.psi, v.chi
    first = np.linalg.norm(e * psi + spin_dot_p(p) @ psi - p * chi)
    second = abs(np.dot(p, psi) - e * chi)
    return float(first), float(second)


def build_generalized_planewave(
    p: np.ndarray,
    energy_sign: int,
    transverse_amplitude: complex,
    chi: complex,
) -> tuple[MomentumState, RSVector]:
    """Construct an exact solution of the chi-extended pair on |E| = |p|.

    Returns E = energy_sign * |p| and

        psi = a * e_h(p_hat) + (p / E) * chi,

    where e_h is the helicity eigenvector with (S.p_hat) e_h = -energy_sign e_h
    (the homogeneous transverse mode) and the longitudinal part carries chi.
    The residual pair of the output is <= 1e-13 (scaled).
    """
    p = np.asarray(p, dtype=np.float64)
    norm = float(np.linalg.norm(p))
    if norm == 0.0:
        raise ZeroMomentum("plane-wave construction requires |p| > 0")
    if energy_sign not in (-1, +1):
        raise ValueError("energy_sign must be +1 or -1")
    energy = energy_sign * norm
    e_h = helicity_eigenvector(p, -energy_sign)
    psi = complex(transverse_amplitude) * e_h + (p / energy) * complex(chi)
    return MomentumState(energy, p, 0.0), RSVector(psi, complex(chi))


def chi_onshell_residual(state: MomentumState, v: RSVector) -> float:
    """|(E^2 - p^2) chi| for a generalized solution: a nonzero chi forces the
    massless dispersion relation.

    Raises
    ------
    PreconditionViolated
        If v is not a generalized solution within 1e-12 (scaled).
    """
    e, p = state.energy, state.p
    scale = (1.0 + abs(e) + float(np.linalg.norm(p))) * max(
        float(np.linalg.norm(v.psi)) + abs(v.chi), 1e-300
    )
    r1, r2 = generalized_solution_residual(state, v)
    if max(r1, r2) > 1e-12 * scale:
        raise PreconditionViolated("input does not solve the chi-extended pair")
    return float(abs((e * e - float(p @ p)) * v.chi))
