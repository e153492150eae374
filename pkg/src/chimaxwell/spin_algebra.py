"""Spin-1 matrix algebra on complex 3-vectors.

Convention
----------
The spin matrices act on 3-component fields with entries

    (S_i)^{jk} = i eps^{jik}     (equivalently  -i eps^{ijk}),

so (S.p) v = i p x v and the contraction (S.p) p vanishes identically --
the matrix image of "curl grad = 0".  Under this convention

    S_z = [[0, -i, 0],
           [i,  0, 0],
           [0,  0, 0]],

[S_i, S_j] = i eps_ijk S_k, each S_i is Hermitian, and the helicity +1 / -1
eigenvectors of S_z are (1, +i, 0)/sqrt(2) and (1, -i, 0)/sqrt(2).

Other texts transpose the matrices; exactly one convention is exported here
and everything downstream (plane-wave builders, the spectral solver's field
initializers) uses it.

All functions are pure and every returned array is freshly allocated, so the
module is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import numpy as np

from .errors import PreconditionViolated

__all__ = [
    "levi_civita",
    "build_spin_matrices",
    "spin_dot_p",
    "annihilation_residual",
    "product_identity_residual",
    "dirac_chain_residual",
    "singularity_report",
]

_AXES = {"x": 0, "y": 1, "z": 2, 0: 0, 1: 1, 2: 2}


def levi_civita(i: int, j: int, k: int) -> int:
    """Totally antisymmetric symbol eps_ijk for 0-based indices, in {-1, 0, +1}."""
    return (j - i) * (k - j) * (k - i) // 2


def build_spin_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (Sx, Sy, Sz) as fresh 3x3 complex arrays, (S_i)^{jk} = i eps^{jik}."""
    mats = np.zeros((3, 3, 3), dtype=np.complex128)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                mats[i, j, k] = 1j * levi_civita(j, i, k)
    return mats[0], mats[1], mats[2]


def spin_dot_p(p: np.ndarray) -> np.ndarray:
    """Helicity operator S.p = sum_i p_i S_i.

    Hermitian with spectrum {+|p|, 0, -|p|}; acts as (S.p) v = i p x v.
    """
    p = np.asarray(p, dtype=np.float64)
    sx, sy, sz = build_spin_matrices()
    return p[0] * sx + p[1] * sy + p[2] * sz


def annihilation_residual(p: np.ndarray) -> float:
    """Norm of (S.p) p, which vanishes identically: eps^{jik} p^i p^k = 0.

    Bounded by 1e-14 * |p|^2 for all inputs (exact zero in IEEE arithmetic,
    since each component is a difference of identical products).
    """
    p = np.asarray(p, dtype=np.float64)
    return float(np.linalg.norm(spin_dot_p(p) @ p.astype(np.complex128)))


def product_identity_residual(axis, p: np.ndarray) -> float:
    """Entrywise check of the spin-1 product reduction

        [S^i (S.p)]^{jm} = p^i I^{jm} - i [S x p]^{i,jm} - p^m delta^{ij},

    where [S x p]^{i,jm} = eps^{ikl} (S_k)^{jm} p_l.  Returns the maximum
    absolute entry of LHS - RHS; bounded by 1e-13 * (1 + |p|).
    """
    i = _AXES[axis]
    p = np.asarray(p, dtype=np.float64)
    mats = build_spin_matrices()
    lhs = mats[i] @ spin_dot_p(p)

    s_cross_p = np.zeros((3, 3), dtype=np.complex128)
    for k in range(3):
        for l in range(3):
            e = levi_civita(i, k, l)
            if e:
                s_cross_p += e * mats[k] * p[l]
    rhs = p[i] * np.eye(3) - 1j * s_cross_p
    rhs[i, :] -= p
    return float(np.max(np.abs(lhs - rhs)))


def dirac_chain_residual(
    p: np.ndarray, pt: float, psi: np.ndarray
) -> tuple[float, float, float]:
    """Residuals of the three equations obtained from {pt I + S.p} psi = 0
    by left-multiplying with S_x, S_y, S_z and reducing the products:

        {p_x + S_x pt - i S_y p_z + i S_z p_y} psi - (p.psi) e_x = 0,

    and cyclic for y, z.  Each residual is bounded by 1e-11 whenever psi
    satisfies the first-order equation and transversality p.psi = 0, showing
    the derived set carries no information beyond those two conditions.

    Raises
    ------
    PreconditionViolated
        If psi fails {pt I + S.p} psi = 0 or p.psi = 0 beyond 1e-12 (scaled).
    """
    p = np.asarray(p, dtype=np.float64)
    psi = np.asarray(psi, dtype=np.complex128)
    sx, sy, sz = build_spin_matrices()
    sp = spin_dot_p(p)

    scale = 1e-12 * (1.0 + abs(pt) + np.linalg.norm(p)) * max(np.linalg.norm(psi), 1e-300)
    if np.linalg.norm(pt * psi + sp @ psi) > scale:
        raise PreconditionViolated("psi does not solve {pt I + S.p} psi = 0")
    if abs(np.dot(p, psi)) > scale:
        raise PreconditionViolated("psi is not transverse: p.psi != 0")

    p_dot_psi = np.dot(p.astype(np.complex128), psi)
    residuals = []
    cyclic = ((0, sx, sy, sz), (1, sy, sz, sx), (2, sz, sx, sy))
    for i, s_i, s_next, s_prev in cyclic:
        vec = (p[i] * psi + pt * (s_i @ psi)
               - 1j * p[(i + 2) % 3] * (s_next @ psi)
               + 1j * p[(i + 1) % 3] * (s_prev @ psi))
        vec[i] -= p_dot_psi
        residuals.append(float(np.linalg.norm(vec)))
    return residuals[0], residuals[1], residuals[2]


def singularity_report() -> tuple[float, float, float]:
    """(|det Sx|, |det Sy|, |det Sz|) -- all zero: the spin-1 matrices are
    singular (rank 2), so inverting them is never legitimate."""
    return tuple(float(abs(np.linalg.det(m))) for m in build_spin_matrices())
