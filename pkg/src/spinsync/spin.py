"""Spin-1 operators and the spherical phase-space toolkit.

The matrix basis is fixed once and for all: the S_z eigenstates are ordered
(m=+1, m=0, m=-1), mapped to row/column indices (0, 1, 2).  Every matrix in
this package uses that ordering.  It doubles as a truncated harmonic-oscillator
ladder via n=2 <-> m=+1, n=1 <-> m=0, n=0 <-> m=-1, which is what
``oscillator_phase_terms`` relies on.

Phase-space conventions
-----------------------
Spin-coherent states are rotations of the highest-weight state,

    |theta, phi> = (e^{-i phi} cos^2(theta/2), sin(theta)/sqrt(2),
                    e^{+i phi} sin^2(theta/2)),

so that exp(-i alpha S_z) |theta, phi> = |theta, phi + alpha> up to a global
phase.  With this choice the theta-marginal of the Husimi function minus the
uniform background is a two-harmonic function of the azimuth,

    S(phi) = amp1 * cos(phi + phase1) + amp2 * cos(2 phi + phase2),

with amp1 = (3/8 sqrt(2)) |rho_{1,0} + rho_{0,-1}| and
amp2 = (1/2 pi) |rho_{1,-1}|.  The prefactors are pinned by quadrature tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SQRT2 = float(np.sqrt(2.0))

#: matrix index of each S_z eigenvalue m
BASIS_INDEX = {+1: 0, 0: 1, -1: 2}

SZ = np.diag([1.0, 0.0, -1.0]).astype(complex)
SP = np.array([[0.0, SQRT2, 0.0], [0.0, 0.0, SQRT2], [0.0, 0.0, 0.0]], dtype=complex)
SM = SP.conj().T
SX = 0.5 * (SP + SM)
SY = -0.5j * (SP - SM)

#: weight of the cos(phi) harmonic in the spin phase distribution
COS1_WEIGHT = 3.0 / (8.0 * SQRT2)
#: weight of the cos(2 phi) harmonic (identical in both phase spaces)
COS2_WEIGHT = 1.0 / (2.0 * np.pi)
#: weight of the cos(phi) harmonic for the truncated-oscillator phase states
OSC_COS1_WEIGHT = 1.0 / (2.0 * np.pi)


def spin_operators() -> dict[str, np.ndarray]:
    """Fresh copies of the spin-1 matrices S_z, S_+, S_-, S_x, S_y."""
    return {
        "sz": SZ.copy(),
        "sp": SP.copy(),
        "sm": SM.copy(),
        "sx": SX.copy(),
        "sy": SY.copy(),
    }


def rotation_z(alpha: float) -> np.ndarray:
    """Rotation exp(-i alpha S_z) about the quantization axis."""
    return np.diag(np.exp(-1j * alpha * np.array([1.0, 0.0, -1.0])))


def _require_hermitian(rho: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {rho.shape}")
    scale = max(1.0, float(np.abs(rho).max()))
    if np.abs(rho - rho.conj().T).max() > tol * scale:
        raise ValueError("matrix is not Hermitian")
    return rho


@dataclass(frozen=True)
class CoherentState:
    """Spin-coherent state |theta, phi> with its basis amplitudes."""

    theta: float
    phi: float
    amplitudes: np.ndarray


def _coherent_amplitudes(theta, phi) -> np.ndarray:
    """Amplitudes of |theta, phi>; broadcasts over array-valued angles."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    half = 0.5 * theta
    return np.stack(
        [
            np.exp(-1j * phi) * np.cos(half) ** 2,
            np.sin(theta) / SQRT2 + 0.0j,
            np.exp(1j * phi) * np.sin(half) ** 2,
        ],
        axis=-1,
    )


def coherent_state(theta: float, phi: float) -> CoherentState:
    """Unit-norm spin-coherent state at polar angle theta and azimuth phi."""
    theta = float(theta)
    if not 0.0 <= theta <= np.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    phi = float(phi) % (2.0 * np.pi)
    return CoherentState(theta, phi, _coherent_amplitudes(theta, phi))


def husimi_q(rho: np.ndarray, theta, phi):
    """Husimi function Q(theta, phi) = <theta,phi|rho|theta,phi> * 3/(4 pi).

    ``theta`` and ``phi`` may be arrays (broadcast against each other); the
    result then has the broadcast shape.  Normalized so that the integral of
    Q sin(theta) dtheta dphi over the sphere is Tr[rho].
    """
    rho = _require_hermitian(rho)
    amps = _coherent_amplitudes(theta, phi)
    q = np.einsum("...i,ij,...j->...", amps.conj(), rho, amps).real
    q = q * (3.0 / (4.0 * np.pi))
    return float(q) if q.ndim == 0 else q


@dataclass(frozen=True)
class PhaseDistributionTerms:
    """Two-harmonic content of a shifted phase distribution.

    Represents S(phi) = amp1 cos(phi + phase1) + amp2 cos(2 phi + phase2).
    """

    amp1: float
    phase1: float
    amp2: float
    phase2: float

    def evaluate(self, phi):
        phi = np.asarray(phi, dtype=float)
        val = self.amp1 * np.cos(phi + self.phase1) + self.amp2 * np.cos(
            2.0 * phi + self.phase2
        )
        return float(val) if val.ndim == 0 else val

    def derivative(self, phi):
        phi = np.asarray(phi, dtype=float)
        val = -self.amp1 * np.sin(phi + self.phase1) - 2.0 * self.amp2 * np.sin(
            2.0 * phi + self.phase2
        )
        return float(val) if val.ndim == 0 else val


def phase_distribution_terms(rho: np.ndarray) -> PhaseDistributionTerms:
    """Harmonics of the shifted phase distribution in the spin phase space.

    Only the single-quantum coherences (through their sum) and the
    double-quantum coherence enter; populations drop out against the uniform
    background.
    """
    rho = _require_hermitian(rho)
    single = rho[0, 1] + rho[1, 2]
    double = rho[0, 2]
    return PhaseDistributionTerms(
        amp1=COS1_WEIGHT * abs(single),
        phase1=float(np.angle(single)) if single != 0 else 0.0,
        amp2=COS2_WEIGHT * abs(double),
        phase2=float(np.angle(double)) if double != 0 else 0.0,
    )


def oscillator_phase_terms(rho: np.ndarray) -> PhaseDistributionTerms:
    """Phase-distribution harmonics for the truncated-oscillator phase states.

    ``rho`` is read in the truncated Fock basis (n = 2, 1, 0 at indices
    0, 1, 2).  Differs from the spin case only in the cos(phi) weight.
    """
    rho = _require_hermitian(rho)
    single = rho[1, 2] + rho[0, 1]
    double = rho[0, 2]
    return PhaseDistributionTerms(
        amp1=OSC_COS1_WEIGHT * abs(single),
        phase1=float(np.angle(single)) if single != 0 else 0.0,
        amp2=COS2_WEIGHT * abs(double),
        phase2=float(np.angle(double)) if double != 0 else 0.0,
    )


def _bisect_stationary(terms: PhaseDistributionTerms, lo: float, hi: float) -> float:
    """Bisect a sign change of dS/dphi down to machine-width brackets."""
    dlo = terms.derivative(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < 1e-15:
            return mid
        dmid = terms.derivative(mid)
        if dmid == 0.0:
            return mid
        if (dlo > 0) == (dmid > 0):
            lo, dlo = mid, dmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def max_shifted_phase(
    terms: PhaseDistributionTerms, grid_points: int = 1024
) -> tuple[float, float]:
    """Global maximum of the two-harmonic distribution and its location.

    Returns ``(peak, phi_star)`` with phi_star in [0, 2 pi).  When the two
    harmonics peak at a common azimuth the maximum is amp1 + amp2 exactly;
    otherwise stationary points are bracketed on a grid and refined by
    bisection of the derivative.
    """
    a1, p1, a2, p2 = terms.amp1, terms.phase1, terms.amp2, terms.phase2
    if a1 == 0.0 and a2 == 0.0:
        return 0.0, 0.0
    if a2 == 0.0:
        return a1, float((-p1) % (2.0 * np.pi))
    if a1 == 0.0:
        return a2, float((-0.5 * p2) % np.pi)
    misalign = (p2 - 2.0 * p1 + np.pi) % (2.0 * np.pi) - np.pi
    if abs(misalign) < 1e-12:
        return a1 + a2, float((-p1) % (2.0 * np.pi))

    phis = np.linspace(0.0, 2.0 * np.pi, grid_points, endpoint=False)
    deriv = terms.derivative(phis)
    best_val, best_phi = -np.inf, 0.0
    for i in range(grid_points):
        j = (i + 1) % grid_points
        lo, hi = phis[i], phis[i] + 2.0 * np.pi / grid_points
        if deriv[i] == 0.0:
            phi_c = lo
        elif (deriv[i] > 0) != (deriv[j] > 0):
            phi_c = _bisect_stationary(terms, lo, hi)
        else:
            continue
        val = terms.evaluate(phi_c)
        if val > best_val + 1e-15:
            best_val, best_phi = val, phi_c % (2.0 * np.pi)
    return float(best_val), float(best_phi)
