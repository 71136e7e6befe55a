"""Perturbative response of a limit cycle to a weak signal.

The stationary state is expanded in powers of the signal strength epsilon.
Order zero is the diagonal limit-cycle state; order one is strictly
off-diagonal and carries all synchronization features, obtained sector by
sector as rho1 = -(coherence block)^{-1} applied to the drive of the target
state.  The permitted strength follows from a fixed threshold eta on the
relative size of the correction,

    epsilon = eta * ||rho0|| / ||rho1||   (Hilbert-Schmidt norms),

and the synchronization measure is the peak of the shifted phase distribution
of rho1, scaled by that epsilon.  Higher orders and the exact stationary state
at finite epsilon are provided for forcing-regime studies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lindblad import (
    SECTOR_SLOTS,
    LimitCycleSpec,
    Liouvillian,
    build_liouvillian,
    hamiltonian_superop,
    sector_block,
    steady_state,
    unvec,
    vec,
)
from .signals import SignalSpec, build_hext
from .spin import SZ, PhaseDistributionTerms, max_shifted_phase, phase_distribution_terms


class SingularCoherenceBlockError(ValueError):
    """A driven coherence sector is undamped; no synchronization regime exists."""


class ZeroResponseError(ValueError):
    """The signal does not couple to the limit cycle at first order."""


class DegenerateSteadyStateError(ValueError):
    """The driven generator has no unique stationary state."""


class NonDiagonalizableError(ValueError):
    """A coherence block cannot be reliably eigendecomposed."""


def hs_norm(op: np.ndarray) -> float:
    """Hilbert-Schmidt norm sqrt(Tr[O^dag O])."""
    return float(np.linalg.norm(op))


@dataclass(frozen=True)
class PerturbationResult:
    """Leading perturbative orders with the permitted signal strength."""

    rho0: np.ndarray
    rho1: np.ndarray
    epsilon: float
    eta: float
    norm0: float
    norm1: float


@dataclass(frozen=True)
class SyncResult:
    """Synchronization measure with the locked phase and signal strength."""

    value: float
    locked_phase: float
    terms: PhaseDistributionTerms
    epsilon: float
    eta: float
    zero_response: bool = False


def _lext_apply(h: np.ndarray, rho: np.ndarray) -> np.ndarray:
    return -1j * (h @ rho - rho @ h)


def _solve_sector(block: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    svals = np.linalg.svd(block, compute_uv=False)
    if svals[-1] <= 1e-12 * svals[0]:
        raise SingularCoherenceBlockError(
            "driven coherence sector has an (almost) undamped mode"
        )
    return np.linalg.solve(block, rhs)


def _first_order_from(liou: Liouvillian, rho0: np.ndarray, h: np.ndarray) -> np.ndarray:
    drive = _lext_apply(h, rho0)
    rho1 = np.zeros((3, 3), dtype=complex)
    for k in (1, 2):
        slots = SECTOR_SLOTS[k]
        rhs = np.array([drive[s] for s in slots])
        if not rhs.any():
            continue
        sol = -_solve_sector(liou.sector_blocks[k], rhs)
        for s, x in zip(slots, sol):
            rho1[s] = x
            rho1[s[1], s[0]] = np.conj(x)
    return rho1


def first_order(lc: LimitCycleSpec, signal: SignalSpec) -> np.ndarray:
    """First-order correction rho1: strictly off-diagonal, Hermitian, traceless."""
    liou = build_liouvillian(lc)
    rho0 = steady_state(liou)
    return _first_order_from(liou, rho0, build_hext(signal))


def coherence_response(lc: LimitCycleSpec):
    """Linear maps from tone amplitudes to first-order coherences.

    Returns ``(rho0, map1, map2)`` where ``map1`` is the 2x2 complex matrix
    sending (t01, tm10) to (rho1_{1,0}, rho1_{0,-1}) and ``map2`` the scalar
    sending tm11 to rho1_{1,-1}.  Useful for sweeps and optimizers, since the
    response is linear in the tones sector by sector.
    """
    liou = build_liouvillian(lc)
    rho0 = steady_state(liou)
    pops = rho0.diagonal().real
    sq2 = math.sqrt(2.0)
    drive1 = np.diag(
        [-1j * sq2 * (pops[1] - pops[0]), -1j * sq2 * (pops[2] - pops[1])]
    )
    map1 = -_solve_sector(liou.sector_blocks[1], drive1)
    # sector-2 response only exists when the extremal populations differ
    if pops[2] != pops[0]:
        inv = _solve_sector(liou.sector_blocks[2], np.array([1.0 + 0j]))[0]
        map2 = 2j * (pops[2] - pops[0]) * inv
    else:
        map2 = 0j
    return rho0, map1, complex(map2)


def epsilon_for_threshold(rho0: np.ndarray, rho1: np.ndarray, eta: float) -> float:
    """Permitted signal strength eta * ||rho0|| / ||rho1||.

    Raises :class:`ZeroResponseError` when the first-order response vanishes
    (relative to rho0), in which case the strength is unbounded and the
    caller decides.
    """
    n0 = hs_norm(rho0)
    n1 = hs_norm(rho1)
    if n1 <= 1e-12 * n0:
        raise ZeroResponseError("signal does not couple at first order")
    return float(eta) * n0 / n1


def perturbation_result(
    lc: LimitCycleSpec, signal: SignalSpec, eta: float = 0.1
) -> PerturbationResult:
    """Orders zero and one together with the permitted strength."""
    liou = build_liouvillian(lc)
    rho0 = steady_state(liou)
    rho1 = _first_order_from(liou, rho0, build_hext(signal))
    eps = epsilon_for_threshold(rho0, rho1, eta)
    return PerturbationResult(
        rho0=rho0,
        rho1=rho1,
        epsilon=eps,
        eta=float(eta),
        norm0=hs_norm(rho0),
        norm1=hs_norm(rho1),
    )


def sync_measure(
    lc: LimitCycleSpec, signal: SignalSpec, eta: float = 0.1
) -> SyncResult:
    """Synchronization measure of the limit cycle under the given signal.

    The value is epsilon(eta) times the peak of the shifted phase
    distribution of rho1; it is invariant under rescaling the tones by any
    nonzero complex factor.  A signal that does not couple at first order is
    reported with value 0 and the ``zero_response`` flag set (epsilon is then
    unbounded and returned as inf).
    """
    liou = build_liouvillian(lc)
    rho0 = steady_state(liou)
    rho1 = _first_order_from(liou, rho0, build_hext(signal))
    terms = phase_distribution_terms(rho1)
    try:
        eps = epsilon_for_threshold(rho0, rho1, eta)
    except ZeroResponseError:
        return SyncResult(
            value=0.0,
            locked_phase=float("nan"),
            terms=terms,
            epsilon=float("inf"),
            eta=float(eta),
            zero_response=True,
        )
    peak, phi_star = max_shifted_phase(terms)
    return SyncResult(
        value=eps * peak,
        locked_phase=phi_star,
        terms=terms,
        epsilon=eps,
        eta=float(eta),
    )


def perturbative_orders(
    lc: LimitCycleSpec, signal: SignalSpec, kmax: int
) -> list[np.ndarray]:
    """Orders rho^(0) ... rho^(kmax) of the stationary-state expansion.

    Each order k >= 1 solves the coherence sectors by block inversion and the
    population sector by a least-squares solve on the trace-augmented
    population block (its null direction is rho0; the trace-zero condition
    fixes the free component).
    """
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    liou = build_liouvillian(lc)
    rho0 = steady_state(liou)
    h = build_hext(signal)
    orders = [rho0]
    if kmax == 0:
        return orders
    orders.append(_first_order_from(liou, rho0, h))
    aug = np.vstack([liou.diag_block, np.ones((1, 3))])
    for _ in range(2, kmax + 1):
        rhs_mat = 1j * (h @ orders[-1] - orders[-1] @ h)  # -L_ext rho^(k-1)
        rho_k = np.zeros((3, 3), dtype=complex)
        pop_rhs = np.concatenate([rhs_mat.diagonal().real, [0.0]])
        pops = np.linalg.lstsq(aug, pop_rhs, rcond=None)[0]
        np.fill_diagonal(rho_k, pops)
        for k in (1, 2):
            slots = SECTOR_SLOTS[k]
            rhs = np.array([rhs_mat[s] for s in slots])
            if not rhs.any():
                continue
            sol = _solve_sector(liou.sector_blocks[k], rhs)
            for s, x in zip(slots, sol):
                rho_k[s] = x
                rho_k[s[1], s[0]] = np.conj(x)
        orders.append(rho_k)
    return orders


def kth_order(lc: LimitCycleSpec, signal: SignalSpec, k: int) -> np.ndarray:
    """Order-k term of the stationary-state expansion."""
    return perturbative_orders(lc, signal, k)[k]


_TRACE_ROW = np.zeros(9)
_TRACE_ROW[[0, 4, 8]] = 1.0


def full_steady_state(
    lc: LimitCycleSpec, signal: SignalSpec, epsilon: float
) -> np.ndarray:
    """Exact stationary state of the driven generator at finite epsilon."""
    liou = build_liouvillian(lc)
    gen = liou.full + float(epsilon) * hamiltonian_superop(build_hext(signal))
    _, svals, vt = np.linalg.svd(gen)
    if svals[-2] <= 1e-10 * svals[0]:
        raise DegenerateSteadyStateError("driven generator has a degenerate kernel")
    rho = unvec(vt[-1].conj())
    rho = 0.5 * (rho + rho.conj().T)
    tr = float(rho.trace().real)
    if abs(tr) < 1e-8 * hs_norm(rho):
        raise DegenerateSteadyStateError("stationary direction is traceless")
    rho = rho / tr
    # one least-squares correction on the trace-augmented system
    aug = np.vstack([gen, _TRACE_ROW])
    resid = np.concatenate([gen @ vec(rho), [0.0]])
    delta = np.linalg.lstsq(aug, resid, rcond=None)[0]
    rho = rho - unvec(delta)
    return 0.5 * (rho + rho.conj().T)


def p_avg(rho: np.ndarray, rho0: np.ndarray) -> float:
    """Change of the average level occupation, Tr[S_z (rho - rho0)]."""
    return float(np.trace(SZ @ (np.asarray(rho) - np.asarray(rho0))).real)


def p_max(rho: np.ndarray, rho0: np.ndarray) -> float:
    """Largest change of any individual population."""
    diff = np.asarray(rho).diagonal().real - np.asarray(rho0).diagonal().real
    return float(np.abs(diff).max())


@dataclass(frozen=True)
class Eigencoherence:
    """One eigenmode of the coherence dynamics and how strongly it is driven."""

    decay: complex
    mode: np.ndarray
    drive: complex


def eigencoherences(lc: LimitCycleSpec, signal: SignalSpec) -> list[Eigencoherence]:
    """Eigenmode decomposition of the first-order response.

    For each coherence sector the block is eigendecomposed; the drive
    coefficients are projections of the signal action on the target state
    onto the (dual) eigenbasis, so that rho1 = -sum_l mode_l drive_l/decay_l
    always reconstructs.  When the blocks are normal the eigenmodes are
    orthonormal and ||rho1||^2 = sum_l |drive_l/decay_l|^2.  Blocks with an
    ill-conditioned eigenbasis raise :class:`NonDiagonalizableError`; the
    threshold rule itself stays well defined in that case.
    """
    liou = build_liouvillian(lc)
    rho0 = steady_state(liou)
    drive_mat = _lext_apply(build_hext(signal), rho0)
    out: list[Eigencoherence] = []
    for k in (1, 2, -1, -2):
        slots = SECTOR_SLOTS[k]
        block = sector_block(liou, k)
        evals, vecs = np.linalg.eig(block)
        if np.linalg.cond(vecs) >= 1e8:
            raise NonDiagonalizableError(
                f"coherence block of sector {k} has an ill-conditioned eigenbasis"
            )
        rhs = np.array([drive_mat[s] for s in slots])
        coeffs = np.linalg.solve(vecs, rhs)
        for idx in range(len(evals)):
            mode = np.zeros((3, 3), dtype=complex)
            for s, x in zip(slots, vecs[:, idx]):
                mode[s] = x
            out.append(
                Eigencoherence(
                    decay=complex(evals[idx]),
                    mode=mode,
                    drive=complex(coeffs[idx]),
                )
            )
    return out
