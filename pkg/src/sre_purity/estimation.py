"""Swap-test purity estimation at the shot level, plus copy-budget arithmetic.

Shots are drawn from the exact Bernoulli law P(outcome 0) = (1 + tr[rho sigma])/2
computed from the two preparations of each shot; the full cSWAP circuit exists
behind a separate source (validated against the Bernoulli law in tests) rather
than being simulated per shot.  For the incoherent method each shot draws two
independent preparations — sharing one drawn string across both would estimate
a different functional.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import incoherent_sample
from .errors import DimensionError
from .oracle import pauli_expectations
from .states import DensityMatrix, StateVector, hadamard_layer

_CEIL_GUARD = 1e-9


def ceil_with_guard(value: float) -> int:
    """Ceiling that forgives sub-1e-9 floating-point overshoot."""
    return math.ceil(value - _CEIL_GUARD * max(1.0, abs(value)))


@dataclass(frozen=True)
class ShotBudget:
    """Copy and shot counts for a target additive error and failure probability.

    copies_of_psi = ceil(alpha d^2 / (epsilon^2 delta)); each swap-test shot
    consumes two alpha-copy preparations, so swap_shots = ceil(copies/(2 alpha));
    tau = epsilon/d is the induced purity error target.
    """

    alpha: int
    d: int
    epsilon: float
    delta: float
    tau: float
    copies_of_psi: int
    swap_shots: int

    def __post_init__(self):
        if self.swap_shots != -(-self.copies_of_psi // (2 * self.alpha)):
            raise ValueError("swap_shots must be ceil(copies_of_psi / (2 alpha))")
        if abs(self.tau - self.epsilon / self.d) > 1e-15:
            raise ValueError("tau must equal epsilon/d")


def copies_required(alpha: int, d: int, epsilon: float, delta: float) -> ShotBudget:
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    if not 0 < epsilon <= 1 or not 0 < delta <= 1:
        raise ValueError(f"epsilon and delta must lie in (0, 1], got {epsilon}, {delta}")
    copies = ceil_with_guard(alpha * d * d / (epsilon * epsilon * delta))
    shots = -(-copies // (2 * alpha))
    return ShotBudget(alpha, d, epsilon, delta, epsilon / d, copies, shots)


# ---------------------------------------------------------------------------
# shot sources


def state_overlap(a, b) -> float:
    """tr[rho sigma] for any combination of pure states and density matrices."""
    if isinstance(a, StateVector) and isinstance(b, StateVector):
        return float(abs(np.vdot(a.amps, b.amps)) ** 2)
    if isinstance(a, DensityMatrix) and isinstance(b, DensityMatrix):
        return float(np.vdot(a.mat, b.mat).real)
    if isinstance(a, StateVector):
        a, b = b, a
    return float(np.vdot(b.amps, a.mat @ b.amps).real)


class StaticSource:
    """Yields the same (generally mixed) preparation every draw."""

    def __init__(self, rho):
        self.rho = rho
        self._overlap = state_overlap(rho, rho)

    def draw(self, rng):
        return self.rho

    def pair_overlap_batch(self, rng, shots: int) -> np.ndarray:
        return np.full(shots, self._overlap)


class IncoherentPairSource:
    """Two independent incoherent preparations per shot.

    The per-shot Bernoulli parameter is the physical overlap of the two
    index-free samples; it is looked up through the canonical-index XOR
    identity instead of re-deriving it from the sampled amplitude vectors.
    """

    def __init__(self, psi: StateVector, alpha: int):
        self.psi = psi
        self.alpha = alpha
        self._overlaps = pauli_expectations(psi) ** (2 * alpha)

    def draw(self, rng):
        return incoherent_sample(self.psi, self.alpha, rng)

    def pair_overlap_batch(self, rng, shots: int) -> np.ndarray:
        d2 = 4**self.psi.n
        j1 = rng.integers(0, d2, size=shots)
        j2 = rng.integers(0, d2, size=shots)
        return self._overlaps[j1 ^ j2]


def swap_test_shot(source, rng) -> int:
    """One swap-test outcome bit; P(0) = (1 + tr[rho sigma])/2."""
    ov = state_overlap(source.draw(rng), source.draw(rng))
    return 0 if rng.random() < 0.5 * (1.0 + ov) else 1


def estimate_purity(source, shots: int, rng) -> tuple[float, float]:
    """Mean of the +/-1-mapped shot outcomes and its standard error."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if hasattr(source, "pair_overlap_batch"):
        overlaps = source.pair_overlap_batch(rng, shots)
        outcomes = np.where(rng.random(shots) < 0.5 * (1.0 + overlaps), 1.0, -1.0)
    else:
        outcomes = np.array([1.0 - 2.0 * swap_test_shot(source, rng) for _ in range(shots)])
    gamma_hat = float(outcomes.mean())
    stderr = float(outcomes.std(ddof=1) / math.sqrt(shots)) if shots > 1 else float("nan")
    return gamma_hat, stderr


# ---------------------------------------------------------------------------
# explicit cSWAP circuit (validation route)


def _controlled_swap(psi: StateVector, control: int, pairs) -> StateVector:
    idx = np.arange(psi.dim)
    on = (idx >> control) & 1
    target = idx.copy()
    for a, b in pairs:
        diff = ((target >> a) & 1) ^ ((target >> b) & 1)
        flip = (diff << a) | (diff << b)
        target = np.where(on == 1, target ^ flip, target)
    out = np.empty_like(psi.amps)
    out[target] = psi.amps[idx]
    return StateVector(psi.n, out)


def swap_test_circuit_p0(left: StateVector, right: StateVector, swap_qubits=None) -> float:
    """P(ancilla = 0) from the explicit H-cSWAP-H circuit on two pure preparations.

    ``swap_qubits`` selects which qubits of each register enter the swap
    (default: all), which is how the coherent method tests only one marginal.
    """
    if left.n != right.n:
        raise DimensionError("the two preparations must have equal qubit counts")
    m = left.n
    if swap_qubits is None:
        swap_qubits = range(m)
    full = StateVector(
        2 * m + 1,
        np.kron(np.array([1.0, 0.0]), np.kron(left.amps, right.amps)),
    )
    anc = 2 * m
    full = hadamard_layer(full, [anc])
    # left register sits on qubits m..2m-1, right register on 0..m-1
    full = _controlled_swap(full, anc, [(m + q, q) for q in swap_qubits])
    full = hadamard_layer(full, [anc])
    amps = full.amps.reshape(2, 1 << (2 * m))
    return float(np.vdot(amps[0], amps[0]).real)


class FullCircuitPairSource:
    """Shot source that runs the explicit cSWAP circuit on two drawn preparations."""

    def __init__(self, draw_fn, swap_qubits=None):
        self.draw_fn = draw_fn
        self.swap_qubits = swap_qubits

    def pair_overlap_batch(self, rng, shots: int) -> np.ndarray:
        # p0 = (1 + overlap)/2, so report overlap = 2 p0 - 1 per shot.
        out = np.empty(shots)
        for i in range(shots):
            p0 = swap_test_circuit_p0(self.draw_fn(rng), self.draw_fn(rng), self.swap_qubits)
            out[i] = 2.0 * p0 - 1.0
        return out
