"""End-to-end estimation: from (state, alpha, epsilon, delta, method, seed)
to an estimate of A_alpha and M_alpha.

The B-register marginal is the default purity target for the coherent method;
``marginal="ancilla"`` switches to the ancilla marginal (both encode A_alpha).
M_alpha is derived from the aggregated a_hat, never per shot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import (
    PreparationMethod,
    ancilla_marginal_of,
    coherent_prepare,
    copies_marginal,
    exact_channel_output,
    incoherent_sample,
)
from .estimation import (
    FullCircuitPairSource,
    IncoherentPairSource,
    StaticSource,
    copies_required,
    estimate_purity,
)
from .states import StateVector, purity


@dataclass(frozen=True)
class EstimationRequest:
    state: StateVector
    alpha: int
    epsilon: float
    delta: float
    method: PreparationMethod
    seed: int
    state_spec: str = ""
    marginal: str = "copies"  # "copies" or "ancilla"; coherent method only
    shots: int | None = None  # None: full budget; 0: analytic (no sampling)
    full_circuit: bool = False  # explicit-cSWAP validation route (n=1, alpha=2)

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError(f"alpha must be >= 1, got {self.alpha}")
        if not 0 < self.epsilon <= 1 or not 0 < self.delta <= 1:
            raise ValueError("epsilon and delta must lie in (0, 1]")
        if self.marginal not in ("copies", "ancilla"):
            raise ValueError(f"unknown marginal {self.marginal!r}")
        if self.full_circuit and (self.state.n != 1 or self.alpha != 2):
            raise ValueError("full-circuit mode is provided for n=1, alpha=2 only")


@dataclass(frozen=True)
class EstimateReport:
    """Result of one estimation run.

    For swap-test runs copies_used = 2 alpha shots_used; the direct
    estimators in bench fill these fields with their own accounting.
    a_hat = d * gamma_hat always, and estimates are reported raw (clipping
    would bias small values; consumers get stderr instead).
    """

    gamma_hat: float
    gamma_stderr: float
    a_hat: float
    m_hat: float | None
    alpha: int
    shots_used: int
    copies_used: int
    seed: int
    method: str
    state_spec: str = ""
    marginal: str = "copies"


def m_from_a(a: float, alpha: int) -> float:
    if alpha < 2:
        raise ValueError(f"M_alpha needs alpha >= 2, got {alpha}")
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    return math.log(a) / (1 - alpha)


def _build_source(req: EstimationRequest):
    psi, alpha = req.state, req.alpha
    if req.method is PreparationMethod.EXACT_MIXTURE:
        return StaticSource(exact_channel_output(psi, alpha))
    if req.method is PreparationMethod.COHERENT:
        prepared = coherent_prepare(psi, alpha)
        if req.full_circuit:
            keep = (
                range(alpha * psi.n)
                if req.marginal == "copies"
                else range(alpha * psi.n, (alpha + 2) * psi.n)
            )
            return FullCircuitPairSource(lambda rng: prepared, list(keep))
        if req.marginal == "ancilla":
            return StaticSource(ancilla_marginal_of(prepared, psi.n, alpha))
        return StaticSource(copies_marginal(prepared, psi.n, alpha))
    if req.method is PreparationMethod.INCOHERENT:
        if req.full_circuit:
            return FullCircuitPairSource(lambda rng: incoherent_sample(psi, alpha, rng))
        return IncoherentPairSource(psi, alpha)
    raise ValueError(f"unknown method {req.method!r}")


def run_estimation(req: EstimationRequest) -> EstimateReport:
    d = req.state.dim
    budget = copies_required(req.alpha, d, req.epsilon, req.delta)
    shots = budget.swap_shots if req.shots is None else req.shots
    rng = np.random.default_rng(np.random.SeedSequence(req.seed))

    if shots == 0:
        # analytic mode: the exact purity of the prepared state, no sampling
        gamma_hat = purity(exact_channel_output(req.state, req.alpha))
        stderr = 0.0
    else:
        source = _build_source(req)
        gamma_hat, stderr = estimate_purity(source, shots, rng)

    a_hat = d * gamma_hat
    m_hat = None
    if req.alpha >= 2 and a_hat > 0:
        m_hat = m_from_a(a_hat, req.alpha)
    return EstimateReport(
        gamma_hat=gamma_hat,
        gamma_stderr=stderr,
        a_hat=a_hat,
        m_hat=m_hat,
        alpha=req.alpha,
        shots_used=shots,
        copies_used=2 * req.alpha * shots,
        seed=req.seed,
        method=req.method.value,
        state_spec=req.state_spec,
        marginal=req.marginal,
    )
