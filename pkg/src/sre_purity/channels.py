"""Preparations of the Pauli-averaged state on alpha copies.

The channel applies every Pauli string with probability d^{-2} to all alpha
copies of a pure input state.  Its output encodes A_alpha into the purity:
d * tr[output^2] = A_alpha.  Three routes are provided:

* ``exact_channel_output`` — the d^2-term mixture, accumulated one pure term
  at a time (the dense sum is never stored term-by-term);
* ``coherent_prepare`` — the ancilla circuit: 2n ancillas in uniform
  superposition controlling the string applied to every copy;
* ``incoherent_sample`` — one uniformly drawn string applied to all copies.
  The returned sample deliberately carries no record of which string was
  drawn; estimators may consume it only as an opaque state.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import SizeGuardError
from .paulis import enumerate_paulis, pauli_from_index
from .states import (
    MAX_DENSE_DIM,
    MAX_PURE_QUBITS,
    DensityMatrix,
    StateVector,
    apply_pauli,
    controlled_pauli_power,
    hadamard_layer,
    pauli_expval,
    reduced_density_matrix,
    tensor_power,
    zero_state,
)


class PreparationMethod(enum.Enum):
    EXACT_MIXTURE = "exact_mixture"
    COHERENT = "coherent"
    INCOHERENT = "incoherent"


def _check_alpha(alpha: int) -> None:
    if not isinstance(alpha, (int, np.integer)) or alpha < 1:
        raise ValueError(f"alpha must be a positive integer, got {alpha!r}")


def exact_channel_output(psi: StateVector, alpha: int) -> DensityMatrix:
    """d^{-2} sum_j (P_j psi P_j)^{(x) alpha} as a dense density matrix."""
    _check_alpha(alpha)
    n, d = psi.n, psi.dim
    if (1 << (alpha * n)) > MAX_DENSE_DIM:
        raise SizeGuardError(
            f"channel output dimension 2^{alpha * n} exceeds {MAX_DENSE_DIM}"
        )
    dim = 1 << (alpha * n)
    out = np.zeros((dim, dim), dtype=complex)
    for p in enumerate_paulis(n):
        term = tensor_power(apply_pauli(p, psi), alpha).amps
        out += np.outer(term, term.conj())
    return DensityMatrix(alpha * n, out / d**2)


def coherent_layout(n: int, alpha: int):
    """(ancilla qubits, copy blocks) for the canonical register layout.

    The ancilla sits in the most-significant 2n positions; copy block B_i
    occupies the i-th most significant n-qubit block below it.
    """
    ancilla = tuple(range(alpha * n, alpha * n + 2 * n))
    blocks = [tuple(range((alpha - i) * n, (alpha - i + 1) * n)) for i in range(1, alpha + 1)]
    return ancilla, blocks


def coherent_prepare(psi: StateVector, alpha: int) -> StateVector:
    """Ancilla-circuit preparation: cU_P (H^{(x)2n} (x) I) |0...0>|psi>^{(x)alpha}."""
    _check_alpha(alpha)
    n = psi.n
    total = (2 + alpha) * n
    if total > MAX_PURE_QUBITS:
        raise SizeGuardError(f"{total} qubits exceed the guard ({MAX_PURE_QUBITS})")
    ancilla, blocks = coherent_layout(n, alpha)
    full = StateVector(
        total, np.kron(zero_state(2 * n).amps, tensor_power(psi, alpha).amps)
    )
    full = hadamard_layer(full, ancilla)
    return controlled_pauli_power(full, ancilla, blocks)


def copies_marginal(prepared: StateVector, n: int, alpha: int) -> DensityMatrix:
    """Reduced state of a coherent preparation on the copy register."""
    return reduced_density_matrix(prepared, range(alpha * n))


def ancilla_marginal_of(prepared: StateVector, n: int, alpha: int) -> DensityMatrix:
    """Reduced state of a coherent preparation on the 2n ancilla qubits."""
    return reduced_density_matrix(prepared, range(alpha * n, (alpha + 2) * n))


def ancilla_marginal(psi: StateVector, alpha: int) -> DensityMatrix:
    """Ancilla reduced state by direct formula: d^{-2} tr[P_j P_i psi]^alpha |i><j|.

    Cross-checked in tests against tracing the coherent preparation; its
    purity is d^{-1} A_alpha as well.
    """
    _check_alpha(alpha)
    n, d = psi.n, psi.dim
    if 4**n > MAX_DENSE_DIM:
        raise SizeGuardError(f"ancilla dimension 4^{n} exceeds {MAX_DENSE_DIM}")
    e = np.array([pauli_expval(p, psi) for p in enumerate_paulis(n)])
    idx = np.arange(d * d)
    x_mask = idx & (d - 1)
    z_mask = idx >> n
    canon_phase = np.bitwise_count(x_mask & z_mask) % 4
    # rows are i, columns j; P_j P_i = i^theta P_{i^j} with
    # theta = pe_j + pe_i + 2 |z_j & x_i| - pe_{i^j}  (mod 4)
    row_i, col_j = np.meshgrid(idx, idx, indexing="ij")
    swaps = np.bitwise_count(z_mask[col_j] & x_mask[row_i])
    theta = (canon_phase[col_j] + canon_phase[row_i] + 2 * swaps - canon_phase[row_i ^ col_j]) % 4
    phases = np.array([1.0, 1.0j, -1.0, -1.0j])[theta]
    mat = (phases * e[row_i ^ col_j]) ** alpha
    return DensityMatrix(2 * n, mat / d**2)


def incoherent_sample(psi: StateVector, alpha: int, rng: np.random.Generator) -> StateVector:
    """P_j^{(x)alpha} |psi>^{(x)alpha} for one uniformly drawn string (index forgotten)."""
    _check_alpha(alpha)
    if alpha * psi.n > MAX_PURE_QUBITS:
        raise SizeGuardError(f"{alpha * psi.n} qubits exceed the guard ({MAX_PURE_QUBITS})")
    j = int(rng.integers(4**psi.n))
    return tensor_power(apply_pauli(pauli_from_index(psi.n, j), psi), alpha)
