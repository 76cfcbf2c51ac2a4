"""Exact n-qubit Pauli-string algebra in symplectic (x-mask, z-mask, phase) form.

Conventions used throughout the package:

* Qubit ``q`` corresponds to bit ``q`` of every integer mask and of every
  amplitude index (qubit 0 is the least significant bit).
* A ``PauliString`` with masks ``(x, z)`` and phase exponent ``p`` represents
  the operator ``i**p * prod_q X_q**x_q Z_q**z_q`` (on each qubit the X factor
  is applied after the Z factor).  With this base, ``Y = i * X * Z``, so the
  canonical Hermitian string carries ``phase_exp = popcount(x & z) mod 4``.
* Canonical index of a string: ``j = x | (z << n)``.  For one qubit this
  enumerates I, X, Z, Y (indices 0..3).  Index 0 is always the identity.

The canonical order is a package choice (the set of strings is what matters);
every exported quantity is invariant under re-enumeration, which the test
suite asserts explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SizeGuardError

# Single-string operations are capped here; larger systems are out of scope.
MAX_QUBITS = 12

_PAULI_CHARS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


def _check_n(n: int) -> None:
    if n < 1:
        raise SizeGuardError(f"qubit count must be >= 1, got {n}")
    if n > MAX_QUBITS:
        raise SizeGuardError(f"qubit count {n} exceeds the size guard ({MAX_QUBITS})")


@dataclass(frozen=True)
class PauliString:
    """An n-qubit Pauli operator ``i**phase_exp * B(x_bits, z_bits)``."""

    n: int
    x_bits: int
    z_bits: int
    phase_exp: int = 0

    def __post_init__(self):
        _check_n(self.n)
        mask = (1 << self.n) - 1
        if not (0 <= self.x_bits <= mask and 0 <= self.z_bits <= mask):
            raise ValueError("bit masks do not fit in n bits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def index(self) -> int:
        """Canonical enumeration index of the underlying string (phase ignored)."""
        return self.x_bits | (self.z_bits << self.n)

    @property
    def y_count(self) -> int:
        return (self.x_bits & self.z_bits).bit_count()

    @property
    def phase(self) -> complex:
        return 1j ** self.phase_exp

    def is_hermitian(self) -> bool:
        # i**p B is Hermitian iff p and the Y-count have equal parity.
        return (self.phase_exp - self.y_count) % 2 == 0

    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0 and self.phase_exp == 0

    def label(self) -> str:
        """Character per qubit, qubit 0 leftmost (phase not shown)."""
        return "".join(
            _PAULI_CHARS[(self.x_bits >> q & 1, self.z_bits >> q & 1)]
            for q in range(self.n)
        )

    def to_dense(self) -> np.ndarray:
        """Dense 2^n x 2^n matrix; intended for small n cross-checks."""
        if self.n > 10:
            raise SizeGuardError("dense form restricted to n <= 10")
        dim = 1 << self.n
        rows = np.arange(dim) ^ self.x_bits
        signs = 1.0 - 2.0 * (np.bitwise_count(np.arange(dim) & self.z_bits) & 1)
        mat = np.zeros((dim, dim), dtype=complex)
        mat[rows, np.arange(dim)] = self.phase * signs
        return mat


def pauli_from_index(n: int, index: int) -> PauliString:
    """Canonical Hermitian string number ``index`` (0 <= index < 4^n)."""
    _check_n(n)
    if not 0 <= index < 4**n:
        raise ValueError(f"Pauli index {index} out of range for n={n}")
    x = index & ((1 << n) - 1)
    z = index >> n
    return PauliString(n, x, z, (x & z).bit_count() % 4)


def enumerate_paulis(n: int) -> list[PauliString]:
    """All 4^n Hermitian Pauli strings in canonical order (index 0 = identity)."""
    _check_n(n)
    return [pauli_from_index(n, j) for j in range(4**n)]


def pauli_mul(a: PauliString, b: PauliString) -> PauliString:
    """Product a @ b with exact phase tracking; masks combine by XOR."""
    if a.n != b.n:
        raise DimensionError(f"qubit counts differ: {a.n} vs {b.n}")
    # Commuting Z factors of a past X factors of b gives (-1)^{|z_a & x_b|}.
    swaps = (a.z_bits & b.x_bits).bit_count()
    phase = (a.phase_exp + b.phase_exp + 2 * swaps) % 4
    return PauliString(a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits, phase)


def apply_pauli_amps(p: PauliString, amps: np.ndarray) -> np.ndarray:
    """Apply p to a raw amplitude vector (signed/phased permutation)."""
    dim = 1 << p.n
    if amps.shape != (dim,):
        raise DimensionError(f"amplitude vector has wrong length for n={p.n}")
    src = np.arange(dim) ^ p.x_bits
    signs = 1.0 - 2.0 * (np.bitwise_count(src & p.z_bits) & 1)
    return p.phase * signs * amps[src]


def expectation(p: PauliString, amps: np.ndarray) -> complex:
    """<psi|P|psi> as a complex number (P need not be Hermitian-canonical)."""
    return complex(np.vdot(amps, apply_pauli_amps(p, amps)))


def expval(p: PauliString, amps: np.ndarray, imag_tol: float = 1e-10) -> float:
    """Real expectation value of a Hermitian string on a normalized state."""
    val = expectation(p, amps)
    if abs(val.imag) > imag_tol:
        raise ArithmeticError(
            f"expectation value has imaginary residual {val.imag:.3e} "
            f"(string {p.label()}, phase_exp {p.phase_exp})"
        )
    return val.real
